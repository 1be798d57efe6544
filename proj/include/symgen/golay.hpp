#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symgen/action.hpp"
#include "symgen/perm_group.hpp"

namespace symgen {

/// A subset of the 24 points, bit i = point i.
using Block24 = std::uint32_t;
inline constexpr Block24 kAll24 = (1u << 24) - 1;

/// The extended binary Golay code, built as the length-24 lexicode of distance 8.
class GolayCode {
 public:
  /// Builds and self-checks the code (linearity and weight distribution).
  static const GolayCode& instance();

  const std::array<Block24, 12>& basis() const noexcept { return basis_; }
  const std::vector<Block24>& codewords() const noexcept { return words_; }
  /// Weight-8 words, sorted numerically.
  const std::vector<Block24>& octads() const noexcept { return octads_; }
  /// Weight-12 words, sorted numerically.
  const std::vector<Block24>& dodecads() const noexcept { return dodecads_; }
  bool contains(Block24 w) const;
  /// Count of codewords per weight 0..24.
  std::array<std::size_t, 25> weight_distribution() const;

 private:
  GolayCode();
  std::array<Block24, 12> basis_{};
  std::vector<Block24> words_;
  std::vector<Block24> octads_;
  std::vector<Block24> dodecads_;
};

/// True iff every 5-subset of the 24 points lies in exactly one of the blocks.
bool steiner_check(const std::vector<Block24>& octads);
bool steiner_check(const GolayCode& code);

/// A partition of the 24 points into three octads, stored in increasing order.
using Trio = std::array<Block24, 3>;
std::vector<Trio> trios(const GolayCode& code);

/// M24 from embedded generators; throws std::logic_error if they fail to
/// preserve the octads or to generate a group of the right order.
const PermutationGroup& m24();
inline const Integer kM24Order{244823040};
/// Pointwise stabilizer of the distinct points a and b in M24.
PermutationGroup m22(Point a, Point b);

/// Actions of M24 (or any subgroup) on Golay-code objects.
Action octad_action(const GolayCode& code);
Action dodecad_action(const GolayCode& code);
Action trio_action(const GolayCode& code);

/// The 672 dodecads containing a but not b, with the M22 fixing a and b.
struct DodecadFamily {
  Point a;
  Point b;
  std::vector<Block24> dodecads;
  PermutationGroup m22;
  Action action;
  /// The image of M22 in the action on the family.
  PermutationGroup induced() const;
};
DodecadFamily dodecads_672(const GolayCode& code, Point a, Point b);

/// Dodecads of the family meeting the representative family[rep] in 8 points,
/// split into orbits of the stabilizer of the representative.
struct DodecadPairs {
  Point rep;
  std::vector<Point> meeting_in_8;
  std::vector<std::vector<Point>> orbits;
  /// |family[rep] ∩ B| -> number of B in the family.
  std::map<int, std::size_t> intersection_sizes;
};
DodecadPairs dodecad_pairs_meeting_in_8(const DodecadFamily& family, Point rep = 0);

/// 24-character bitstring, bit 0 leftmost.
std::string bitstring(Block24 w);
/// All codewords, one per line: octads first, then the rest, each sorted numerically.
std::string golay_dump(const GolayCode& code);

}  // namespace symgen
