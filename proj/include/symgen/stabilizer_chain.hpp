#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symgen/permutation.hpp"

namespace symgen {

using Integer = boost::multiprecision::cpp_int;

struct ChainOptions {
  /// Points that must head the base, in order.
  std::vector<Point> base_prefix;
  /// Only points below this limit may become base points.  Residues that move
  /// no such point mean the action on [0, base_limit) is not faithful.
  Point base_limit = std::numeric_limits<Point>::max();
  /// A known upper bound on the group order.  The randomized phase stops as
  /// soon as the chain reaches it; that certifies the chain.
  std::optional<Integer> order_bound;
  /// Run the deterministic Schreier generator pass when the bound is not hit.
  bool verify = true;
  std::uint64_t seed = 0x5eed'c0de'2024ULL;
};

/// Base and strong generating set with Schreier trees per level.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  const ChainOptions& options = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  Point base_point(std::size_t level) const { return levels_[level].base; }
  std::vector<Point> base() const;
  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  bool in_orbit(std::size_t level, Point x) const {
    return levels_[level].label[x] != kOutside;
  }
  Integer order() const;
  /// True when the chain is known to be complete (bound reached or verified).
  bool certified() const noexcept { return certified_; }

  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }
  /// Strong generators fixing the first `level` base points.
  std::vector<Permutation> level_generators(std::size_t level) const;

  /// u with u(base(level)) == x.
  Permutation transversal(std::size_t level, Point x) const;
  /// Applies r <- r * u_x^-1 in place, walking the Schreier tree.
  void strip(std::size_t level, Point x, std::vector<Point>& r) const;

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting failed, or length()
  };
  SiftResult sift(const Permutation& g) const;
  bool contains(const Permutation& g) const;

  Permutation random_element(std::mt19937_64& rng) const;

 private:
  static constexpr std::int32_t kOutside = -1;
  static constexpr std::int32_t kRoot = -2;

  struct Level {
    Point base;
    std::vector<std::uint32_t> gens;  // indices into strong_
    std::vector<std::int32_t> label;  // strong index reaching the point, kRoot, kOutside
    std::vector<Point> orbit;
  };

  void add_level(Point base);
  void rebuild_level(std::size_t i);
  void add_strong(const Permutation& g, std::size_t upto_level);
  std::size_t sift_in_place(std::vector<Point>& r, std::size_t from_level) const;
  Point new_base_point(const std::vector<Point>& r) const;
  void random_phase(std::span<const Permutation> generators, const ChainOptions& opt);
  void verify_phase();
  bool reached_bound(const ChainOptions& opt) const;

  std::size_t degree_;
  Point base_limit_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
  bool certified_ = false;
};

}  // namespace symgen
