#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "symgen/perm_group.hpp"
#include "symgen/presentation.hpp"

namespace symgen {

enum class Strategy { felsch, hlt_lookahead };

struct EnumerationLimits {
  std::size_t max_cosets = 5'000'000;
  Strategy strategy = Strategy::felsch;
};

struct EnumerationStats {
  std::size_t defined = 0;   // cosets ever defined
  std::size_t max_live = 0;  // high-water mark of live cosets
  std::size_t merges = 0;    // primary and secondary coincidences
  std::size_t live = 0;      // live cosets at the end
  std::size_t compactions = 0;
  std::size_t lookaheads = 0;
};

/// The enumeration hit `max_cosets`: the index may be infinite, or the cap too low.
struct Overflow {
  EnumerationStats stats;
  std::size_t max_cosets = 0;
  std::string message() const;
};

/// A complete, compacted coset table in standard (BFS) numbering.  Coset 0 is
/// the subgroup; rows hold the action of every generator and inverse.
class CosetTable {
 public:
  std::size_t index() const noexcept { return index_; }
  std::size_t num_generators() const noexcept { return ngens_; }
  const EnumerationStats& stats() const noexcept { return stats_; }

  /// Image of coset c under a letter (generator or inverse).
  std::uint32_t act(std::uint32_t c, Letter x) const {
    return table_[static_cast<std::size_t>(c) * 2 * ngens_ + column(x)];
  }
  std::uint32_t act(std::uint32_t c, const Word& w) const {
    for (Letter x : w) c = act(c, x);
    return c;
  }
  /// Coset permutation of generator g (0-based).
  Permutation generator_permutation(std::size_t g) const;

  /// The word reaching coset c from coset 0 along the BFS tree; throws
  /// std::out_of_range for c >= index().
  Word representative_word(std::uint32_t c) const;
  /// BFS parent and the letter used to reach c (c > 0).
  std::uint32_t parent(std::uint32_t c) const { return parent_[c]; }
  Letter parent_letter(std::uint32_t c) const { return parent_letter_[c]; }

  /// Every relator traces to the identity from every coset, and every
  /// subgroup generator fixes coset 0.
  bool verify(const Presentation& p, const std::vector<Word>& subgroup) const;

  /// A table from a transitive permutation action, renumbered breadth first
  /// from point 0.  Throws std::invalid_argument when the action is not
  /// transitive or the degrees differ.
  static CosetTable from_permutations(const std::vector<Permutation>& generators, EnumerationStats stats = {});

 private:
  friend class CosetEnumerator;
  std::size_t column(Letter x) const noexcept {
    return x >= 0 ? 2 * static_cast<std::size_t>(x) : 2 * static_cast<std::size_t>(~x) + 1;
  }

  std::size_t index_ = 0;
  std::size_t ngens_ = 0;
  std::vector<std::uint32_t> table_;  // index_ x 2*ngens_
  std::vector<std::uint32_t> parent_;
  std::vector<Letter> parent_letter_;
  EnumerationStats stats_;
};

using EnumerationResult = std::variant<CosetTable, Overflow>;

/// Todd-Coxeter enumeration of the cosets of <subgroup> in the group presented by p.
/// Throws std::invalid_argument for words over undeclared generators.
EnumerationResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                               const EnumerationLimits& limits = {});

/// Permutation action on the cosets, one generator per presentation generator.
PermutationGroup coset_action(const CosetTable& t);

inline bool is_overflow(const EnumerationResult& r) { return std::holds_alternative<Overflow>(r); }

}  // namespace symgen
