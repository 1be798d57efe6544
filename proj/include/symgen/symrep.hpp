#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "symgen/control.hpp"
#include "symgen/progenitor.hpp"

namespace symgen {

/// pi w: a control element (base permutation) followed by t_{w_1} ... t_{w_k}.
using SymElement = ProgElement;

/// Arithmetic in a target group whose cosets of N have been enumerated.
/// Every element is written pi w with w the breadth-first t-word of its coset.
class SymContext {
 public:
  static constexpr std::size_t kDefaultMaxIndex = 200'000;

  /// Throws std::length_error above `max_index` cosets and std::domain_error
  /// unless N embeds and the action on the cosets is faithful.
  explicit SymContext(const SymEnumeration& e, std::size_t max_index = kDefaultMaxIndex);

  const Progenitor& progenitor() const { return *progenitor_; }
  std::size_t index() const { return words_.size(); }
  /// Longest canonical word (the depth of the breadth-first search over t-edges).
  std::size_t diameter() const { return diameter_; }
  const std::vector<Point>& canonical_word(std::uint32_t coset) const { return words_.at(coset); }

  /// The permutation of the cosets induced by the element (the oracle).
  Permutation image(const SymElement& e) const;
  /// (pi', w') with w' the canonical word of e's coset; throws std::logic_error
  /// if pi' cannot be recovered (a corrupted context).
  SymElement canonicalize(const SymElement& e) const;
  SymElement multiply(const SymElement& a, const SymElement& b) const;
  SymElement invert(const SymElement& a) const;
  SymElement identity() const;
  /// Uniform over the group: a random coset's word preceded by a random element of N.
  SymElement random_element(std::mt19937_64& rng) const;

 private:
  std::shared_ptr<const Progenitor> progenitor_;
  std::vector<Permutation> t_images_;   // t_i on the cosets
  std::vector<std::vector<Point>> words_;
  std::size_t diameter_ = 0;
  std::optional<PairedLifter> to_cosets_;    // base permutation -> cosets
  std::optional<PairedLifter> from_cosets_;  // cosets -> base permutation
};

/// `pi = (1 2)(3 4) ; w = t3 t17 t3`, with 1-based points and t-indices.
std::string format_element(const SymElement& e);
/// Parses the text form; `t[label]` is accepted as well as `tK`.
/// Throws std::invalid_argument on syntax errors or out-of-range indices.
SymElement parse_element(const Progenitor& p, std::string_view text);

}  // namespace symgen
