#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symgen/perm_group.hpp"
#include "symgen/permutation.hpp"

namespace symgen {

/// A tuple of point sets over the base points (bit i = base point i).
using SetTuple = std::vector<std::uint32_t>;

/// How a base permutation group acts on a finite labeled set.  Copies share state.
class Action {
 public:
  using Induce = std::function<Permutation(const Permutation&)>;
  using Finder = std::function<std::optional<Point>(std::string_view)>;
  using PointImage = std::function<Point(Point, const Permutation&)>;

  Action(std::string kind, std::size_t base_degree, std::size_t degree, Induce induce,
         std::vector<std::string> labels, Finder finder = {}, PointImage image = {});

  const std::string& kind() const noexcept { return kind_; }
  std::size_t base_degree() const noexcept { return base_degree_; }
  std::size_t degree() const noexcept { return degree_; }

  /// Image of a base permutation; throws std::invalid_argument when the base
  /// permutation does not preserve the acted-on set.
  Permutation induce(const Permutation& base) const { return induce_(base); }
  std::vector<Permutation> induce(const std::vector<Permutation>& base) const;
  /// Image of one point; cheaper than induce() when the action provides it.
  Point image(Point p, const Permutation& base) const { return image_ ? image_(p, base) : induce_(base)(p); }

  const std::string& label(Point p) const { return (*labels_)[p]; }
  /// Resolves a label; `#k` (1-based) always works.
  std::optional<Point> find(std::string_view label) const;

 private:
  std::string kind_;
  std::size_t base_degree_;
  std::size_t degree_;
  Induce induce_;
  std::shared_ptr<const std::vector<std::string>> labels_;
  Finder finder_;
  PointImage image_;
};

/// Point alphabet used for labels when the base degree is at most 12:
/// 1..9, then 0 for 10, x for 11 and y for 12.
std::string point_label(Point p, std::size_t base_degree);
std::string set_label(std::uint32_t mask, std::size_t base_degree);

/// Action on an explicit family of set tuples.  When `unordered`, the sets in
/// a tuple are compared as a multiset (partitions, trios); otherwise in order.
Action family_action(std::string kind, std::size_t base_degree, std::vector<SetTuple> objects,
                     bool unordered);

Action natural_action(std::size_t n);
/// k-subsets in lexicographic order; point 0 is {0..k-1}.
Action subsets_action(std::size_t n, std::size_t k);
/// Set partitions of {0..n-1} into blocks of the given sizes.
Action partitions_action(std::size_t n, const std::vector<std::size_t>& shape);
/// Disjoint union; point labels are kept and must stay unambiguous.
Action union_action(const std::vector<Action>& parts);
/// Right cosets H g of `subgroup` in `group`; point 0 is H itself.
Action coset_space_action(const PermutationGroup& group, const PermutationGroup& subgroup);
/// The base representation itself, labeled 1..n.
Action identity_action(std::size_t n);

/// Image of a point set under a permutation.
std::uint32_t image_mask(const Permutation& g, std::uint32_t mask);

}  // namespace symgen
