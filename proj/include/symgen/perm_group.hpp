#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "symgen/permutation.hpp"
#include "symgen/stabilizer_chain.hpp"

namespace symgen {

/// A permutation group given by generators.  Immutable after construction;
/// the stabilizer chain is built once on first use and shared by copies.
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::optional<Integer> order_bound = std::nullopt);

  static PermutationGroup trivial(std::size_t degree);
  static PermutationGroup symmetric(std::size_t n);
  static PermutationGroup alternating(std::size_t n);
  static PermutationGroup cyclic(std::size_t n);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::optional<Integer>& order_bound() const noexcept { return order_bound_; }

  const StabilizerChain& chain() const;
  /// A fresh chain whose base starts with `prefix`.
  StabilizerChain chain_with_base(std::span<const Point> prefix) const;

  Integer order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }
  bool is_trivial() const;
  bool is_subgroup_of(const PermutationGroup& g) const;

  std::vector<Point> orbit(Point x) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// Pointwise stabilizer of `points`.
  PermutationGroup point_stabilizer(std::span<const Point> points) const;

  Permutation random_element(std::mt19937_64& rng) const { return chain().random_element(rng); }
  /// Visits every element; only sensible for small groups.
  void for_each_element(const std::function<void(const Permutation&)>& f) const;
  std::vector<Permutation> elements() const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::optional<Integer> order_bound_;
  std::shared_ptr<Cache> cache_;
};

/// C_g(h) by backtrack over a chain of g whose base follows h's orbits.
/// Throws std::invalid_argument unless h <= g.
PermutationGroup centralizer(const PermutationGroup& g, const PermutationGroup& h);

PermutationGroup normal_closure(const PermutationGroup& g, std::vector<Permutation> generators);
PermutationGroup derived_subgroup(const PermutationGroup& g);
/// The smallest block of imprimitivity containing a and b (sorted).
std::vector<Point> minimal_block(const PermutationGroup& g, Point a, Point b);
/// Transitive with no nontrivial block system.
bool is_primitive(const PermutationGroup& g);

/// |g| / |g'|
Integer abelianization_order(const PermutationGroup& g);

}  // namespace symgen
