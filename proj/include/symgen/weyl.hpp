#pragma once

#include <vector>

#include <Eigen/Core>

#include "symgen/perm_group.hpp"
#include "symgen/presentation.hpp"

namespace symgen {

/// A simply laced Weyl group acting on its roots.  Diagram nodes are
/// numbered so that 0 .. rank-2 form a path and node rank-1 hangs off
/// `branch` (0 for A, 1 for D, 2 for E); the progenitor generators
/// s_1 .. s_{rank-1}, t follow the same numbering.
struct WeylGroup {
  char type;
  std::size_t rank;
  Eigen::MatrixXi cartan;              // rank x rank, 2 on the diagonal, -1 on edges
  std::vector<Eigen::VectorXi> roots;  // coordinates in the simple roots
  std::vector<Permutation> reflections;  // simple reflections on the roots
  PermutationGroup group() const { return PermutationGroup(roots.size(), reflections); }
};

/// type in {A, D, E}; A needs rank >= 1, D rank >= 4, E rank 6..8.
/// Throws std::invalid_argument otherwise.
WeylGroup weyl_oracle(char type, std::size_t rank);

/// m(i, j) of the Coxeter diagram: 1 on the diagonal, 3 on edges, 2 elsewhere.
std::vector<std::vector<int>> coxeter_matrix(const WeylGroup& w);

/// True when the permutations satisfy (x_i x_j)^m(i,j) = 1 for all i, j.
bool satisfies_coxeter_relations(const std::vector<Permutation>& images, const std::vector<std::vector<int>>& m);

}  // namespace symgen
