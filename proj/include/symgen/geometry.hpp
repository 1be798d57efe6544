#pragma once

#include <cstdint>
#include <vector>

#include "symgen/action.hpp"
#include "symgen/perm_group.hpp"

namespace symgen {

/// GL4(2) on the 15 nonzero vectors of GF(2)^4; vector v is point v-1.
PermutationGroup gl4_2();

/// Planes (2-dimensional subspaces) and matchsticks (plane, point on it) of GF(2)^4.
struct MatchstickGeometry {
  PermutationGroup group;           // GL4(2) on 15 points
  std::vector<std::uint32_t> planes;  // 3-point masks over the 15 points
  Action plane_action;              // degree 35
  Action matchstick_action;         // degree 105, labels "plane|point"
};
MatchstickGeometry matchsticks();

/// L3(2) on the 7 points of the Fano plane.
PermutationGroup l3_2();

/// L2(16):4 on the projective line over GF(16); point 16 is infinity.
PermutationGroup l2_16_4();
/// The normalizer 17:8 of a Sylow 17-subgroup of L2(16):4.
PermutationGroup l2_16_4_normalizer_17();
/// L2(16):4 acting on the 120 cosets of 17:8.
Action l2_16_4_on_120();

}  // namespace symgen
