#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "symgen/permutation.hpp"

using namespace symgen;

TEST_CASE("composition acts left to right") {
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  // (a*b)(x) = b(a(x)): 0 -> 1 -> 2
  CHECK((a * b)(0) == 2);
  CHECK((a * a).is_identity());
  auto c = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK(c * c == Permutation::from_cycles(3, {{0, 2, 1}}));
}

TEST_CASE("inverse law on random degree-24 permutations") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    std::vector<Point> img(24);
    for (Point x = 0; x < 24; ++x) img[x] = x;
    std::shuffle(img.begin(), img.end(), rng);
    Permutation a(img);
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
  }
}

TEST_CASE("degree mismatch is rejected") {
  CHECK_THROWS_AS(Permutation(3) * Permutation(4), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("cycle notation is 1-based") {
  auto p = parse_cycles("(1 2 3)(4 5)", 6);
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(p(3) == 4);
  CHECK(p(5) == 5);
  CHECK(to_cycle_string(p) == "(1 2 3)(4 5)");
  CHECK(to_cycle_string(Permutation(5)) == "()");
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(parse_cycles("(1,2)", 3) == parse_cycles("(1 2)", 3));
  CHECK_THROWS(parse_cycles("(1 7)", 6));
  CHECK_THROWS(parse_cycles("(1 2", 6));
  CHECK_THROWS(parse_cycles("(1 2 1)", 6));
}

TEST_CASE("conjugation relabels points") {
  auto a = Permutation::from_cycles(5, {{0, 1}});
  auto g = Permutation::from_cycles(5, {{1, 2, 3}});
  // g^-1 (0 1) g = (g(0) g(1)) = (0 2)
  CHECK(conjugate(a, g) == Permutation::from_cycles(5, {{0, 2}}));
  CHECK(conjugate(a, g) == g.inverse() * a * g);
  CHECK(Permutation::from_cycles(6, {{0, 1, 2, 3}, {4, 5}}).order() == 4);
  CHECK(a.power(-3) == a);
}
