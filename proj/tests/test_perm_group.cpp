#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "symgen/perm_group.hpp"

using namespace symgen;

namespace {

std::vector<Permutation> all_elements_brute(std::size_t n) {
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Closure of a generating set by repeated multiplication.
std::set<Permutation> closure_brute(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> todo{Permutation(n)};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      auto y = x * g;
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("orders from stabilizer chains") {
  CHECK(PermutationGroup::symmetric(4).order() == 24);
  CHECK(PermutationGroup(4, PermutationGroup::symmetric(4).generators()).order() == 24);
  CHECK(PermutationGroup::alternating(5).order() == 60);
  CHECK(PermutationGroup(10, PermutationGroup::symmetric(10).generators()).order() == 3628800);
  CHECK(PermutationGroup::cyclic(6).order() == 6);
  CHECK(PermutationGroup::trivial(3).order() == 1);
}

TEST_CASE("chain invariants: transversal product and sifting") {
  PermutationGroup g(8, {parse_cycles("(1 2 3 4 5 6 7)", 8), parse_cycles("(2 3 5)(4 7 6)", 8),
                         parse_cycles("(1 8)(2 4)(3 7)(5 6)", 8)});
  // AGL(1,8)-like groups aside, this generates L_3(2) acting on 8 points (order 168).
  const auto& ch = g.chain();
  Integer prod = 1;
  for (std::size_t i = 0; i < ch.length(); ++i) prod *= ch.orbit(i).size();
  CHECK(prod == g.order());
  for (const auto& s : g.generators()) CHECK(g.contains(s));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Permutation w(8);
    for (int k = 0; k < 12; ++k) w = w * g.generators()[rng() % g.generators().size()];
    CHECK(g.contains(w));
  }
  CHECK(g.order() == static_cast<long>(closure_brute(8, g.generators()).size()));
  CHECK_FALSE(g.contains(parse_cycles("(1 2)", 8)));
}

TEST_CASE("orbits and transitivity") {
  auto s4 = PermutationGroup::symmetric(4);
  auto orb = s4.orbit(0);
  CHECK(std::set<Point>(orb.begin(), orb.end()) == std::set<Point>{0, 1, 2, 3});
  CHECK(s4.is_transitive());
  PermutationGroup small(3, {parse_cycles("(1 2)", 3)});
  CHECK(small.orbit(2) == std::vector<Point>{2});
  CHECK_FALSE(small.is_transitive());
  CHECK_THROWS_AS(small.orbit(3), std::out_of_range);
}

TEST_CASE("point stabilizers and orbit-stabilizer") {
  auto s4 = PermutationGroup::symmetric(4);
  std::vector<Point> p0{0};
  CHECK(s4.point_stabilizer(p0).order() == 6);
  std::vector<Point> all{0, 1, 2, 3};
  CHECK(s4.point_stabilizer(all).order() == 1);
  auto a6 = PermutationGroup::alternating(6);
  for (Point x = 0; x < 6; ++x) {
    std::vector<Point> px{x};
    CHECK(a6.point_stabilizer(px).order() * a6.orbit(x).size() == a6.order());
  }
}

TEST_CASE("centralizers agree with brute force") {
  auto s4 = PermutationGroup::symmetric(4);
  CHECK(centralizer(s4, s4).order() == 1);
  PermutationGroup t(4, {parse_cycles("(1 2)", 4)});
  auto c = centralizer(s4, t);
  std::size_t brute = 0;
  for (const auto& x : all_elements_brute(4))
    if (x * t.generators()[0] == t.generators()[0] * x) ++brute;
  CHECK(brute == 4);
  CHECK(c.order() == 4);
  CHECK(c.contains(parse_cycles("(3 4)", 4)));
  CHECK(centralizer(s4, PermutationGroup::trivial(4)).order() == 24);
  CHECK_THROWS_AS(centralizer(PermutationGroup::alternating(4), t), std::invalid_argument);

  // Property: brute-force equality on S_6 for a few subgroups.
  auto s6 = PermutationGroup::symmetric(6);
  auto elems = all_elements_brute(6);
  std::vector<PermutationGroup> subs{
      PermutationGroup(6, {parse_cycles("(1 2)(3 4)", 6)}),
      PermutationGroup(6, {parse_cycles("(1 2 3)", 6), parse_cycles("(4 5)", 6)}),
      PermutationGroup(6, {parse_cycles("(1 2 3 4 5 6)", 6)}),
      PermutationGroup(6, {parse_cycles("(1 2)", 6), parse_cycles("(3 4)", 6)})};
  for (const auto& h : subs) {
    auto ch = centralizer(s6, h);
    std::size_t count = 0;
    for (const auto& x : elems) {
      bool ok = true;
      for (const auto& y : h.generators()) ok = ok && (x * y == y * x);
      if (ok) {
        ++count;
        CHECK(ch.contains(x));
      }
    }
    CHECK(ch.order() == count);
  }
}

TEST_CASE("derived subgroups and abelianization") {
  CHECK(abelianization_order(PermutationGroup::alternating(5)) == 1);
  auto s4 = PermutationGroup::symmetric(4);
  // Brute force: the subgroup generated by all commutators.
  auto elems = all_elements_brute(4);
  std::vector<Permutation> comms;
  for (const auto& a : elems)
    for (const auto& b : elems) comms.push_back(commutator(a, b));
  auto derived = closure_brute(4, comms);
  CHECK(derived.size() == 12);
  CHECK(abelianization_order(s4) == 24 / 12);
  CHECK(abelianization_order(PermutationGroup::cyclic(6)) == 6);
}

TEST_CASE("element enumeration matches order") {
  auto a5 = PermutationGroup::alternating(5);
  auto elems = a5.elements();
  CHECK(elems.size() == 60);
  CHECK(std::set<Permutation>(elems.begin(), elems.end()).size() == 60);
}
