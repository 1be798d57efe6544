#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "symgen/action.hpp"
#include "symgen/geometry.hpp"
#include "symgen/golay.hpp"

using namespace symgen;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_homomorphism(const Action& act, const PermutationGroup& g) {
  const auto& gs = g.generators();
  for (const auto& a : gs)
    for (const auto& b : gs) CHECK(act.induce(a * b) == act.induce(a) * act.induce(b));
}

}  // namespace

TEST_CASE("subset and partition actions") {
  const auto s10 = PermutationGroup::symmetric(10);
  auto a = subsets_action(10, 4);
  CHECK(a.degree() == 210);
  CHECK(a.degree() == binomial(10, 4));
  CHECK(a.label(0) == "1234");
  CHECK(a.find("1234") == Point{0});
  CHECK(a.find("4321") == Point{0});
  CHECK(a.find("#3") == Point{2});
  CHECK(a.find("7890").has_value());
  CHECK(!a.find("123").has_value());
  CHECK(!a.find("#211").has_value());
  for (Point p = 0; p < a.degree(); ++p) CHECK(a.find(a.label(p)) == p);
  check_homomorphism(a, s10);
  const PermutationGroup img(a.degree(), a.induce(s10.generators()));
  CHECK(img.order() == 3628800);
  CHECK(img.is_transitive());

  CHECK(subsets_action(24, 4).degree() == 10626);
  CHECK(subsets_action(24, 4).find("1.2.3.24").has_value());

  auto p = partitions_action(12, {4, 4, 4});
  CHECK(p.degree() == 5775);  // 12! / (4!^3 3!)
  CHECK(p.label(0) == "1234|5678|90xy");
  CHECK(p.find("90xy|5678|1234") == Point{0});
  const auto s12 = PermutationGroup::symmetric(12);
  CHECK(PermutationGroup(p.degree(), p.induce(s12.generators())).is_transitive());
  CHECK(partitions_action(6, {2, 4}).degree() == 15);
  CHECK_THROWS_AS(partitions_action(6, {2, 2}), std::invalid_argument);
}

TEST_CASE("union actions resolve labels in either part") {
  auto u = union_action({natural_action(7), subsets_action(7, 4)});
  CHECK(u.degree() == 42);
  CHECK(u.find("1") == Point{0});
  CHECK(u.find("1234") == Point{7});
  CHECK(u.find("#8") == Point{7});
  const auto s7 = PermutationGroup::symmetric(7);
  check_homomorphism(u, s7);
  const PermutationGroup img(u.degree(), u.induce(s7.generators()));
  CHECK(img.orbits().size() == 2);
}

TEST_CASE("coset space action matches a brute-force coset enumeration") {
  // Cosets of the stabilizer of a point in S4 correspond to the 4 points.
  const auto s4 = PermutationGroup::symmetric(4);
  const std::array<Point, 1> fix{3};
  const auto h = s4.point_stabilizer(fix);
  auto act = coset_space_action(s4, h);
  CHECK(act.degree() == 4);
  check_homomorphism(act, s4);

  // Oracle: right cosets Hg as explicit sets.
  const auto helems = h.elements();
  std::set<std::set<Permutation>> cosets;
  for (const auto& g : s4.elements()) {
    std::set<Permutation> c;
    for (const auto& x : helems) c.insert(x * g);
    cosets.insert(c);
  }
  CHECK(cosets.size() == act.degree());

  // A non-normal subgroup of A5 of index 6.
  const auto a5 = PermutationGroup::alternating(5);
  const PermutationGroup d10(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                                 Permutation::from_cycles(5, {{1, 4}, {2, 3}})});
  REQUIRE(d10.order() == 10);
  auto act6 = coset_space_action(a5, d10);
  CHECK(act6.degree() == 6);
  const PermutationGroup img(6, act6.induce(a5.generators()));
  CHECK(img.order() == 60);
  CHECK(is_primitive(img));
}

TEST_CASE("block systems") {
  // D8 on 4 points preserves {0,2},{1,3}.
  const PermutationGroup d8(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{1, 3}})});
  CHECK(minimal_block(d8, 0, 2) == std::vector<Point>{0, 2});
  CHECK(!is_primitive(d8));
  CHECK(is_primitive(PermutationGroup::symmetric(5)));
}

TEST_CASE("Golay code and the Steiner system") {
  const auto& code = GolayCode::instance();
  const auto wd = code.weight_distribution();
  CHECK(wd[0] == 1);
  CHECK(wd[8] == 759);
  CHECK(wd[12] == 2576);
  CHECK(wd[16] == wd[8]);
  CHECK(wd[24] == 1);
  CHECK(code.codewords().size() == 4096);
  for (std::size_t i = 0; i < 200; ++i) {
    const auto a = code.codewords()[i * 7 % 4096], b = code.codewords()[i * 13 % 4096];
    CHECK(code.contains(a ^ b));
  }
  CHECK(759 * binomial(8, 5) == binomial(24, 5));
  CHECK(steiner_check(code));
  auto damaged = code.octads();
  damaged.pop_back();
  CHECK(!steiner_check(damaged));

  // Octads meet in 0, 2 or 4 points; octads meeting in 2 give dodecads.
  std::set<int> meets;
  const auto& oct = code.octads();
  for (std::size_t i = 0; i < oct.size(); i += 3)
    for (std::size_t j = i + 1; j < oct.size(); ++j) {
      const int k = std::popcount(oct[i] & oct[j]);
      meets.insert(k);
      if (k == 2) CHECK(std::binary_search(code.dodecads().begin(), code.dodecads().end(), oct[i] ^ oct[j]));
    }
  CHECK(meets == std::set<int>{0, 2, 4});

  const auto dump = golay_dump(code);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 4096);
  CHECK(dump.substr(0, 24) == bitstring(oct[0]));
  CHECK(bitstring(1) == "100000000000000000000000");
}

TEST_CASE("trios") {
  const auto& code = GolayCode::instance();
  const auto ts = trios(code);
  CHECK(ts.size() == 3795);
  for (const auto& t : ts) {
    CHECK((t[0] & t[1]) == 0);
    CHECK((t[1] & t[2]) == 0);
    CHECK((t[0] | t[1] | t[2]) == kAll24);
  }
  // Oracle: each octad lies in 15 trios, so 759 * 15 / 3.
  CHECK(759 * 15 / 3 == 3795);
  auto act = trio_action(code);
  CHECK(act.degree() == 3795);
  const PermutationGroup img(act.degree(), act.induce(m24().generators()));
  CHECK(img.is_transitive());
  CHECK(is_primitive(img));
}

TEST_CASE("M24 and M22") {
  const auto& code = GolayCode::instance();
  const auto& g = m24();
  CHECK(g.order() == 244823040);
  for (const auto& s : g.generators())
    for (auto o : code.octads()) CHECK(std::binary_search(code.octads().begin(), code.octads().end(), image_mask(s, o)));

  // Independent 5-transitivity: orbit of the ordered tuple (0,1,2,3,4).
  std::vector<bool> seen(1u << 25, false);
  auto enc = [](const std::array<Point, 5>& t) {
    std::uint32_t k = 0;
    for (Point x : t) k = k << 5 | x;
    return k;
  };
  std::vector<std::array<Point, 5>> queue{{0, 1, 2, 3, 4}};
  seen[enc(queue[0])] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : g.generators()) {
      std::array<Point, 5> t{};
      for (std::size_t j = 0; j < 5; ++j) t[j] = s(queue[i][j]);
      if (!seen[enc(t)]) {
        seen[enc(t)] = true;
        queue.push_back(t);
      }
    }
  CHECK(queue.size() == 24u * 23 * 22 * 21 * 20);

  const auto h = m22(0, 1);
  CHECK(h.order() == 443520);
  CHECK(h.order() * 24 * 23 == g.order());

  auto oa = octad_action(code);
  const PermutationGroup oimg(759, oa.induce(g.generators()));
  CHECK(oimg.order() == g.order());
  CHECK(dodecad_action(code).degree() == 2576);
}

TEST_CASE("672 dodecads and pairs meeting in eight points") {
  const auto& code = GolayCode::instance();
  const auto fam = dodecads_672(code, 0, 1);
  CHECK(fam.dodecads.size() == 672);
  const auto other = dodecads_672(code, 1, 0);
  std::size_t both_or_neither = 0;
  for (auto d : code.dodecads())
    if (((d & 1u) != 0) == ((d & 2u) != 0)) ++both_or_neither;
  CHECK(fam.dodecads.size() + other.dodecads.size() + both_or_neither == 2576);
  const auto img = fam.induced();
  CHECK(img.is_transitive());
  CHECK(img.order() == 443520);

  const auto pairs = dodecad_pairs_meeting_in_8(fam);
  CHECK(!pairs.meeting_in_8.empty());
  for (Point b : pairs.meeting_in_8) CHECK(std::popcount(fam.dodecads[0] & fam.dodecads[b]) == 8);
  for (const auto& [k, n] : pairs.intersection_sizes) CHECK(k % 2 == 0);
  std::size_t total = 0;
  for (const auto& [k, n] : pairs.intersection_sizes) total += n;
  CHECK(total == 672);
  std::size_t in_orbits = 0;
  for (const auto& o : pairs.orbits) in_orbits += o.size();
  CHECK(in_orbits == pairs.meeting_in_8.size());
}

TEST_CASE("matchstick geometry") {
  auto geo = matchsticks();
  CHECK(geo.group.order() == 20160);
  CHECK(geo.group.order() == (16 - 1) * (16 - 2) * (16 - 4) * (16 - 8));
  CHECK(geo.planes.size() == 35);
  CHECK(binomial(15, 2) / 3 == 35);  // each plane holds three point pairs
  CHECK(geo.matchstick_action.degree() == 105);
  const PermutationGroup img(105, geo.matchstick_action.induce(geo.group.generators()));
  CHECK(img.is_transitive());
  CHECK(img.order() == 20160);
  check_homomorphism(geo.matchstick_action, geo.group);
}

TEST_CASE("small linear groups") {
  CHECK(l3_2().order() == 168);
  const auto g = l2_16_4();
  CHECK(g.order() == 16320);
  const auto n = l2_16_4_normalizer_17();
  CHECK(n.order() == 136);
  auto act = l2_16_4_on_120();
  CHECK(act.degree() == 120);
  const PermutationGroup img(120, act.induce(g.generators()));
  CHECK(img.order() == 16320);
  CHECK(img.is_transitive());
}
