#include <doctest.h>

#include "symgen/double_coset_enum.hpp"
#include "symgen/golay.hpp"

using namespace symgen;

namespace {

std::shared_ptr<const Progenitor> progenitor(std::size_t n, std::size_t k) {
  return std::make_shared<const Progenitor>(symmetric_control(n), k == 1 ? natural_action(n) : subsets_action(n, k));
}

std::vector<ProgElement> elements(const Progenitor& p, const char* relations, const Bindings& b = {}) {
  std::vector<ProgElement> out;
  for (const auto& r : parse_relations(relations)) out.push_back(relation_element(p, r, b));
  return out;
}

std::size_t single_index(const std::shared_ptr<const Progenitor>& p, const char* relations) {
  std::vector<Word> rels;
  for (const auto& r : parse_relations(relations)) rels.push_back(relator_word(*p, r));
  auto res = enumerate(p, rels);
  REQUIRE(std::holds_alternative<SymEnumeration>(res));
  return std::get<SymEnumeration>(res).report.index;
}

}  // namespace

TEST_CASE("relation elements") {
  const auto p = progenitor(4, 1);
  // t_1 (12) t_1 (12) = t_1 t_2
  const auto e = relation_element(*p, parse_relation("(t[1] (12))^2"));
  CHECK(e.pi.is_identity());
  CHECK(e.w == std::vector<Point>{0, 1});
  const auto c = relation_element(*p, parse_relation("(123) t[1]"));
  CHECK(c.pi == Permutation::from_cycles(4, {{0, 1, 2}}));
  CHECK(c.w == std::vector<Point>{0});
  CHECK(element_word(*p, c) == relator_word(*p, parse_relation("(123) t[1]")));
  CHECK_THROWS_AS(relation_element(*p, parse_relation("t[9]")), std::invalid_argument);
  Bindings b;
  b.permutations.emplace("pi", Permutation::from_cycles(4, {{0, 1}}));
  CHECK(relation_element(*p, parse_relation("pi t[1]"), b).pi == Permutation::from_cycles(4, {{0, 1}}));
  const auto a4 = std::make_shared<const Progenitor>(*builtin_control("A4"), natural_action(4));
  CHECK_THROWS_AS(relation_element(*a4, parse_relation("(12) t[1]")), std::invalid_argument);
}

TEST_CASE("double coset enumeration agrees with coset enumeration") {
  struct Case {
    std::shared_ptr<const Progenitor> p;
    const char* relations;
  };
  const Case cases[] = {
      {progenitor(2, 1), "((1 2) t[1])^3"},
      {progenitor(5, 1), "(t[1] (12))^3"},
      {progenitor(5, 2), "(t[12] (23))^3"},
      {progenitor(6, 2), "(t[12] (23))^3"},
      {progenitor(6, 3), "(t[123] (34))^3"},
      {progenitor(7, 3), "(t[123] (34))^3"},
      {std::make_shared<const Progenitor>(symmetric_control(7),
                                           union_action({natural_action(7), subsets_action(7, 4)})),
       "((12) t[1])^3, ((45) t[1234])^3, (12)(34)(56) t[1234] t[3456] t[1256] t[7]"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.relations);
    DoubleCosetStats st;
    auto res = enumerate_double_cosets(c.p, elements(*c.p, c.relations), {}, &st);
    REQUIRE(std::holds_alternative<SymEnumeration>(res));
    const auto& e = std::get<SymEnumeration>(res);
    CHECK(e.report.index == single_index(c.p, c.relations));
    CHECK(e.table->verify(e.presentation, c.p->subgroup()));
    const auto dct = double_coset_analysis(e);
    CHECK(dct.cosets.size() == st.live);
    CHECK(dct.index() == e.report.index);
  }
}

TEST_CASE("double coset enumeration of W(E8)") {
  const auto p = progenitor(8, 3);
  auto res = enumerate_double_cosets(p, elements(*p, "(t[123] (34))^3"));
  REQUIRE(std::holds_alternative<SymEnumeration>(res));
  CHECK(std::get<SymEnumeration>(res).report.index == 17280);
  CHECK(std::get<SymEnumeration>(res).report.order == Integer(696729600));
}

TEST_CASE("double coset enumeration overflows on infinite groups") {
  const auto p = progenitor(3, 1);
  DoubleCosetLimits lim;
  lim.max_double_cosets = 40;
  // No relations: the free product of three Z2's extended by S3.
  auto res = enumerate_double_cosets(p, {}, lim);
  REQUIRE(std::holds_alternative<Overflow>(res));
  CHECK(std::get<Overflow>(res).max_cosets == 40);
  CHECK_THROWS_AS(enumerate_double_cosets(p, elements(*p, "(12)")), std::invalid_argument);
}

TEST_CASE("McL:2 from M22 on 672 dodecads") {
  const auto fam = dodecads_672(GolayCode::instance(), 0, 1);
  const auto pairs = dodecad_pairs_meeting_in_8(fam);
  const auto p = std::make_shared<const Progenitor>(*builtin_control("M22"), fam.action);
  const Point a = pairs.rep, b = pairs.orbits[0][0];
  const auto cands = candidates_from_centralizer(*p, {a, b});
  REQUIRE(cands.size() == 15);
  const auto rel = parse_relations("pi (t[#" + std::to_string(a + 1) + "] t[#" + std::to_string(b + 1) + "])^2");
  Bindings bind;
  bind.permutations.emplace("pi", cands[0]);
  DoubleCosetStats st;
  auto res = enumerate_double_cosets(p, {relation_element(*p, rel[0], bind)}, {}, &st);
  REQUIRE(std::holds_alternative<SymEnumeration>(res));
  const auto& e = std::get<SymEnumeration>(res);
  CHECK(e.report.index == 4050);
  CHECK(e.report.control_embeds);
  CHECK(e.report.order == Integer(1796256000));
  CHECK(st.live == double_coset_analysis(e).cosets.size());
}
