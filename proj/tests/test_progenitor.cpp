#include <doctest.h>

#include <random>

#include "symgen/progenitor.hpp"
#include "symgen/weyl.hpp"

using namespace symgen;

namespace {

std::shared_ptr<const Progenitor> progenitor(std::size_t n, std::size_t k) {
  return std::make_shared<const Progenitor>(symmetric_control(n), k == 1 ? natural_action(n) : subsets_action(n, k));
}

SymEnumeration run(const std::shared_ptr<const Progenitor>& p, const char* relations,
                   const Bindings& b = {}) {
  std::vector<Word> rels;
  for (const auto& r : parse_relations(relations)) rels.push_back(relator_word(*p, r, b));
  auto res = enumerate(p, rels);
  REQUIRE(std::holds_alternative<SymEnumeration>(res));
  return std::get<SymEnumeration>(std::move(res));
}

// Progenitor generators s_1 .. s_{n-1}, t_rep acting on the cosets.
std::vector<Permutation> coxeter_images(const SymEnumeration& e) {
  auto gens = e.control_on_cosets();
  const auto& p = *e.progenitor;
  gens.push_back(e.t_on_cosets()[p.orbits()[0].rep]);
  return gens;
}

// C_N(H) by testing every element of N.
Integer brute_centralizer_order(const PermutationGroup& n, const PermutationGroup& h) {
  Integer count = 0;
  n.for_each_element([&](const Permutation& g) {
    for (const auto& x : h.generators())
      if (g * x != x * g) return;
    ++count;
  });
  return count;
}

}  // namespace

TEST_CASE("the smallest progenitor") {
  const auto p = progenitor(2, 1);
  CHECK(p->transitive());
  const auto pres = p->presentation();
  CHECK(pres.num_generators() == 2);
  const auto e = run(p, "((1 2) t[1])^3");
  CHECK(e.report.index == 3);
  CHECK(e.report.control_embeds);
  CHECK(e.report.order == 6);
}

TEST_CASE("simply laced Weyl groups from symmetric presentations") {
  struct Case {
    char type;
    std::size_t n, k;
    const char* relation;
    std::size_t index;
  };
  const Case cases[] = {
      {'A', 2, 1, "(t[1] (12))^3", 3},         {'A', 3, 1, "(t[1] (12))^3", 4},
      {'A', 4, 1, "(t[1] (12))^3", 5},         {'A', 5, 1, "(t[1] (12))^3", 6},
      {'A', 6, 1, "(t[1] (12))^3", 7},         {'D', 4, 2, "(t[12] (23))^3", 8},
      {'D', 5, 2, "(t[12] (23))^3", 16},       {'D', 6, 2, "(t[12] (23))^3", 32},
      {'E', 6, 3, "(t[123] (34))^3", 72},
  };
  for (const auto& c : cases) {
    CAPTURE(c.type);
    CAPTURE(c.n);
    const auto e = run(progenitor(c.n, c.k), c.relation);
    CHECK(e.report.index == c.index);
    CHECK(e.report.control_embeds);
    const auto w = weyl_oracle(c.type, c.n);
    CHECK(e.report.order == w.group().order());
    CHECK(satisfies_coxeter_relations(coxeter_images(e), coxeter_matrix(w)));
  }
}

TEST_CASE("Weyl oracle") {
  CHECK(weyl_oracle('A', 4).roots.size() == 20);
  CHECK(weyl_oracle('A', 4).group().order() == 120);
  CHECK(weyl_oracle('D', 4).group().order() == 192);
  CHECK(weyl_oracle('E', 6).roots.size() == 72);
  CHECK(weyl_oracle('E', 6).group().order() == 51840);
  CHECK(weyl_oracle('E', 7).group().order() == 2903040);
  CHECK(weyl_oracle('E', 8).roots.size() == 240);
  CHECK(weyl_oracle('E', 8).group().order() == Integer(696729600));
  CHECK_THROWS_AS(weyl_oracle('E', 9), std::invalid_argument);
  CHECK_THROWS_AS(weyl_oracle('B', 3), std::invalid_argument);
  // The wrong diagram is detected.
  const auto a = weyl_oracle('A', 3);
  auto m = coxeter_matrix(a);
  m[0][1] = m[1][0] = 2;
  CHECK_FALSE(satisfies_coxeter_relations(a.reflections, m));
  CHECK(satisfies_coxeter_relations(a.reflections, coxeter_matrix(a)));
}

TEST_CASE("double cosets agree with the orbits of N on the cosets") {
  for (std::size_t n : {4, 5}) {
    const auto e = run(progenitor(n, 1), "(t[1] (12))^3");
    const auto t = double_coset_analysis(e);
    const PermutationGroup on_cosets(e.report.index, e.control_on_cosets());
    const auto orbits = on_cosets.orbits();
    REQUIRE(t.cosets.size() == orbits.size());
    CHECK(t.index() == e.report.index);
    CHECK(t.connected());
    CHECK(t.cosets[0].size == 1);
    CHECK(t.cosets[0].word.empty());
    for (const auto& d : t.cosets) {
      bool found = false;
      for (const auto& o : orbits)
        if (std::find(o.begin(), o.end(), d.coset) != o.end()) found = o.size() == d.size;
      CHECK(found);
      CHECK(d.stabilizer_order * d.size == e.progenitor->control().order);
    }
    // W(A_{n}): N and one double coset N t_1 N of n single cosets.
    CHECK(t.cosets.size() == 2);
    CHECK(t.cosets[1].size == n);
    CHECK(double_coset_name(*e.progenitor, t.cosets[1]) == "[1]");
    CHECK(t.cosets[0].edges.at(1).size() == n);
  }
  const auto e6 = run(progenitor(6, 3), "(t[123] (34))^3");
  const auto t = double_coset_analysis(e6);
  std::size_t total = 0;
  for (const auto& d : t.cosets) total += d.size;
  CHECK(total == 72);
  const auto dot = to_dot(*e6.progenitor, t, "E6");
  CHECK(dot == to_dot(*e6.progenitor, double_coset_analysis(e6), "E6"));
  CHECK(dot.find("digraph \"E6\"") == 0);
  CHECK(dot.find("d0 [label=\"[*]\\n1\"]") != std::string::npos);
}

TEST_CASE("centralizer of a two-point stabilizer") {
  for (std::size_t n : {4, 5, 6}) {
    const auto p = progenitor(n, 1);
    const std::vector<Point> pts{0, 1};
    const auto c = lemma_centralizer(*p, pts);
    const auto stab = p->action_group().point_stabilizer(pts);
    CHECK(c.order() == brute_centralizer_order(p->action_group(), stab));
  }
  CHECK(lemma_centralizer(*progenitor(4, 1), {0, 1}).order() == 4);
  CHECK(lemma_centralizer(*progenitor(5, 1), {0, 1}).order() == 2);
}

TEST_CASE("progenitor elements") {
  const auto e = run(progenitor(4, 1), "(t[1] (12))^3");
  const auto& p = *e.progenitor;
  std::mt19937_64 rng(5);
  const auto n = p.control().group();
  std::uniform_int_distribution<Point> pt(0, 3);
  std::uniform_int_distribution<int> len(0, 4);
  auto random_element = [&] {
    ProgElement x{n.random_element(rng), {}};
    for (int k = len(rng); k > 0; --k) x.w.push_back(pt(rng));
    return x;
  };
  for (int s = 0; s < 30; ++s) {
    const auto a = random_element(), b = random_element();
    const auto pa = e.coset_permutation(element_word(p, a));
    const auto pb = e.coset_permutation(element_word(p, b));
    CHECK(e.coset_permutation(element_word(p, multiply(p, a, b))) == pa * pb);
    CHECK(e.coset_permutation(element_word(p, invert(p, a))) == pa.inverse());
    const auto one = multiply(p, a, invert(p, a));
    CHECK(one.pi.is_identity());
  }
  // pi^-1 t_i pi = t_{pi(i)} in the progenitor itself.
  const Permutation pi = Permutation::from_cycles(4, {{0, 1, 2}});
  const auto conj = multiply(p, multiply(p, ProgElement{pi.inverse(), {}}, ProgElement{Permutation(4), {0}}),
                             ProgElement{pi, {}});
  CHECK(conj == ProgElement{Permutation(4), {1}});
}

TEST_CASE("conjugation law and the two-point centralizer property") {
  std::mt19937_64 rng(3);
  for (auto [n, k, rel] : {std::tuple{4, 1, "(t[1] (12))^3"}, std::tuple{6, 3, "(t[123] (34))^3"}}) {
    const auto e = run(progenitor(n, k), rel);
    CHECK(conjugation_law_violations(e, 200, rng) == 0);
    const auto c = centralizer_property(e);
    CHECK(c.pairs > 0);
    CHECK(c.hits > 0);
    CHECK(c.violations == 0);
  }
}

TEST_CASE("perfectness report") {
  const auto p = progenitor(4, 1);
  const auto r = perfectness(*p, {relator_word(*p, parse_relation("(t[1] (12))^3"))});
  CHECK_FALSE(r.control_perfect);
  CHECK_FALSE(r.consistent.has_value());
  REQUIRE(r.abelianization);
  CHECK(*r.abelianization == 2);

  const auto a5 = std::make_shared<const Progenitor>(*builtin_control("A5"), natural_action(5));
  CHECK(perfectness(*a5, {}).control_perfect);
  // 2^*5 : A5 abelianizes to Z2 (t may survive); an odd relation kills it.
  const auto free = perfectness(*a5, {});
  CHECK(free.consistent == true);
  const auto odd = perfectness(*a5, {relator_word(*a5, parse_relation("t[1] t[2] t[3]"))});
  CHECK(odd.odd_relation);
  CHECK(odd.consistent == true);
  CHECK(*odd.abelianization == 1);
}

TEST_CASE("relation search") {
  const auto p = progenitor(3, 1);
  const auto rel = parse_relations("(pi t[1])^3");
  const auto cands = candidates_of_order(*p, 2, {0});
  // Involutions of S3 up to conjugation by Stab(1): (1 2) and (2 3).
  CHECK(cands.size() == 2);
  const auto res = relation_search(p, rel, cands, 1000);
  CHECK(res.candidates == 2);
  REQUIRE(res.survivors.size() == 1);
  CHECK(res.survivors[0].pi == Permutation::from_cycles(3, {{0, 1}}));
  CHECK(res.survivors[0].index == 4);

  CHECK(candidates_of_order(*progenitor(4, 1), 7, {0}).empty());

  // Candidates from the centralizer of Stab(1, 2) in S4: (12), (34), (12)(34) up to Stab(1, 2).
  const auto cc = candidates_from_centralizer(*progenitor(4, 1), {0, 1});
  CHECK(cc.size() == 3);
}

TEST_CASE("relation errors") {
  const auto p = progenitor(4, 1);
  CHECK_THROWS_AS(relator_word(*p, parse_relation("t[7]")), std::invalid_argument);
  CHECK_THROWS_AS(relator_word(*p, parse_relation("g[q]")), std::invalid_argument);
  CHECK_THROWS_AS(relator_word(*p, parse_relation("pi t[1]")), std::invalid_argument);
  CHECK_THROWS_AS(relator_word(*p, parse_relation("(15)")), std::invalid_argument);
  CHECK_THROWS_AS(relator_word(*p, parse_relation("(1 1)")), std::invalid_argument);
  const auto a4 = std::make_shared<const Progenitor>(*builtin_control("A4"), natural_action(4));
  CHECK_THROWS_AS(relator_word(*a4, parse_relation("(12) t[1]")), std::invalid_argument);
  // `#k` labels index the symmetric generators directly.
  CHECK(relator_word(*p, parse_relation("t[#2]")) == free_reduce(p->t_word(1)));
}

TEST_CASE("intransitive control") {
  const auto p = std::make_shared<const Progenitor>(symmetric_control(4),
                                                    union_action({natural_action(4), subsets_action(4, 2)}));
  CHECK_FALSE(p->transitive());
  REQUIRE(p->orbits().size() == 2);
  const auto pres = p->presentation();
  CHECK(pres.generators[3] == "t1");
  CHECK(pres.generators[4] == "t2");
  for (Point i = 0; i < p->degree(); ++i) {
    const auto w = p->t_word(i);
    CHECK(std::count_if(w.begin(), w.end(), [&](Letter x) { return p->is_t_letter(x); }) == 1);
  }
  // t_1 commutes with t_{23} and t_{12} = t_{34}: a finite quotient with S4 embedded.
  const auto e = run(p, "(t[1] (12))^3, t[1] t[23] = t[23] t[1], t[12] t[34]");
  CHECK(e.report.control_embeds);
  CHECK(e.report.index > 1);
}
