#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "symgen/todd_coxeter.hpp"

using namespace symgen;

namespace {

PresentationJob job(const char* text) { return parse_presentation_job(text); }

std::size_t index_of(const PresentationJob& j, Strategy s = Strategy::felsch, std::size_t cap = 100000) {
  EnumerationLimits lim;
  lim.strategy = s;
  lim.max_cosets = cap;
  auto r = todd_coxeter(j.presentation, j.subgroup, lim);
  REQUIRE(std::holds_alternative<CosetTable>(r));
  return std::get<CosetTable>(r).index();
}

}  // namespace

TEST_CASE("word parsing and formatting") {
  auto j = job("gens: a b; rels: a^2, b^3, (a*b)^7, [a,b]^4; sub: a");
  const auto& p = j.presentation;
  REQUIRE(p.num_generators() == 2);
  REQUIRE(p.relators.size() == 4);
  CHECK(p.relators[0] == Word{0, 0});
  CHECK(p.relators[2].size() == 14);
  CHECK(p.relators[3] == power(Word{~0, ~1, 0, 1}, 4));
  CHECK(j.subgroup == std::vector<Word>{{0}});
  CHECK(parse_word("abab^-1", p) == Word{0, 1, 0, ~1});
  CHECK(parse_word("a = b", p) == Word{0, ~1});
  CHECK(parse_word("1", p).empty());
  CHECK(format_word(Word{0, 0, ~1, ~1, 1}, p.generators) == "a^2*b^-2*b");
  auto again = parse_presentation_job(format_presentation_job(j));
  CHECK(again.presentation.relators == p.relators);
  CHECK(again.subgroup == j.subgroup);
}

TEST_CASE("presentation parse errors carry positions") {
  CHECK_THROWS_AS(job("rels: a^2"), ParseError);
  CHECK_THROWS_AS(job("gens: a; rels: a^2, c"), ParseError);
  CHECK_THROWS_AS(job("gens: a; rels: (a^2"), ParseError);
  CHECK_THROWS_AS(job("gens: a a"), ParseError);
  try {
    job("gens: a b;\nrels: a^2, b^x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 14);
  }
}

TEST_CASE("word algebra") {
  const Word w{0, 1, ~0};
  CHECK(inverse(w) == Word{0, ~1, ~0});
  CHECK(free_reduce(concat(w, inverse(w))).empty());
  CHECK(cyclic_reduce(Word{~1, 0, 0, 1}) == Word{0, 0});
  CHECK(power(Word{0, 1}, -2) == Word{~1, ~0, ~1, ~0});
  CHECK(commutator(Word{0}, Word{1}) == Word{~0, ~1, 0, 1});
}

TEST_CASE("abelian invariants by Smith normal form") {
  // S_3: Z/2.  Z/4 x Z/6 = Z/2 x Z/12.  Free abelian of rank 1 when a relator is missing.
  CHECK(abelian_invariants(job("gens: a b; rels: a^2, b^2, (a*b)^3").presentation) ==
        std::vector<Integer>{2});
  CHECK(abelian_invariants(job("gens: a b; rels: a^4, b^6, [a,b]").presentation) ==
        std::vector<Integer>{2, 12});
  CHECK(abelian_invariants(job("gens: a b; rels: a^3").presentation) == std::vector<Integer>{3, 0});
  CHECK(!abelianization_order(job("gens: a b; rels: a^3").presentation));
  CHECK(*abelianization_order(job("gens: a b; rels: a^2, b^3, (a*b)^7").presentation) == 1);
}

TEST_CASE("small enumerations") {
  CHECK(index_of(job("gens: a; rels: a^5")) == 5);
  CHECK(index_of(job("gens: a b; rels: a^2, b^2, (a*b)^3; sub: a")) == 3);
  CHECK(index_of(job("gens: a b; rels: a^2, b^2, (a*b)^3")) == 6);
  CHECK(index_of(job("gens: a b; rels: a^2, b^3, (a*b)^5")) == 60);
  CHECK(index_of(job("gens: a b; rels: a^2, b^3, (a*b)^5; sub: a, b")) == 1);
  CHECK(index_of(job("gens: a; rels: a^5"), Strategy::hlt_lookahead) == 5);
  CHECK(index_of(job("gens: a b; rels: a^2, b^2, (a*b)^3; sub: a"), Strategy::hlt_lookahead) == 3);
}

TEST_CASE("L2(7) presentation matches an independent permutation model") {
  // Oracle: x -> -1/x and x -> x+1 on the projective line over GF(7), as
  // 8 points {0..6, inf}, generate L2(7).  Check they satisfy the relators
  // and generate a group of order 168.
  std::vector<Point> s(8), t(8);
  for (Point x = 0; x < 7; ++x) t[x] = (x + 1) % 7;
  t[7] = 7;
  s[0] = 7;
  s[7] = 0;
  for (Point x = 1; x < 7; ++x) {
    Point inv = 1;
    while ((inv * x) % 7 != 1) ++inv;
    s[x] = (7 - inv) % 7;
  }
  const Permutation S(s), T(t);
  // Find a, b in <S, T> with a^2 = b^3 = 1 satisfying the presentation.
  PermutationGroup l27(8, {S, T});
  REQUIRE(l27.order() == 168);
  auto j = job("gens: a b; rels: a^2, b^3, (a*b)^7, [a,b]^4");
  bool found = false;
  const auto elems = l27.elements();
  for (const auto& a : elems) {
    if (a.order() != 2) continue;
    for (const auto& b : elems) {
      if (b.order() != 3) continue;
      const std::vector<Permutation> imgs{a, b};
      bool ok = true;
      for (const auto& r : j.presentation.relators) ok = ok && evaluate(r, imgs).is_identity();
      if (ok && PermutationGroup(8, imgs).order() == 168) {
        found = true;
        break;
      }
    }
    if (found) break;
  }
  CHECK(found);

  for (auto strat : {Strategy::felsch, Strategy::hlt_lookahead}) {
    auto r = todd_coxeter(j.presentation, {}, {100000, strat});
    REQUIRE(std::holds_alternative<CosetTable>(r));
    const auto& t = std::get<CosetTable>(r);
    CHECK(t.index() == 168);
    auto img = coset_action(t);
    CHECK(img.degree() == 168);
    CHECK(img.order() == 168);
    CHECK(img.is_transitive());
  }
}

TEST_CASE("coset action and representative words") {
  auto j = job("gens: a b; rels: a^2, b^2, (a*b)^3; sub: a");
  auto r = todd_coxeter(j.presentation, j.subgroup);
  const auto& t = std::get<CosetTable>(r);
  REQUIRE(t.index() == 3);
  CHECK(t.representative_word(0).empty());
  CHECK(t.representative_word(1) == Word{1});
  CHECK(t.act(0, Letter{0}) == 0);
  for (std::uint32_t c = 0; c < t.index(); ++c) CHECK(t.act(0, t.representative_word(c)) == c);
  CHECK_THROWS_AS(t.representative_word(3), std::out_of_range);
  auto img = coset_action(t);
  CHECK(img.degree() == 3);
  CHECK(img.order() == 6);
  CHECK(img.order() == Integer(t.index()) * img.point_stabilizer(std::vector<Point>{0}).order());

  auto one = todd_coxeter(j.presentation, {{0}, {1}});
  const auto& t1 = std::get<CosetTable>(one);
  CHECK(t1.index() == 1);
  CHECK(coset_action(t1).order() == 1);
}

TEST_CASE("representative words are BFS-minimal") {
  auto j = job("gens: a b; rels: a^2, b^3, (a*b)^7, [a,b]^4");
  const auto res = todd_coxeter(j.presentation, {});
  const auto& t = std::get<CosetTable>(res);
  std::vector<int> dist(t.index(), -1);
  std::vector<std::uint32_t> q{0};
  dist[0] = 0;
  for (std::size_t k = 0; k < q.size(); ++k)
    for (Letter x : {0, ~0, 1, ~1}) {
      const auto d = t.act(q[k], x);
      if (dist[d] < 0) {
        dist[d] = dist[q[k]] + 1;
        q.push_back(d);
      }
    }
  for (std::uint32_t c = 0; c < t.index(); ++c) {
    const Word w = t.representative_word(c);
    CHECK(static_cast<int>(w.size()) == dist[c]);
    CHECK(t.act(0, w) == c);
  }
}

TEST_CASE("overflow is reported with statistics") {
  // Free product Z/2 * Z/3 is infinite.
  auto j = job("gens: a b; rels: a^2, b^3");
  for (auto strat : {Strategy::felsch, Strategy::hlt_lookahead}) {
    auto r = todd_coxeter(j.presentation, {}, {500, strat});
    REQUIRE(std::holds_alternative<Overflow>(r));
    const auto& o = std::get<Overflow>(r);
    CHECK(o.stats.max_live <= 500);
    CHECK(o.max_cosets == 500);
    CHECK(o.stats.defined >= o.stats.max_live);
    CHECK(o.stats.max_live > 400);
    CHECK(o.message().find("overflow") != std::string::npos);
  }
  // A cap below the true index also overflows.
  auto l = job("gens: a b; rels: a^2, b^3, (a*b)^7, [a,b]^4");
  CHECK(is_overflow(todd_coxeter(l.presentation, {}, {100, Strategy::felsch})));
  CHECK_THROWS_AS(todd_coxeter(l.presentation, {}, {0, Strategy::felsch}), std::invalid_argument);
  CHECK_THROWS_AS(todd_coxeter(l.presentation, {{5}}), std::invalid_argument);
}

TEST_CASE("index is independent of relator order") {
  auto j = job("gens: a b c; rels: a^2, b^2, c^2, (a*b)^3, (b*c)^5, (a*c)^2; sub: a, b");
  std::mt19937_64 rng(7);
  for (int k = 0; k < 10; ++k) {
    auto shuffled = j;
    std::shuffle(shuffled.presentation.relators.begin(), shuffled.presentation.relators.end(), rng);
    for (auto& r : shuffled.presentation.relators) {
      std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(rng() % r.size()), r.end());
    }
    // The icosahedral Coxeter group H3 has order 120; <a,b> = S3.
    CHECK(index_of(shuffled) == 20);
    CHECK(index_of(shuffled, Strategy::hlt_lookahead) == 20);
  }
}

TEST_CASE("compaction keeps enumeration correct under a tight cap") {
  // Enough room for the answer but not for every definition.
  auto j = job("gens: a b; rels: a^2, b^3, (a*b)^7, [a,b]^4");
  EnumerationLimits lim{200, Strategy::hlt_lookahead};
  auto r = todd_coxeter(j.presentation, {}, lim);
  if (auto* t = std::get_if<CosetTable>(&r)) {
    CHECK(t->index() == 168);
  } else {
    CHECK(std::get<Overflow>(r).stats.max_live <= 200);
  }
}
