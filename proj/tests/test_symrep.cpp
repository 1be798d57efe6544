#include <doctest.h>

#include <random>
#include <set>

#include "symgen/catalog.hpp"
#include "symgen/double_coset_enum.hpp"
#include "symgen/symrep.hpp"

using namespace symgen;

namespace {

const EntryRun& run(const std::string& id) {
  static std::map<std::string, EntryRun> cache;
  auto it = cache.find(id);
  if (it == cache.end()) {
    static const auto catalog = load_catalog(default_catalog_dir());
    const auto* e = find_entry(catalog, id);
    REQUIRE(e);
    it = cache.emplace(id, run_job(e->config)).first;
    REQUIRE(it->second.enumeration);
  }
  return it->second;
}

const SymContext& context(const std::string& id) {
  static std::map<std::string, SymContext> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, SymContext(*run(id).enumeration)).first;
  return it->second;
}

}  // namespace

TEST_CASE("identity and inverses") {
  for (const char* id : {"coxeter-E7", "mcl2-M22"}) {
    CAPTURE(id);
    const auto& ctx = context(id);
    const auto one = ctx.canonicalize(ctx.identity());
    CHECK(one.pi.is_identity());
    CHECK(one.w.empty());
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
      const auto a = ctx.random_element(rng);
      CHECK(ctx.multiply(a, ctx.invert(a)) == one);
      CHECK(ctx.multiply(ctx.invert(a), a) == one);
    }
  }
}

TEST_CASE("operations agree with the permutation oracle") {
  for (const char* id : {"coxeter-E7", "mcl2-M22"}) {
    CAPTURE(id);
    const auto& ctx = context(id);
    std::mt19937_64 rng(11);
    std::size_t mismatches = 0, not_idempotent = 0;
    for (int k = 0; k < 1000; ++k) {
      const auto a = ctx.random_element(rng);
      const auto b = ctx.random_element(rng);
      SymElement out;
      Permutation want;
      switch (k % 3) {
        case 0: out = ctx.multiply(a, b); want = ctx.image(a) * ctx.image(b); break;
        case 1: out = ctx.invert(a); want = ctx.image(a).inverse(); break;
        default: {
          // A non-canonical spelling of a: a followed by t_i t_i.
          auto padded = a;
          padded.w.push_back(static_cast<Point>(k % ctx.progenitor().degree()));
          padded.w.push_back(padded.w.back());
          out = ctx.canonicalize(padded);
          want = ctx.image(a);
          if (!(out == a)) ++mismatches;
        }
      }
      if (ctx.image(out) != want) ++mismatches;
      if (!(ctx.canonicalize(out) == out)) ++not_idempotent;
    }
    CHECK(mismatches == 0);
    CHECK(not_idempotent == 0);
  }
}

TEST_CASE("associativity") {
  const auto& ctx = context("coxeter-E7");
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const auto a = ctx.random_element(rng), b = ctx.random_element(rng), c = ctx.random_element(rng);
    CHECK(ctx.multiply(ctx.multiply(a, b), c) == ctx.multiply(a, ctx.multiply(b, c)));
  }
}

TEST_CASE("multiplication respects the conjugation law") {
  const auto& ctx = context("mcl2-M22");
  const auto& p = ctx.progenitor();
  std::mt19937_64 rng(3);
  const auto n = p.control().group();
  for (int k = 0; k < 100; ++k) {
    const auto g = n.random_element(rng);
    const Point i = static_cast<Point>(rng() % p.degree());
    const SymElement gi{g, {}}, t{Permutation(p.control().degree), {i}};
    const auto lhs = ctx.multiply(ctx.multiply(ctx.invert(gi), t), gi);
    const auto rhs = ctx.canonicalize({Permutation(p.control().degree), {p.action().image(i, g)}});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("relators shorten words") {
  for (const char* id : {"coxeter-E7", "mcl2-M22"}) {
    CAPTURE(id);
    const auto& r = run(id);
    const auto& ctx = context(id);
    const auto& p = *r.progenitor;
    const auto catalog = load_catalog(default_catalog_dir());
    const auto rel = relation_element(p, find_entry(catalog, id)->config.relations[0], r.bindings);
    REQUIRE(!rel.w.empty());
    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
      const auto a = ctx.random_element(rng);
      const auto padded = multiply(p, a, rel);  // equal to a in the target group
      const auto c = ctx.canonicalize(padded);
      CHECK(c == a);
      CHECK(c.w.size() < padded.w.size());
    }
  }
}

TEST_CASE("canonical forms decide equality") {
  for (const char* id : {"coxeter-E7", "mcl2-M22", "j32-L2_16_4"}) {
    CAPTURE(id);
    const auto& ctx = context(id);
    std::mt19937_64 rng(17);
    std::vector<SymElement> xs;
    for (int k = 0; k < 60; ++k) xs.push_back(ctx.random_element(rng));
    // Equal elements written differently.
    xs.push_back(ctx.multiply(xs[0], ctx.multiply(xs[1], ctx.invert(xs[1]))));
    for (const auto& a : xs)
      for (const auto& b : xs) CHECK((ctx.image(a) == ctx.image(b)) == (a == b));
  }
}

TEST_CASE("random elements cover the cosets and stay within the diameter") {
  const auto& ctx = context("coxeter-E7");
  std::mt19937_64 rng(19);
  std::vector<bool> hit(ctx.index(), false);
  for (std::size_t k = 0; k < 20 * ctx.index(); ++k) {
    const auto a = ctx.random_element(rng);
    CHECK(a.w.size() <= ctx.diameter());
    hit[ctx.image(a)(0)] = true;
  }
  CHECK(std::count(hit.begin(), hit.end(), true) == static_cast<long>(ctx.index()));
  CHECK(ctx.diameter() == 5);
  CHECK(context("mcl2-M22").diameter() == 3);
}

TEST_CASE("text form") {
  const auto& ctx = context("coxeter-E7");
  const auto& p = ctx.progenitor();
  std::mt19937_64 rng(23);
  for (int k = 0; k < 20; ++k) {
    const auto a = ctx.random_element(rng);
    CHECK(parse_element(p, format_element(a)) == a);
  }
  const auto e = parse_element(p, "pi = (1 2)(3 4) ; w = t3 t[123] t3");
  CHECK(e.pi == Permutation::from_cycles(7, {{0, 1}, {2, 3}}));
  CHECK(e.w == std::vector<Point>{2, 0, 2});
  CHECK(format_element(ctx.identity()) == "pi = () ; w =");
  CHECK(parse_element(p, "pi = () ; w =") == ctx.identity());
  CHECK_THROWS_AS(parse_element(p, "pi = (1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(p, "pi = (1 2) ; w = t36"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(p, "w = t1 ; pi = ()"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(context("mcl2-M22").progenitor(), "pi = (3 4 5) ; w ="), std::invalid_argument);
}

TEST_CASE("contexts refuse large indices") {
  CHECK_THROWS_AS(SymContext(*run("coxeter-E7").enumeration, 100), std::length_error);
}
