#include <doctest.h>

#include "symgen/relation_expr.hpp"

using namespace symgen;
using K = RelationExpr::Kind;

TEST_CASE("relation parsing") {
  const auto e = parse_relation("((1 2) * t[1])^3");
  REQUIRE(e.kind == K::power);
  CHECK(e.exponent == 3);
  REQUIRE(e.args.size() == 1);
  const auto& prod = e.args[0];
  REQUIRE(prod.kind == K::product);
  REQUIRE(prod.args.size() == 2);
  CHECK(prod.args[0].kind == K::cycles);
  CHECK(prod.args[0].cycles == std::vector<std::vector<std::string>>{{"1", "2"}});
  CHECK(prod.args[1] == RelationExpr::make_symmetric("1"));
  CHECK(t_length(e) == 3);

  // Juxtaposition and '*' mean the same thing; compact cycles split per character.
  CHECK(parse_relation("(12)(34)(56) t[1234] t[1256]") == parse_relation("(1 2)(3 4)(5 6) * t[1234] * t[1256]"));
  const auto c = parse_relation("(1x0)");
  REQUIRE(c.kind == K::cycles);
  CHECK(c.cycles[0] == std::vector<std::string>{"1", "x", "0"});
  const auto d = parse_relation("(10, 11, 12)");
  CHECK(d.cycles[0] == std::vector<std::string>{"10", "11", "12"});

  const auto comm = parse_relation("((1234) t[3] t[2] [t[1], t[2] t[3]])^3");
  CHECK(t_length(comm) == 3 * (2 + 2 * 3));
  CHECK(symmetric_labels(comm) == std::vector<std::string>{"3", "2", "1"});

  const auto eq = parse_relation("pi * (t[A] t[B])^2 = g[x]");
  CHECK(eq.kind == K::equation);
  CHECK(mentions(eq, "pi"));
  CHECK_FALSE(mentions(eq, "sigma"));
}

TEST_CASE("relations print back to equal expressions") {
  for (const char* text : {"((1 2) * t[1])^3", "(12)(34)(56) t[1234] t[1256] t[3456] t[7890]",
                           "((1234) t[3] t[2] [t[1], t[2] t[3]])^3", "pi (t[A] t[B])^2", "(g[t] t[1])^3",
                           "t[1] t[2] = t[2] t[1]", "(t[1]^2)^5"}) {
    CAPTURE(text);
    const auto e = parse_relation(text);
    CHECK(parse_relation(to_string(e)) == e);
  }
}

TEST_CASE("relation lists") {
  const auto rs = parse_relations("((12) t[1])^3, ((45) t[1234])^3;\n(t[1] t[2])^2");
  REQUIRE(rs.size() == 3);
  CHECK(rs[2] == parse_relation("(t[1] t[2])^2"));
}

TEST_CASE("relation syntax errors carry positions") {
  try {
    parse_relation("t[1)^3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
  try {
    parse_relation("(t[1] t[2])^0", 7, 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
    CHECK(e.column() >= 3 + 11);
  }
  CHECK_THROWS_AS(parse_relation("(t[1] t[2]"), ParseError);
  CHECK_THROWS_AS(parse_relation("t[1] ="), ParseError);
  CHECK_THROWS_AS(parse_relation(""), ParseError);
}
