#include <doctest.h>

#include "symgen/catalog.hpp"

using namespace symgen;

namespace {

const char* kD5 = R"(# W(D5)
entry:
  id = d5
  index = 16 oracle
control:
  builtin = S5
action:
  on = subsets 2
relations:
  (t[12] (23))^3
)";

std::size_t error_column(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

std::size_t error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("inline relations") {
  const auto c = parse_config("entry:\n  id = x\ncontrol:\n  builtin = S2\naction:\n  on = natural\nrelations: ((1 2) * t[1])^3\n");
  REQUIRE(c.relations.size() == 1);
  const auto& r = c.relations[0];
  CHECK(r.kind == RelationExpr::Kind::power);
  CHECK(r.exponent == 3);
  REQUIRE(r.args.size() == 1);
  CHECK(symmetric_labels(r) == std::vector<std::string>{"1"});
  CHECK(r.args[0].args[0].kind == RelationExpr::Kind::cycles);
  CHECK(r.args[0].args[0].cycles == std::vector<std::vector<std::string>>{{"1", "2"}});
}

TEST_CASE("a D5 file verifies with index 16") {
  const auto c = parse_config(kD5);
  CHECK(c.id == "d5");
  CHECK(c.scale == Scale::desk);
  REQUIRE(c.index);
  CHECK(c.index->value == 16);
  CHECK(c.index->source == "oracle");
  const auto run = run_job(c);
  CHECK(run.report.status == Status::verified);
  CHECK(run.report.index == 16);
}

TEST_CASE("syntax errors carry positions") {
  const std::string head = "entry:\n  id = x\ncontrol:\n  builtin = S3\naction:\n  on = natural\nrelations:\n";
  // t[1)^3: the label runs into ')' and the bracket is never closed.
  CHECK(error_line(head + "  t[1)^3\n") == 8);
  CHECK(error_column(head + "  t[1)^3\n") >= 3);
  CHECK(error_column(head + "  (t[1] (12)^3\n") > 2);
  CHECK(error_line("entry:\n  id = x\n  colour = red\n") == 3);
  CHECK(error_column("entry:\n  id = x\n  colour = red\n") == 3);
  CHECK(error_line("entry:\n  id = x\nweather:\n") == 3);
  CHECK(error_line("entry:\n  id = x\n  id = y\n") == 3);
  CHECK(error_column("entry:\n  id = x\n  scale = huge\n") == 11);
  CHECK(error_column("entry:\n  id = x\n  index = 12 guess\n") == 11);
  CHECK(error_line("  id = x\n") == 1);
  CHECK_THROWS_AS(parse_config("entry:\n  id = x\naction:\n  on = natural\n"), ParseError);
  CHECK_THROWS_AS(parse_config("entry:\n  id = x\ncontrol:\n  builtin = S3\n"), ParseError);
  CHECK_THROWS_AS(parse_config("entry:\n  id = x\nlimits:\n  method = magic\n"), ParseError);
}

TEST_CASE("semantic errors point at the key") {
  auto c = parse_config("entry:\n  id = x\ncontrol:\n  builtin = Q8\naction:\n  on = natural\n");
  try {
    build_job(c);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 13);
  }
  c = parse_config("entry:\n  id = x\ncontrol:\n  builtin = S4\naction:\n  on = octads\n");
  CHECK_THROWS_AS(build_job(c), ParseError);
  // pi outside N is caught when the relations are built, not when parsing.
  c = parse_config("entry:\n  id = x\ncontrol:\n  builtin = A4\naction:\n  on = natural\nrelations:\n  (12) t[1]\n");
  CHECK(run_job(c).report.status == Status::error);
}

TEST_CASE("explicit control generators") {
  const auto c = parse_config(R"(entry:
  id = s3
control:
  degree = 3
  gen a = (1 2)
  gen b = (1 2 3)
  relator = a^2
  relator = b^3
  relator = (a*b)^2
  order = 6
action:
  on = natural
relations:
  (g[a] t[1])^3
)");
  CHECK(c.generators.size() == 2);
  const auto job = build_job(c);
  CHECK(job.progenitor->control().order == 6);
  CHECK(job.progenitor->control().presentation.generators == std::vector<std::string>{"a", "b"});
  const auto run = run_job(c);
  CHECK(run.report.status == Status::verified);
  CHECK(run.report.index == 4);

  // Generators that do not give the stated order.
  auto bad = c;
  bad.control_order = Integer(12);
  CHECK_THROWS_AS(build_job(bad), ParseError);
}

TEST_CASE("round trip of every catalog file") {
  const auto catalog = load_catalog(default_catalog_dir());
  CHECK(catalog.size() >= 25);
  for (const auto& e : catalog) {
    CAPTURE(e.id());
    const auto text = emit_config(e.config);
    const auto again = parse_config(text);
    CHECK(again == e.config);
    CHECK(emit_config(again) == text);
  }
}

TEST_CASE("action specs") {
  const auto s7 = symmetric_control(7);
  CHECK(build_action("natural + subsets 4", s7).degree() == 42);
  CHECK(build_action("subsets 3", s7).degree() == 35);
  CHECK(build_action("partitions 3 4", s7).degree() == 35);
  CHECK_THROWS_AS(build_action("cubes", s7), std::invalid_argument);
  CHECK_THROWS_AS(build_action("subsets", s7), std::invalid_argument);
  CHECK_THROWS_AS(build_action("unspecified 42", s7), std::invalid_argument);
  const auto m24 = *named_control("M24");
  CHECK(build_action("dodecads 1 2", m24).degree() == 672);
  CHECK(build_action("subsets 4", m24).degree() == 10626);
  CHECK(build_action("trios", m24).degree() == 3795);
  CHECK(build_action("matchsticks", *named_control("L4(2)")).degree() == 105);
  CHECK(build_action("partitions 4 4 4", symmetric_control(12)).degree() == 5775);
  CHECK(build_action("subsets 4", symmetric_control(10)).degree() == 210);
  CHECK(build_action("cosets 17:8", *named_control("L2(16):4")).degree() == 120);
}

TEST_CASE("symplectic control groups") {
  const auto sp6 = named_control("Sp6(2)");
  REQUIRE(sp6);
  CHECK(sp6->degree == 288);
  CHECK(sp6->order == Integer(1451520));
  CHECK(certify(*sp6).ok());
  CHECK(PermutationGroup(sp6->degree, sp6->images).is_transitive());
}
