#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symgen/double_coset_enum.hpp"
#include "symgen/progenitor.hpp"

namespace symgen {

/// An expected value and where it comes from: published, oracle, frozen or arithmetic.
struct Expectation {
  Integer value;
  std::string source;
  friend bool operator==(const Expectation&, const Expectation&) = default;
};

enum class Scale { desk, heavy, definition_only };
std::string to_string(Scale s);
std::optional<Scale> parse_scale(std::string_view s);

/// Candidates for a bound permutation, tried one by one (relation_search).
///   candidates = centralizer A B     nontrivial elements of C_N(Stab_N(A, B))
///   candidates = order 12 A          elements of order 12 up to Stab_N(A)
struct SearchSpec {
  std::string name = "pi";
  std::string candidates;
  std::size_t cap = 100'000;
  std::optional<std::size_t> prefer;  // take the first survivor with this index
  friend bool operator==(const SearchSpec&, const SearchSpec&) = default;
};

/// Source positions of keys, for diagnostics; ignored by comparisons.
struct ConfigPositions {
  std::map<std::string, std::pair<std::size_t, std::size_t>> at;
  friend bool operator==(const ConfigPositions&, const ConfigPositions&) { return true; }
};

/// A parsed presentation file (see docs/config.md for the grammar).
struct JobConfig {
  // entry:
  std::string id;
  std::string title;
  Scale scale = Scale::desk;
  std::optional<Expectation> index;
  std::optional<Expectation> order;
  std::optional<Expectation> degree;  // number of symmetric generators
  std::string oracle;                 // Weyl type, e.g. E6
  std::vector<std::string> notes;
  // control:
  std::string builtin;
  std::size_t base_degree = 0;
  std::vector<std::pair<std::string, std::string>> generators;  // name, cycles
  std::vector<std::string> relators;
  std::optional<Integer> control_order;
  // action:
  std::string action;
  // names:
  std::vector<std::pair<std::string, RelationExpr>> names;
  // relations:
  std::vector<RelationExpr> relations;
  // search:
  std::optional<SearchSpec> search;
  // limits:
  Method method = Method::cosets;
  Strategy strategy = Strategy::felsch;
  std::size_t max_cosets = 5'000'000;
  std::size_t max_double_cosets = 20'000;
  // output:
  std::string json;
  std::string dot;

  ConfigPositions positions;
  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

/// Parses a presentation file; throws ParseError with line and column.
JobConfig parse_config(std::string_view text);
JobConfig load_config(const std::string& path);
/// Canonical text; parse_config(emit_config(c)) == c.
std::string emit_config(const JobConfig& c);

/// Control groups by name: everything builtin_control knows, plus Sp6(2) on
/// the 288 cosets of S7 and Sp8(2) on the 13056 cosets of S10, each built by
/// enumerating its symmetric presentation over S7 or S10 (cached).
std::optional<ControlGroup> named_control(const std::string& name);

ControlGroup build_control(const JobConfig& c);
/// Action spec, e.g. `subsets 3`, `natural + subsets 4`, `dodecads 1 2`.
/// Throws std::invalid_argument for unknown specs.
Action build_action(std::string_view spec, const ControlGroup& control);

/// The progenitor and bindings described by a file (semantic errors are ParseErrors at the offending key).
struct BuiltJob {
  std::shared_ptr<const Progenitor> progenitor;
  Bindings bindings;
};
BuiltJob build_job(const JobConfig& c);

/// Resolves a point reference: a bound name standing for t[label], or a label.
Point resolve_point(const Progenitor& p, const Bindings& b, std::string_view token);

}  // namespace symgen
