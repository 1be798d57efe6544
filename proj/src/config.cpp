#include "symgen/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "symgen/geometry.hpp"
#include "symgen/golay.hpp"

namespace symgen {

std::string to_string(Scale s) {
  switch (s) {
    case Scale::desk: return "desk";
    case Scale::heavy: return "heavy";
    case Scale::definition_only: return "definition-only";
  }
  return "?";
}

std::optional<Scale> parse_scale(std::string_view s) {
  if (s == "desk") return Scale::desk;
  if (s == "heavy") return Scale::heavy;
  if (s == "definition-only") return Scale::definition_only;
  return std::nullopt;
}

namespace {

const std::set<std::string, std::less<>> kSources = {"published", "oracle", "frozen", "arithmetic"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

bool is_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

struct Field {
  std::string key;
  std::string value;
  std::size_t line, key_col, value_col;
};

class ConfigParser {
 public:
  explicit ConfigParser(std::string_view text) : text_(text) {}

  JobConfig parse() {
    std::size_t line = 0, start = 0;
    std::string section;
    std::set<std::string> seen;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view raw = text_.substr(start, end - start);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      ++line;
      start = end + 1;
      const std::string_view body = trim(raw);
      if (body.empty() || body[0] == '#') {
        if (end == text_.size()) break;
        continue;
      }
      const std::size_t indent = raw.find(body[0]);
      if (indent == 0) {
        const auto colon = raw.find(':');
        const auto name = trim(raw.substr(0, colon == std::string_view::npos ? raw.size() : colon));
        if (colon == std::string_view::npos || !is_ident(name))
          throw ParseError("expected a section header `name:`", line, 1);
        section = std::string(name);
        if (!kSections.count(section)) throw ParseError("unknown section '" + section + "'", line, 1);
        if (!seen.insert(section).second) throw ParseError("section '" + section + "' repeated", line, 1);
        const auto rest = raw.substr(colon + 1);
        const auto inline_body = trim(rest);
        if (!inline_body.empty()) line_in(section, inline_body, line, colon + 2 + rest.find(inline_body[0]));
      } else {
        if (section.empty()) throw ParseError("indented line outside a section", line, indent + 1);
        line_in(section, body, line, indent + 1);
      }
      if (end == text_.size()) break;
    }
    if (cfg_.id.empty()) throw ParseError("missing `id` in section entry:", line, 1);
    if (cfg_.builtin.empty() && cfg_.generators.empty())
      throw ParseError("section control: needs `builtin` or `gen` lines", line, 1);
    if (!cfg_.builtin.empty() && !cfg_.generators.empty())
      throw ParseError("section control: has both `builtin` and `gen` lines", line, 1);
    if (cfg_.action.empty()) throw ParseError("missing `on` in section action:", line, 1);
    return std::move(cfg_);
  }

 private:
  inline static const std::set<std::string> kSections = {"entry",  "control", "action", "names",
                                                         "relations", "search", "limits", "output"};

  Field field(std::string_view body, std::size_t line, std::size_t col) {
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected `key = value`", line, col);
    Field f;
    f.key = std::string(trim(body.substr(0, eq)));
    const auto rest = body.substr(eq + 1);
    const auto v = trim(rest);
    f.value = std::string(v);
    f.line = line;
    f.key_col = col;
    f.value_col = col + eq + 1 + (v.empty() ? 0 : rest.find(v[0]));
    if (f.key.empty()) throw ParseError("missing key before '='", line, col);
    if (f.value.empty()) throw ParseError("missing value for '" + f.key + "'", line, f.value_col);
    return f;
  }

  [[noreturn]] static void bad_value(const Field& f, const std::string& what) {
    throw ParseError("bad value for '" + f.key + "': " + what, f.line, f.value_col);
  }

  std::size_t count(const Field& f) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(f.value.data(), f.value.data() + f.value.size(), v);
    if (ec != std::errc() || p != f.value.data() + f.value.size()) bad_value(f, "expected a nonnegative integer");
    return v;
  }

  Integer integer(const Field& f, const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      bad_value(f, "expected a nonnegative integer");
    return Integer(text);
  }

  Expectation expectation(const Field& f) {
    const auto w = split_ws(f.value);
    if (w.empty() || w.size() > 2) bad_value(f, "expected `<integer> [source]`");
    Expectation e{integer(f, w[0]), w.size() == 2 ? w[1] : ""};
    if (!e.source.empty() && !kSources.count(e.source))
      bad_value(f, "source must be one of published, oracle, frozen, arithmetic");
    return e;
  }

  void once(const std::string& section, const Field& f) {
    const auto key = section + "." + f.key;
    if (cfg_.positions.at.count(key)) throw ParseError("'" + f.key + "' given twice", f.line, f.key_col);
    cfg_.positions.at[key] = {f.line, f.value_col};
  }

  void line_in(const std::string& section, std::string_view body, std::size_t line, std::size_t col) {
    if (section == "relations") {
      for (auto& r : parse_relations(body, line, col)) cfg_.relations.push_back(std::move(r));
      return;
    }
    const Field f = field(body, line, col);
    if (section == "names") {
      if (!is_ident(f.key)) throw ParseError("bad name '" + f.key + "'", line, col);
      once(section, f);
      cfg_.names.emplace_back(f.key, parse_relation(f.value, line, f.value_col));
      return;
    }
    auto unknown = [&] { throw ParseError("unknown key '" + f.key + "' in section " + section + ":", line, col); };
    if (section == "entry") {
      if (f.key == "note") {
        cfg_.notes.push_back(f.value);
        return;
      }
      once(section, f);
      if (f.key == "id") cfg_.id = f.value;
      else if (f.key == "title") cfg_.title = f.value;
      else if (f.key == "scale") {
        auto s = parse_scale(f.value);
        if (!s) bad_value(f, "expected desk, heavy or definition-only");
        cfg_.scale = *s;
      } else if (f.key == "index") cfg_.index = expectation(f);
      else if (f.key == "order") cfg_.order = expectation(f);
      else if (f.key == "degree") cfg_.degree = expectation(f);
      else if (f.key == "oracle") {
        if (f.value.size() < 2 || !std::strchr("ADE", f.value[0])) bad_value(f, "expected a Weyl type such as E6");
        cfg_.oracle = f.value;
      } else unknown();
    } else if (section == "control") {
      if (f.key == "relator") {
        cfg_.relators.push_back(f.value);
        return;
      }
      const auto w = split_ws(f.key);
      if (w.size() == 2 && w[0] == "gen") {
        if (!is_ident(w[1])) throw ParseError("bad generator name '" + w[1] + "'", line, col);
        for (const auto& g : cfg_.generators)
          if (g.first == w[1]) throw ParseError("generator '" + w[1] + "' given twice", line, col);
        cfg_.generators.emplace_back(w[1], f.value);
        return;
      }
      once(section, f);
      if (f.key == "builtin") cfg_.builtin = f.value;
      else if (f.key == "degree") cfg_.base_degree = count(f);
      else if (f.key == "order") cfg_.control_order = integer(f, f.value);
      else unknown();
    } else if (section == "action") {
      once(section, f);
      if (f.key == "on") cfg_.action = f.value;
      else unknown();
    } else if (section == "search") {
      once(section, f);
      if (!cfg_.search) cfg_.search.emplace();
      if (f.key == "name") {
        if (!is_ident(f.value)) bad_value(f, "expected a name");
        cfg_.search->name = f.value;
      } else if (f.key == "candidates") {
        const auto w = split_ws(f.value);
        const bool ok = (w.size() >= 2 && w[0] == "centralizer") || (w.size() >= 2 && w[0] == "order");
        if (!ok) bad_value(f, "expected `centralizer P Q ...` or `order K [P ...]`");
        cfg_.search->candidates = f.value;
      } else if (f.key == "cap") cfg_.search->cap = count(f);
      else if (f.key == "prefer") cfg_.search->prefer = count(f);
      else unknown();
    } else if (section == "limits") {
      once(section, f);
      if (f.key == "method") {
        if (f.value == "cosets") cfg_.method = Method::cosets;
        else if (f.value == "double-cosets") cfg_.method = Method::double_cosets;
        else bad_value(f, "expected cosets or double-cosets");
      } else if (f.key == "strategy") {
        if (f.value == "felsch") cfg_.strategy = Strategy::felsch;
        else if (f.value == "hlt") cfg_.strategy = Strategy::hlt_lookahead;
        else bad_value(f, "expected felsch or hlt");
      } else if (f.key == "max_cosets") cfg_.max_cosets = count(f);
      else if (f.key == "max_double_cosets") cfg_.max_double_cosets = count(f);
      else unknown();
    } else if (section == "output") {
      once(section, f);
      if (f.key == "json") cfg_.json = f.value;
      else if (f.key == "dot") cfg_.dot = f.value;
      else unknown();
    }
  }

  std::string_view text_;
  JobConfig cfg_;
};

std::string expectation_text(const Expectation& e) {
  auto s = e.value.str();
  if (!e.source.empty()) s += " " + e.source;
  return s;
}

}  // namespace

JobConfig parse_config(std::string_view text) { return ConfigParser(text).parse(); }

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

std::string emit_config(const JobConfig& c) {
  std::ostringstream os;
  os << "entry:\n  id = " << c.id << "\n";
  if (!c.title.empty()) os << "  title = " << c.title << "\n";
  os << "  scale = " << to_string(c.scale) << "\n";
  if (c.index) os << "  index = " << expectation_text(*c.index) << "\n";
  if (c.order) os << "  order = " << expectation_text(*c.order) << "\n";
  if (c.degree) os << "  degree = " << expectation_text(*c.degree) << "\n";
  if (!c.oracle.empty()) os << "  oracle = " << c.oracle << "\n";
  for (const auto& n : c.notes) os << "  note = " << n << "\n";
  os << "control:\n";
  if (!c.builtin.empty()) os << "  builtin = " << c.builtin << "\n";
  if (c.base_degree) os << "  degree = " << c.base_degree << "\n";
  for (const auto& [name, cycles] : c.generators) os << "  gen " << name << " = " << cycles << "\n";
  for (const auto& r : c.relators) os << "  relator = " << r << "\n";
  if (c.control_order) os << "  order = " << *c.control_order << "\n";
  os << "action:\n  on = " << c.action << "\n";
  if (!c.names.empty()) {
    os << "names:\n";
    for (const auto& [name, e] : c.names) os << "  " << name << " = " << to_string(e) << "\n";
  }
  os << "relations:\n";
  for (const auto& r : c.relations) os << "  " << to_string(r) << "\n";
  if (c.search) {
    os << "search:\n  name = " << c.search->name << "\n  candidates = " << c.search->candidates << "\n  cap = "
       << c.search->cap << "\n";
    if (c.search->prefer) os << "  prefer = " << *c.search->prefer << "\n";
  }
  os << "limits:\n  method = " << (c.method == Method::cosets ? "cosets" : "double-cosets") << "\n";
  os << "  strategy = " << (c.strategy == Strategy::felsch ? "felsch" : "hlt") << "\n";
  os << "  max_cosets = " << c.max_cosets << "\n";
  os << "  max_double_cosets = " << c.max_double_cosets << "\n";
  if (!c.json.empty() || !c.dot.empty()) {
    os << "output:\n";
    if (!c.json.empty()) os << "  json = " << c.json << "\n";
    if (!c.dot.empty()) os << "  dot = " << c.dot << "\n";
  }
  return os.str();
}

namespace {

// Sp6(2) on the 288 cosets of S7 and Sp8(2) on the 13056 cosets of S10, read
// off their symmetric presentations over S7 (on points and 4-subsets) and S10
// (on 4-subsets).
ControlGroup symplectic_control(const std::string& name) {
  std::shared_ptr<const Progenitor> p;
  std::string rels;
  if (name == "Sp6(2)") {
    p = std::make_shared<const Progenitor>(symmetric_control(7), union_action({natural_action(7), subsets_action(7, 4)}));
    rels = "((12) t[1])^3, ((45) t[1234])^3, (12)(34)(56) t[1234] t[3456] t[1256] t[7]";
  } else {
    p = std::make_shared<const Progenitor>(symmetric_control(10), subsets_action(10, 4));
    rels = "((45) t[1234])^3, (12)(34)(56) t[1234] t[1256] t[3456] t[7890]";
  }
  std::vector<Word> words;
  for (const auto& r : parse_relations(rels)) words.push_back(relator_word(*p, r));
  auto res = enumerate(p, words);
  if (!std::holds_alternative<SymEnumeration>(res)) throw std::logic_error(name + ": enumeration overflowed");
  const auto& e = std::get<SymEnumeration>(res);
  std::vector<Permutation> images;
  for (std::size_t g = 0; g < e.presentation.num_generators(); ++g)
    images.push_back(e.coset_permutation(Word{static_cast<Letter>(g)}));
  return presented_control(name, e.presentation, std::move(images), e.report.order);
}

}  // namespace

std::optional<ControlGroup> named_control(const std::string& name) {
  if (name == "Sp6(2)" || name == "Sp8(2)") {
    static std::mutex m;
    static std::map<std::string, ControlGroup> cache;
    std::lock_guard lock(m);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, symplectic_control(name)).first;
    return it->second;
  }
  return builtin_control(name);
}

ControlGroup build_control(const JobConfig& c) {
  auto pos = [&](const std::string& key) {
    auto it = c.positions.at.find("control." + key);
    return it == c.positions.at.end() ? std::pair<std::size_t, std::size_t>{0, 0} : it->second;
  };
  auto fail = [&](const std::string& key, const std::string& what) -> ParseError {
    const auto [l, col] = pos(key);
    return ParseError(what, l, col);
  };
  ControlGroup control;
  if (!c.builtin.empty()) {
    auto b = named_control(c.builtin);
    if (!b) throw fail("builtin", "unknown builtin control group '" + c.builtin + "'");
    control = std::move(*b);
  } else {
    if (c.base_degree == 0) throw fail("degree", "control: `degree` is required with `gen` lines");
    Presentation pres;
    std::vector<Permutation> images;
    for (const auto& [name, cycles] : c.generators) {
      pres.generators.push_back(name);
      try {
        images.push_back(parse_cycles(cycles, c.base_degree));
      } catch (const std::invalid_argument& e) {
        throw fail("degree", "generator " + name + ": " + e.what());
      }
    }
    const PermutationGroup group(c.base_degree, images);
    const Integer order = c.control_order.value_or(group.order());
    const std::string name = c.title.empty() ? c.id : c.title;
    if (c.relators.empty()) {
      control = bsgs_control(name, group);
    } else {
      for (const auto& r : c.relators) {
        try {
          pres.relators.push_back(parse_word(r, pres));
        } catch (const std::exception& e) {
          throw fail("degree", "relator '" + r + "': " + e.what());
        }
      }
      control = presented_control(name, pres, images, order);
      if (order <= 2'000'000) control.encoder = cayley_encoder(control.images);
    }
    if (c.control_order && group.order() != *c.control_order)
      throw fail("order", "control generators give order " + group.order().str() + ", not " + c.control_order->str());
  }
  const auto cert = certify(control);
  if (!cert.ok()) throw fail(c.builtin.empty() ? "degree" : "builtin", "control presentation of " + control.name + " failed certification");
  return control;
}

Action build_action(std::string_view spec, const ControlGroup& control) {
  const std::size_t n = control.degree;
  std::vector<Action> parts;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto plus = spec.find('+', start);
    if (plus == std::string_view::npos) plus = spec.size();
    const auto w = split_ws(spec.substr(start, plus - start));
    start = plus + 1;
    if (w.empty()) throw std::invalid_argument("empty action part in '" + std::string(spec) + "'");
    auto number = [&](std::size_t i) {
      std::size_t v = 0;
      if (i >= w.size()) throw std::invalid_argument("action '" + w[0] + "' needs a number");
      auto [p, ec] = std::from_chars(w[i].data(), w[i].data() + w[i].size(), v);
      if (ec != std::errc() || p != w[i].data() + w[i].size() || v == 0)
        throw std::invalid_argument("bad number '" + w[i] + "' in action");
      return v;
    };
    auto need = [&](std::size_t degree) {
      if (n != degree)
        throw std::invalid_argument("action '" + w[0] + "' needs a control group on " + std::to_string(degree) + " points");
    };
    auto arity = [&](std::size_t k) {
      if (w.size() != k) throw std::invalid_argument("action '" + w[0] + "' takes " + std::to_string(k - 1) + " argument(s)");
    };
    const auto& kind = w[0];
    if (kind == "natural") {
      arity(1);
      parts.push_back(natural_action(n));
    } else if (kind == "identity") {
      arity(1);
      parts.push_back(identity_action(n));
    } else if (kind == "subsets") {
      arity(2);
      parts.push_back(subsets_action(n, number(1)));
    } else if (kind == "partitions") {
      std::vector<std::size_t> shape;
      for (std::size_t i = 1; i < w.size(); ++i) shape.push_back(number(i));
      if (shape.empty()) throw std::invalid_argument("action 'partitions' needs block sizes");
      parts.push_back(partitions_action(n, shape));
    } else if (kind == "octads" || kind == "trios" || (kind == "dodecads" && w.size() == 1)) {
      need(24);
      const auto& code = GolayCode::instance();
      parts.push_back(kind == "octads" ? octad_action(code) : kind == "trios" ? trio_action(code) : dodecad_action(code));
    } else if (kind == "dodecads") {
      need(24);
      arity(3);
      const auto a = number(1), b = number(2);
      if (a > 24 || b > 24 || a == b) throw std::invalid_argument("dodecads: need two distinct points 1..24");
      parts.push_back(dodecads_672(GolayCode::instance(), static_cast<Point>(a - 1), static_cast<Point>(b - 1)).action);
    } else if (kind == "matchsticks" || kind == "planes") {
      need(15);
      arity(1);
      const auto g = matchsticks();
      parts.push_back(kind == "matchsticks" ? g.matchstick_action : g.plane_action);
    } else if (kind == "cosets") {
      arity(2);
      if (w[1] != "17:8") throw std::invalid_argument("cosets: only the subgroup 17:8 of L2(16):4 is known");
      need(17);
      parts.push_back(l2_16_4_on_120());
    } else if (kind == "unspecified") {
      throw std::invalid_argument("the action" + (w.size() > 1 ? " on " + w[1] + " points" : std::string()) +
                                  " is not specified");
    } else {
      throw std::invalid_argument("unknown action '" + kind + "'");
    }
    if (plus == spec.size()) break;
  }
  return parts.size() == 1 ? parts[0] : union_action(parts);
}

BuiltJob build_job(const JobConfig& c) {
  auto control = build_control(c);
  Action action = [&] {
    try {
      return build_action(c.action, control);
    } catch (const std::invalid_argument& e) {
      auto it = c.positions.at.find("action.on");
      const auto [l, col] = it == c.positions.at.end() ? std::pair<std::size_t, std::size_t>{0, 0} : it->second;
      throw ParseError(e.what(), l, col);
    }
  }();
  BuiltJob job;
  job.progenitor = std::make_shared<const Progenitor>(std::move(control), std::move(action));
  for (const auto& [name, e] : c.names) job.bindings.names.emplace(name, e);
  return job;
}

Point resolve_point(const Progenitor& p, const Bindings& b, std::string_view token) {
  std::string label(token);
  if (auto it = b.names.find(label); it != b.names.end()) {
    if (it->second.kind != RelationExpr::Kind::symmetric)
      throw std::invalid_argument("name '" + label + "' is not a symmetric generator");
    label = it->second.text;
  }
  if (auto q = p.action().find(label)) return *q;
  throw std::invalid_argument("unknown symmetric generator '" + label + "'");
}

}  // namespace symgen
