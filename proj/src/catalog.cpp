#include "symgen/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

#include "symgen/weyl.hpp"

#ifndef SYMGEN_CATALOG_DIR
#define SYMGEN_CATALOG_DIR "data/catalog"
#endif

namespace symgen {

std::string default_catalog_dir() {
  if (const char* d = std::getenv("SYMGEN_CATALOG"); d && *d) return d;
  return SYMGEN_CATALOG_DIR;
}

std::vector<CatalogEntry> load_catalog(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<CatalogEntry> out;
  for (const auto& f : fs::directory_iterator(dir))
    if (f.is_regular_file() && f.path().extension() == ".sym") out.push_back({load_config(f.path().string()), f.path().string()});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id() < b.id(); });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].id() == out[i - 1].id()) throw std::runtime_error("duplicate catalog id " + out[i].id());
  return out;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, const std::string& id) {
  for (const auto& e : catalog)
    if (e.id() == id) return &e;
  return nullptr;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::overflow: return "overflow";
    case Status::mismatch: return "mismatch";
    case Status::skipped: return "skipped";
    case Status::error: return "error";
  }
  return "?";
}

std::vector<Permutation> search_candidates(const Progenitor& p, const Bindings& b, const SearchSpec& s) {
  std::istringstream is(s.candidates);
  std::string kind;
  is >> kind;
  std::uint64_t order = 0;
  if (kind == "order" && !(is >> order)) throw std::invalid_argument("search: `order` needs an element order");
  std::vector<Point> points;
  for (std::string tok; is >> tok;) points.push_back(resolve_point(p, b, tok));
  if (kind == "centralizer") return candidates_from_centralizer(p, points);
  if (kind == "order") return candidates_of_order(p, order, points);
  throw std::invalid_argument("search: unknown candidate source '" + kind + "'");
}

namespace {

std::optional<std::size_t> env_memory_mb() {
  if (const char* m = std::getenv("SYMGEN_MEMORY_MB"); m && *m) {
    char* end = nullptr;
    const auto v = std::strtoull(m, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::nullopt;
}

void fail(VerificationReport& r, Status s, const std::string& why) {
  if (r.status == Status::verified || r.status == Status::error || s == Status::error) r.status = s;
  if (!r.message.empty()) r.message += "; ";
  r.message += why;
}

void expect(VerificationReport& r, const char* what, const std::optional<Expectation>& e, const Integer& got) {
  if (e && e->value != got)
    fail(r, Status::mismatch,
         std::string(what) + " " + got.str() + " but expected " + e->value.str() +
             (e->source.empty() ? "" : " (" + e->source + ")"));
}

void check(VerificationReport& r, bool ok, const std::string& what) {
  if (!ok) fail(r, Status::mismatch, what);
}

}  // namespace

EntryRun run_job(const JobConfig& c, const RunOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  EntryRun run;
  auto& r = run.report;
  r.entry = c.id;
  auto finish = [&]() -> EntryRun& {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
  };
  const bool skip = c.scale == Scale::definition_only && !opt.force;
  try {
    auto job = build_job(c);
    run.progenitor = job.progenitor;
    run.bindings = std::move(job.bindings);
  } catch (const std::exception& e) {
    r.status = skip ? Status::skipped : Status::error;
    r.message = std::string(skip ? "definition-only; " : "") + "construction failed: " + e.what();
    return finish();
  }
  const auto& p = run.progenitor;
  r.degree = p->degree();
  r.status = Status::verified;
  expect(r, "degree", c.degree, Integer(p->degree()));
  if (skip) {
    if (r.status == Status::verified) {
      r.status = Status::skipped;
      r.message = "definition-only; degree checked";
    }
    return finish();
  }

  try {
    if (c.search) {
      const auto cands = search_candidates(*p, run.bindings, *c.search);
      const auto res = relation_search(p, c.relations, cands, c.search->cap, run.bindings, c.strategy, c.method);
      const SearchHit* pick = nullptr;
      for (const auto& h : res.survivors)
        if (!pick && (!c.search->prefer || h.index == c.search->prefer)) pick = &h;
      if (!pick) {
        fail(r, Status::mismatch, "search: no candidate among " + std::to_string(res.candidates) + " survived");
        return finish();
      }
      r.pi = to_cycle_string(pick->pi);
      run.bindings.permutations.insert_or_assign(c.search->name, pick->pi);
    }
    for (const auto& rel : c.relations) run.relators.push_back(relator_word(*p, rel, run.bindings));

    std::size_t cap = opt.max_cosets.value_or(c.max_cosets);
    if (const auto mb = opt.memory_mb ? opt.memory_mb : env_memory_mb()) {
      const std::size_t row = 8 * p->presentation().num_generators() + 16;
      cap = std::min(cap, *mb * (std::size_t{1} << 20) / row);
    }
    SymResult res;
    if (c.method == Method::double_cosets) {
      std::vector<ProgElement> els;
      for (const auto& rel : c.relations) els.push_back(relation_element(*p, rel, run.bindings));
      DoubleCosetStats st;
      res = enumerate_double_cosets(p, els, {c.max_double_cosets, cap}, &st);
      r.defined = st.defined;
      r.merged = st.merged;
    } else {
      res = enumerate(p, run.relators, {cap, c.strategy});
    }
    if (auto* o = std::get_if<Overflow>(&res)) {
      if (c.method == Method::cosets) {
        r.defined = o->stats.defined;
        r.merged = o->stats.merges;
      }
      r.status = Status::overflow;
      r.message = o->message();
      return finish();
    }
    auto& e = run.enumeration.emplace(std::get<SymEnumeration>(std::move(res)));
    if (c.method == Method::cosets) {
      r.defined = e.report.stats.defined;
      r.merged = e.report.stats.merges;
    }
    r.index = e.report.index;
    r.order = e.report.order;
    r.control_embeds = e.report.control_embeds;
    expect(r, "index", c.index, Integer(e.report.index));
    expect(r, "order", c.order, e.report.order);
    check(r, e.report.control_embeds, "control group does not embed");
    check(r, e.report.order == Integer(e.report.index) * p->control().order, "order is not index * |N|");

    const auto& dct = run.double_cosets.emplace(double_coset_analysis(e));
    for (const auto& d : dct.cosets) r.double_cosets.push_back({d.size, d.stabilizer_order, double_coset_name(*p, d)});
    r.partition = dct.index() == e.report.index;
    r.connected = dct.connected();
    check(r, *r.partition, "double coset sizes do not sum to the index");
    check(r, *r.connected, "double coset graph is not connected");

    std::mt19937_64 rng(opt.seed);
    r.conjugation_violations = conjugation_law_violations(e, opt.conjugation_samples, rng);
    check(r, *r.conjugation_violations == 0, "conjugation law violated");

    const auto perf = perfectness(*p, run.relators);
    r.abelianization = perf.abelianization;
    r.perfectness_consistent = perf.consistent;
    check(r, perf.consistent.value_or(true), "abelianization contradicts the perfect-control criterion");

    if (!c.oracle.empty()) {
      const auto w = weyl_oracle(c.oracle[0], std::stoul(c.oracle.substr(1)));
      r.oracle_order = w.group().order();
      check(r, *r.oracle_order == e.report.order, "order differs from the Weyl group oracle");
      auto images = e.control_on_cosets();
      images.push_back(e.t_on_cosets()[p->orbits()[0].rep]);
      r.coxeter_relations = images.size() == w.rank && satisfies_coxeter_relations(images, coxeter_matrix(w));
      check(r, *r.coxeter_relations, "images fail the Coxeter relations of the oracle diagram");
    }
    if (opt.centralizer_check) {
      r.centralizer = centralizer_property(e);
      check(r, r.centralizer->violations == 0, "a word in <t_i, t_j> lands in N outside C_N(Stab_N(i, j))");
    }
  } catch (const std::exception& ex) {
    fail(r, Status::error, ex.what());
  }
  return finish();
}

VerificationReport run_entry(const CatalogEntry& e, const RunOptions& opt) { return run_job(e.config, opt).report; }

std::vector<VerificationReport> run_all(const std::vector<CatalogEntry>& catalog, Scale up_to, const RunOptions& opt) {
  std::vector<const CatalogEntry*> todo;
  for (const auto& e : catalog)
    if (e.config.scale <= up_to) todo.push_back(&e);
  std::vector<VerificationReport> out(todo.size());
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t i = 0; i < todo.size(); i += width) {
    std::vector<std::future<VerificationReport>> batch;
    for (std::size_t j = i; j < std::min(todo.size(), i + width); ++j)
      batch.push_back(std::async(std::launch::async, [&, j] { return run_entry(*todo[j], opt); }));
    for (std::size_t j = 0; j < batch.size(); ++j) out[i + j] = batch[j].get();
  }
  return out;
}

namespace {

nlohmann::json integer_json(const Integer& v) {
  if (v <= Integer(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(v);
  return v.str();
}

template <class T, class F>
nlohmann::json optional_json(const std::optional<T>& v, F f) {
  return v ? f(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
  using nlohmann::json;
  auto ident = [](const auto& x) { return json(x); };
  json j;
  j["entry"] = r.entry;
  j["status"] = to_string(r.status);
  j["index"] = optional_json(r.index, ident);
  j["order"] = optional_json(r.order, integer_json);
  j["abelianization"] = optional_json(r.abelianization, integer_json);
  j["double_cosets"] = json::array();
  for (const auto& d : r.double_cosets)
    j["double_cosets"].push_back({{"size", d.size}, {"stab_order", integer_json(d.stab_order)}, {"word", d.word}});
  j["stats"] = {{"defined", r.defined}, {"merged", r.merged}, {"seconds", r.seconds}};
  j["degree"] = optional_json(r.degree, ident);
  j["pi"] = optional_json(r.pi, ident);
  j["message"] = r.message;
  json checks = json::object();
  if (r.control_embeds) checks["control_embeds"] = *r.control_embeds;
  if (r.oracle_order) checks["oracle_order"] = integer_json(*r.oracle_order);
  if (r.coxeter_relations) checks["coxeter_relations"] = *r.coxeter_relations;
  if (r.partition) checks["partition"] = *r.partition;
  if (r.connected) checks["connected"] = *r.connected;
  if (r.conjugation_violations) checks["conjugation_violations"] = *r.conjugation_violations;
  if (r.perfectness_consistent) checks["perfectness_consistent"] = *r.perfectness_consistent;
  if (r.centralizer)
    checks["centralizer"] = {{"pairs", r.centralizer->pairs},
                             {"words", r.centralizer->words},
                             {"hits", r.centralizer->hits},
                             {"violations", r.centralizer->violations}};
  j["checks"] = checks;
  return j;
}

}  // namespace symgen
