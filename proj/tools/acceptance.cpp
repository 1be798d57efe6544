// acceptance: one PASS/FAIL line per acceptance criterion, with timings.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "symgen/catalog.hpp"
#include "symgen/golay.hpp"
#include "symgen/symrep.hpp"

using namespace symgen;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget;  // seconds
  std::function<Outcome(double&)> run;  // may add precomputed time to the clock
};

/// Connectivity read back from the DOT text alone.
bool dot_connected(const std::string& dot) {
  static const std::regex node(R"(^\s*(d\d+) \[label)"), edge(R"(^\s*(d\d+) -> (d\d+))");
  std::map<std::string, std::set<std::string>> adj;
  std::istringstream is(dot);
  for (std::string line; std::getline(is, line);) {
    std::smatch m;
    if (std::regex_search(line, m, edge)) {
      adj[m[1]].insert(m[2]);
      adj[m[2]].insert(m[1]);
    } else if (std::regex_search(line, m, node)) {
      adj[m[1]];
    }
  }
  if (adj.empty()) return false;
  std::set<std::string> seen{adj.begin()->first};
  std::vector<std::string> stack{adj.begin()->first};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == adj.size();
}

std::string fmt(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks for symgen"};
  bool heavy = std::getenv("SYMGEN_HEAVY_TESTS") && std::string(std::getenv("SYMGEN_HEAVY_TESTS")) != "0";
  std::vector<int> only;
  app.add_flag("--heavy", heavy, "Also run the heavy criterion (or set SYMGEN_HEAVY_TESTS=1)");
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const auto catalog = load_catalog(default_catalog_dir());
  auto entry = [&](const std::string& id) -> const CatalogEntry& {
    const auto* e = find_entry(catalog, id);
    if (!e) throw std::runtime_error("catalog entry missing: " + id);
    return *e;
  };

  // Desk runs are shared by several criteria; each is done once, on demand.
  std::map<std::string, EntryRun> runs;
  std::set<std::string> touched;  // by the current criterion
  auto desk_run = [&](const std::string& id, double& clock) -> const EntryRun& {
    touched.insert(id);
    auto it = runs.find(id);
    if (it == runs.end()) {
      const auto t = Clock::now();
      it = runs.emplace(id, run_job(entry(id).config)).first;
      clock += since(t);
    }
    return it->second;
  };
  auto desk_ids = [&] {
    std::vector<std::string> ids;
    for (const auto& e : catalog)
      if (e.config.scale == Scale::desk) ids.push_back(e.id());
    return ids;
  };
  const std::vector<std::string> weyl = {"coxeter-A2", "coxeter-A3", "coxeter-A4", "coxeter-A5", "coxeter-A6",
                                         "coxeter-D4", "coxeter-D5", "coxeter-D6", "coxeter-E6", "coxeter-E7",
                                         "coxeter-E8"};

  std::vector<Criterion> criteria;

  criteria.push_back({1, "Golay code: 759 octads, 2576 dodecads, 3795 trios, Steiner system S(5,8,24)", 10,
                      [&](double&) {
                        Outcome o;
                        const auto& code = GolayCode::instance();
                        o.require(code.octads().size() == 759, "octads " + std::to_string(code.octads().size()));
                        o.require(code.dodecads().size() == 2576, "dodecads " + std::to_string(code.dodecads().size()));
                        const auto n = trios(code).size();
                        o.require(n == 3795, "trios " + std::to_string(n));
                        o.require(steiner_check(code), "Steiner check failed");
                        return o;
                      }});

  criteria.push_back({2, "action degrees 672, 10626, 105, 3795, 5775, 210 and the 13056 coset space", 60, [&](double&) {
                        Outcome o;
                        const auto m24c = *named_control("M24");
                        auto deg = [&](const std::string& spec, const ControlGroup& n, std::size_t want) {
                          const auto d = build_action(spec, n).degree();
                          o.require(d == want, spec + " gives " + std::to_string(d));
                        };
                        deg("dodecads 1 2", m24c, 672);
                        deg("subsets 4", m24c, 10626);
                        deg("matchsticks", *named_control("L4(2)"), 105);
                        deg("trios", m24c, 3795);
                        deg("partitions 4 4 4", symmetric_control(12), 5775);
                        deg("subsets 4", symmetric_control(10), 210);
                        const auto sp8 = named_control("Sp8(2)");
                        o.require(sp8 && sp8->degree == 13056, "Sp8(2) coset space");
                        if (sp8)
                          o.require(PermutationGroup(sp8->degree, sp8->images).is_transitive(),
                                    "Sp8(2) coset space is not transitive");
                        return o;
                      }});

  criteria.push_back({3, "M24 preserves the octads, is 5-transitive, order 244823040", 30, [&](double&) {
                        Outcome o;
                        const auto& code = GolayCode::instance();
                        const auto& g = m24();
                        o.require(g.order() == kM24Order, "order " + g.order().str());
                        for (const auto& s : g.generators())
                          for (auto oct : code.octads()) {
                            Block24 img = 0;
                            for (Point x = 0; x < 24; ++x)
                              if (oct >> x & 1) img |= Block24{1} << s(x);
                            if (!std::binary_search(code.octads().begin(), code.octads().end(), img)) {
                              o.require(false, "a generator moves an octad off the code");
                              return o;
                            }
                          }
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
                        o.require(queue.size() == 24u * 23 * 22 * 21 * 20,
                                  "ordered 5-tuple orbit " + std::to_string(queue.size()));
                        return o;
                      }});

  criteria.push_back({4, "Weyl groups A2..A6, D4..D6, E6..E8: indices, oracle orders, Coxeter relations", 300,
                      [&](double& clock) {
                        Outcome o;
                        for (const auto& id : weyl) {
                          const auto& r = desk_run(id, clock).report;
                          const char type = id[8];
                          const std::size_t n = std::stoul(id.substr(9));
                          std::size_t want = type == 'A' ? n + 1 : type == 'D' ? std::size_t{1} << (n - 1)
                                             : n == 6   ? 72
                                             : n == 7   ? 576
                                                        : 17280;
                          o.require(r.status == Status::verified, id + " " + to_string(r.status) + " " + r.message);
                          o.require(r.index == want, id + " index");
                          o.require(r.oracle_order && r.order == r.oracle_order, id + " oracle order");
                          o.require(r.coxeter_relations == true, id + " Coxeter relations");
                        }
                        return o;
                      }});

  criteria.push_back({5, "Sp6(2) 288, McL:2 4050, J3:2 6156: control embeds, order = index * |N|", 900,
                      [&](double& clock) {
                        Outcome o;
                        for (auto [id, want] : {std::pair{"sp62-S7", 288}, {"mcl2-M22", 4050}, {"j32-L2_16_4", 6156}}) {
                          const auto& run = desk_run(id, clock);
                          const auto& r = run.report;
                          o.require(r.status == Status::verified, std::string(id) + " " + to_string(r.status) + " " + r.message);
                          o.require(r.index == std::size_t(want), std::string(id) + " index");
                          o.require(r.control_embeds == true, std::string(id) + " embedding");
                          o.require(r.order && run.progenitor && *r.order == Integer(want) * run.progenitor->control().order,
                                    std::string(id) + " order");
                        }
                        return o;
                      }});

  criteria.push_back({6, "centralizer property of <t_i, t_j> on W(E6), Sp6(2), McL:2: no violations", 600,
                      [&](double& clock) {
                        Outcome o;
                        for (const char* id : {"coxeter-E6", "sp62-S7", "mcl2-M22"}) {
                          const auto& run = desk_run(id, clock);
                          if (!run.enumeration) {
                            o.require(false, std::string(id) + " did not enumerate");
                            continue;
                          }
                          const auto c = centralizer_property(*run.enumeration);
                          o.require(c.violations == 0, std::string(id) + " violations " + std::to_string(c.violations));
                          o.require(c.hits > 0, std::string(id) + " no words landed in N");
                        }
                        return o;
                      }});

  criteria.push_back({7, "perfect controls: abelianization in {1, 2}, and 1 with an odd relation", 120,
                      [&](double& clock) {
                        Outcome o;
                        std::size_t perfect = 0;
                        for (const auto& id : desk_ids()) {
                          const auto& run = desk_run(id, clock);
                          if (!run.progenitor || run.relators.empty()) continue;
                          const auto perf = perfectness(*run.progenitor, run.relators);
                          if (!perf.control_perfect) continue;
                          ++perfect;
                          o.require(perf.consistent == true, id + " abelianization " +
                                                                 (perf.abelianization ? perf.abelianization->str() : "infinite"));
                        }
                        // The Conway entry: M24 perfect, the relation pi t t t has odd length.
                        const auto& c = entry("dot0-M24").config;
                        auto job = build_job(c);
                        const auto cands = search_candidates(*job.progenitor, job.bindings, *c.search);
                        o.require(cands.size() == 1, "dot0-M24 candidates " + std::to_string(cands.size()));
                        if (!cands.empty()) {
                          job.bindings.permutations.insert_or_assign(c.search->name, cands[0]);
                          std::vector<Word> rel;
                          for (const auto& e : c.relations) rel.push_back(relator_word(*job.progenitor, e, job.bindings));
                          const auto perf = perfectness(*job.progenitor, rel);
                          ++perfect;
                          o.require(perf.control_perfect && perf.odd_relation, "dot0-M24 is not an odd-relation case");
                          o.require(perf.abelianization == Integer(1), "dot0-M24 abelianization");
                        }
                        o.require(perfect >= 2, "too few perfect-control entries");
                        return o;
                      }});

  criteria.push_back({8, "double coset sizes sum to the index; the DOT graph is connected", 300, [&](double& clock) {
                        Outcome o;
                        for (const auto& id : desk_ids()) {
                          const auto& run = desk_run(id, clock);
                          if (!run.double_cosets || !run.enumeration) {
                            o.require(false, id + " has no double coset table");
                            continue;
                          }
                          std::size_t sum = 0;
                          for (const auto& d : run.report.double_cosets) sum += d.size;
                          o.require(sum == run.enumeration->report.index, id + " sizes sum to " + std::to_string(sum));
                          o.require(dot_connected(to_dot(*run.progenitor, *run.double_cosets, id)), id + " DOT graph");
                        }
                        return o;
                      }});

  criteria.push_back({9, "conjugation law on 100 samples per entry", 300, [&](double& clock) {
                        Outcome o;
                        std::mt19937_64 rng(2024);
                        for (const auto& id : desk_ids()) {
                          const auto& run = desk_run(id, clock);
                          if (!run.enumeration) {
                            o.require(false, id + " did not enumerate");
                            continue;
                          }
                          const auto v = conjugation_law_violations(*run.enumeration, 100, rng);
                          o.require(v == 0, id + " violations " + std::to_string(v));
                        }
                        return o;
                      }});

  criteria.push_back({10, "symrep: 1000 operations on McL:2 and W(E7) agree with the oracle; canonical forms are idempotent",
                      300, [&](double& clock) {
                        Outcome o;
                        for (const char* id : {"mcl2-M22", "coxeter-E7"}) {
                          const auto& run = desk_run(id, clock);
                          if (!run.enumeration) {
                            o.require(false, std::string(id) + " did not enumerate");
                            continue;
                          }
                          const SymContext ctx(*run.enumeration);
                          std::mt19937_64 rng(99);
                          std::size_t bad = 0, unstable = 0;
                          for (int k = 0; k < 1000; ++k) {
                            const auto a = ctx.random_element(rng), b = ctx.random_element(rng);
                            SymElement out;
                            Permutation want;
                            if (k % 3 == 0) {
                              out = ctx.multiply(a, b);
                              want = ctx.image(a) * ctx.image(b);
                            } else if (k % 3 == 1) {
                              out = ctx.invert(a);
                              want = ctx.image(a).inverse();
                            } else {
                              auto padded = a;
                              padded.w.push_back(static_cast<Point>(k % ctx.progenitor().degree()));
                              padded.w.push_back(padded.w.back());
                              out = ctx.canonicalize(padded);
                              want = ctx.image(a);
                              if (!(out == a)) ++bad;
                            }
                            if (ctx.image(out) != want) ++bad;
                            if (!(ctx.canonicalize(out) == out)) ++unstable;
                          }
                          o.require(bad == 0, std::string(id) + " mismatches " + std::to_string(bad));
                          o.require(unstable == 0, std::string(id) + " non-idempotent " + std::to_string(unstable));
                        }
                        return o;
                      }});

  criteria.push_back({11, "heavy: Tits group index 748800 and Sp8(2) index 13056, each within 60 minutes", 7200,
                      [&](double&) {
                        Outcome o;
                        for (auto [id, want] : {std::pair{"tits-S4", 748800}, {"sp82-S10", 13056}}) {
                          const auto r = run_entry(entry(id));
                          o.require(r.status == Status::verified, std::string(id) + " " + to_string(r.status) + " " + r.message);
                          o.require(r.index == std::size_t(want), std::string(id) + " index");
                          o.require(r.seconds < 3600, std::string(id) + " took " + fmt(r.seconds) + " s");
                          std::cout << "      " << id << ": " << fmt(r.seconds) << " s\n";
                        }
                        return o;
                      }});

  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
    if (c.number == 11 && !heavy) {
      std::cout << "SKIP  [11] " << c.title << "  (set SYMGEN_HEAVY_TESTS=1 or pass --heavy)\n";
      continue;
    }
    double clock = 0;
    touched.clear();
    const auto t = Clock::now();
    Outcome o;
    try {
      o = c.run(clock);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    // Shared entry runs are charged to every criterion that uses them.
    double secs = since(t) - clock;
    for (const auto& id : touched) secs += runs.at(id).report.seconds;
    o.require(secs <= c.budget, "over the " + fmt(c.budget) + " s budget");
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << c.number << "] " << c.title << "  (" << fmt(secs) << " s)"
              << (o.detail.empty() ? "" : "  -- " + o.detail) << "\n"
              << std::flush;
  }
  return all ? 0 : 1;
}
