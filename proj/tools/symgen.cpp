// symgen: command-line front end for the catalog, the enumerators and symrep.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "symgen/catalog.hpp"
#include "symgen/golay.hpp"
#include "symgen/symrep.hpp"

using namespace symgen;

namespace {

constexpr int kOk = 0, kMismatch = 1, kOverflow = 2, kUsage = 3;

int exit_code(const std::vector<VerificationReport>& reports) {
  int code = kOk;
  for (const auto& r : reports) {
    if (r.status == Status::mismatch || r.status == Status::error) return kMismatch;
    if (r.status == Status::overflow) code = kOverflow;
  }
  return code;
}

void print_table(const std::vector<VerificationReport>& reports) {
  std::cout << std::left << std::setw(16) << "entry" << std::setw(10) << "status" << std::right << std::setw(10)
            << "index" << std::setw(22) << "order" << std::setw(6) << "dc" << std::setw(10) << "seconds"
            << "  notes\n";
  for (const auto& r : reports) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds;
    std::cout << std::left << std::setw(16) << r.entry << std::setw(10) << to_string(r.status) << std::right
              << std::setw(10) << (r.index ? std::to_string(*r.index) : "-") << std::setw(22)
              << (r.order ? r.order->str() : "-") << std::setw(6)
              << (r.double_cosets.empty() ? "-" : std::to_string(r.double_cosets.size())) << std::setw(10)
              << secs.str() << "  " << r.message << "\n";
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const CatalogEntry& entry_or_throw(const std::vector<CatalogEntry>& catalog, const std::string& id) {
  if (const auto* e = find_entry(catalog, id)) return *e;
  throw UsageError("no catalog entry '" + id + "'");
}

/// Runs an entry and insists on a finished enumeration.
EntryRun finished_run(const CatalogEntry& e, RunOptions opt) {
  opt.force = true;
  auto run = run_job(e.config, opt);
  if (!run.enumeration) {
    std::cerr << e.id() << ": " << to_string(run.report.status) << ": " << run.report.message << "\n";
    throw std::runtime_error("entry did not enumerate");
  }
  return run;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric presentations: enumerate, verify and compute with progenitor quotients"};
  app.require_subcommand(1);
  std::string catalog_dir = default_catalog_dir();
  app.add_option("--catalog", catalog_dir, "Catalog directory");

  RunOptions opt;
  std::size_t max_cosets = 0;
  app.add_option("--max-cosets", max_cosets, "Override the coset cap");

  auto* verify = app.add_subcommand("verify", "Run catalog entries against their expected values");
  std::string scale = "desk", entry, json_path;
  bool force = false, lemma = false;
  verify->add_option("--scale", scale, "desk, heavy or definition-only (entries at or below)")
      ->check(CLI::IsMember({"desk", "heavy", "definition-only"}));
  verify->add_option("--entry", entry, "Only this entry");
  verify->add_option("--json", json_path, "Write the reports as JSON");
  verify->add_flag("--force", force, "Also run definition-only entries");
  verify->add_flag("--centralizer", lemma, "Run the two-generator centralizer property check");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate the presentation in a file");
  std::string file, dot_path;
  enumerate_cmd->add_option("FILE", file, "Presentation file")->required();
  enumerate_cmd->add_option("--json", json_path, "Write the report as JSON");
  enumerate_cmd->add_option("--dot", dot_path, "Write the double coset graph");

  auto* suggest = app.add_subcommand("suggest", "Candidates for pi from C_N(Stab_N(points))");
  std::string points;
  suggest->add_option("--entry", entry, "Catalog entry")->required();
  suggest->add_option("--points", points, "Comma-separated labels or names")->required();

  auto* search = app.add_subcommand("search", "Search for pi in a relation template");
  std::string templ, fixed;
  std::uint64_t order = 0;
  std::size_t cap = 20000;
  search->add_option("--entry", entry, "Catalog entry")->required();
  search->add_option("--template", templ, "Relations mentioning pi")->required();
  search->add_option("--order", order, "Order of pi")->required();
  search->add_option("--fix", fixed, "Comma-separated labels whose stabilizer reduces the candidates");
  search->add_option("--cap", cap, "Coset cap per candidate");

  auto* golay = app.add_subcommand("golay", "Golay code, octads, dodecads and trios");
  std::string golay_what;
  std::vector<int> ab;
  golay->add_option("WHAT", golay_what, "counts, dump, trios or dodecads")
      ->required()
      ->check(CLI::IsMember({"counts", "dump", "trios", "dodecads"}));
  golay->add_option("POINTS", ab, "Two points a b (1-based) for dodecads");

  auto* graph = app.add_subcommand("graph", "Double coset Cayley graph of an entry");
  graph->add_option("--entry", entry, "Catalog entry")->required();
  graph->add_option("--dot", dot_path, "Output path (- for stdout)")->required();

  auto* elt = app.add_subcommand("elt", "Element arithmetic in the pi w form");
  std::string op;
  std::vector<std::string> args;
  std::uint64_t seed = 1;
  elt->add_option("--entry", entry, "Catalog entry")->required();
  elt->add_option("--seed", seed, "Seed for rand");
  elt->add_option("OP", op, "mul, inv, canon or rand")->required()->check(CLI::IsMember({"mul", "inv", "canon", "rand"}));
  elt->add_option("ARGS", args, "Elements as `pi = (...) ; w = t1 t2`");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (max_cosets) opt.max_cosets = max_cosets;

  try {
    if (*golay) {
      const auto& code = GolayCode::instance();
      if (golay_what == "counts") {
        std::cout << "octads " << code.octads().size() << " / dodecads " << code.dodecads().size() << " / trios "
                  << trios(code).size() << "\n";
        const bool ok = steiner_check(code);
        std::cout << "steiner S(5,8,24) " << (ok ? "ok" : "FAILED") << "\n";
        return ok ? kOk : kMismatch;
      }
      if (golay_what == "dump") {
        std::cout << golay_dump(code);
        return kOk;
      }
      if (golay_what == "trios") {
        for (const auto& t : trios(code)) std::cout << bitstring(t[0]) << ' ' << bitstring(t[1]) << ' ' << bitstring(t[2]) << "\n";
        return kOk;
      }
      if (ab.size() != 2 || ab[0] < 1 || ab[0] > 24 || ab[1] < 1 || ab[1] > 24 || ab[0] == ab[1])
        throw UsageError("golay dodecads needs two distinct points 1..24");
      const auto fam = dodecads_672(code, static_cast<Point>(ab[0] - 1), static_cast<Point>(ab[1] - 1));
      std::cout << "dodecads containing " << ab[0] << " but not " << ab[1] << ": " << fam.dodecads.size()
                << ", M22 transitive: " << (fam.induced().is_transitive() ? "yes" : "no") << "\n";
      for (auto d : fam.dodecads) std::cout << bitstring(d) << "\n";
      return kOk;
    }

    if (*enumerate_cmd) {
      const auto cfg = load_config(file);
      opt.force = true;
      auto run = run_job(cfg, opt);
      print_table({run.report});
      const std::string jp = json_path.empty() ? cfg.json : json_path;
      const std::string dp = dot_path.empty() ? cfg.dot : dot_path;
      if (!jp.empty()) write_file(jp, to_json(run.report).dump(2) + "\n");
      if (!dp.empty() && run.double_cosets) write_file(dp, to_dot(*run.progenitor, *run.double_cosets, cfg.id));
      return exit_code({run.report});
    }

    const auto catalog = load_catalog(catalog_dir);

    if (*verify) {
      opt.force = force;
      opt.centralizer_check = lemma;
      std::vector<VerificationReport> reports;
      if (!entry.empty()) reports.push_back(run_entry(entry_or_throw(catalog, entry), opt));
      else reports = run_all(catalog, *parse_scale(scale), opt);
      print_table(reports);
      if (!json_path.empty()) {
        auto j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        write_file(json_path, j.dump(2) + "\n");
      }
      return exit_code(reports);
    }

    const auto& e = entry_or_throw(catalog, entry);

    if (*suggest) {
      const auto job = build_job(e.config);
      std::vector<Point> pts;
      for (const auto& tok : split(points, ',')) pts.push_back(resolve_point(*job.progenitor, job.bindings, tok));
      const auto c = lemma_centralizer(*job.progenitor, pts);
      std::cout << "|C_N(Stab_N(points))| = " << c.order() << "\n";
      for (const auto& g : candidates_from_centralizer(*job.progenitor, pts)) std::cout << to_cycle_string(g) << "\n";
      return kOk;
    }

    if (*search) {
      auto job = build_job(e.config);
      std::vector<Point> pts;
      for (const auto& tok : split(fixed, ',')) pts.push_back(resolve_point(*job.progenitor, job.bindings, tok));
      const auto cands = candidates_of_order(*job.progenitor, order, pts);
      const auto res = relation_search(job.progenitor, parse_relations(templ), cands, cap, job.bindings,
                                       e.config.strategy, e.config.method);
      std::cout << "candidates " << res.candidates << ", survivors " << res.survivors.size() << "\n";
      for (const auto& h : res.all)
        std::cout << (h.index ? std::to_string(*h.index) : "overflow") << "  " << to_cycle_string(h.pi) << "\n";
      return res.survivors.empty() ? kMismatch : kOk;
    }

    if (*graph) {
      const auto run = finished_run(e, opt);
      const auto dot = to_dot(*run.progenitor, *run.double_cosets, e.id());
      if (dot_path == "-") std::cout << dot;
      else write_file(dot_path, dot);
      return exit_code({run.report});
    }

    if (*elt) {
      const auto run = finished_run(e, opt);
      const SymContext ctx(*run.enumeration);
      const auto& p = *run.progenitor;
      auto arg = [&](std::size_t i) {
        if (i >= args.size()) throw UsageError("elt " + op + " needs " + std::to_string(i + 1) + " element(s)");
        return parse_element(p, args[i]);
      };
      SymElement out;
      if (op == "mul") out = ctx.multiply(arg(0), arg(1));
      else if (op == "inv") out = ctx.invert(arg(0));
      else if (op == "canon") out = ctx.canonicalize(arg(0));
      else {
        std::mt19937_64 rng(seed);
        out = ctx.random_element(rng);
      }
      std::cout << format_element(out) << "\n";
      return kOk;
    }
  } catch (const UsageError& ex) {
    std::cerr << "symgen: " << ex.what() << "\n";
    return kUsage;
  } catch (const ParseError& ex) {
    std::cerr << "symgen: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "symgen: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "symgen: " << ex.what() << "\n";
    return kMismatch;
  }
  return kOk;
}
