#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symgen/config.hpp"

namespace symgen {

struct CatalogEntry {
  JobConfig config;
  std::string path;
  const std::string& id() const { return config.id; }
};

/// Directory of the shipped catalog: $SYMGEN_CATALOG if set, else the source tree's data/catalog.
std::string default_catalog_dir();
/// Every *.sym file in the directory, sorted by id; throws ParseError on bad files.
std::vector<CatalogEntry> load_catalog(const std::string& dir);
const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, const std::string& id);

enum class Status { verified, overflow, mismatch, skipped, error };
std::string to_string(Status s);

struct DoubleCosetSummary {
  std::size_t size = 0;
  Integer stab_order;
  std::string word;
};

/// Outcome of one catalog entry.
struct VerificationReport {
  std::string entry;
  Status status = Status::error;
  std::string message;  // reasons for anything but `verified`
  std::optional<std::size_t> degree;   // symmetric generators
  std::optional<std::size_t> index;
  std::optional<Integer> order;
  std::optional<Integer> abelianization;
  std::optional<std::string> pi;       // permutation chosen by the search
  std::vector<DoubleCosetSummary> double_cosets;
  std::size_t defined = 0;
  std::size_t merged = 0;
  double seconds = 0;

  // Checks, when they were run.
  std::optional<bool> control_embeds;
  std::optional<Integer> oracle_order;
  std::optional<bool> coxeter_relations;
  std::optional<bool> partition;       // double coset sizes sum to the index
  std::optional<bool> connected;       // the double coset graph
  std::optional<std::size_t> conjugation_violations;
  std::optional<bool> perfectness_consistent;
  std::optional<CentralizerCheck> centralizer;
};

struct RunOptions {
  std::optional<std::size_t> max_cosets;  // overrides the file
  std::optional<std::size_t> memory_mb;   // caps the coset table (default $SYMGEN_MEMORY_MB)
  bool force = false;                     // run definition-only entries too
  bool centralizer_check = false;         // bounded words in <t_i, t_j>
  std::size_t conjugation_samples = 100;
  std::uint64_t seed = 1;
};

/// A run together with the objects it produced (for graphs, symrep, tests).
struct EntryRun {
  VerificationReport report;
  std::shared_ptr<const Progenitor> progenitor;
  Bindings bindings;
  std::vector<Word> relators;
  std::optional<SymEnumeration> enumeration;
  std::optional<DoubleCosetTable> double_cosets;
};

/// Builds the entry, runs the search if any, enumerates and checks the
/// result against the expectations.  Never throws for entry-level failures.
EntryRun run_job(const JobConfig& c, const RunOptions& opt = {});
VerificationReport run_entry(const CatalogEntry& e, const RunOptions& opt = {});
/// Entries of the given scale or below, concurrently; reports ordered by id.
std::vector<VerificationReport> run_all(const std::vector<CatalogEntry>& catalog, Scale up_to,
                                        const RunOptions& opt = {});

nlohmann::json to_json(const VerificationReport& r);

/// Candidates described by a search spec (`centralizer P ...` or `order K P ...`).
std::vector<Permutation> search_candidates(const Progenitor& p, const Bindings& b, const SearchSpec& s);

}  // namespace symgen
