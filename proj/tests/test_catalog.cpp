#include <doctest.h>

#include <set>

#include "symgen/catalog.hpp"

using namespace symgen;

namespace {

const std::vector<CatalogEntry>& catalog() {
  static const auto c = load_catalog(default_catalog_dir());
  return c;
}

const CatalogEntry& entry(const std::string& id) {
  const auto* e = find_entry(catalog(), id);
  REQUIRE(e);
  return *e;
}

}  // namespace

TEST_CASE("catalog contents") {
  std::set<std::string> desk, heavy, defonly;
  for (const auto& e : catalog()) {
    (e.config.scale == Scale::desk ? desk : e.config.scale == Scale::heavy ? heavy : defonly).insert(e.id());
    if (e.config.index && e.config.scale == Scale::desk) CHECK(e.config.index->value <= 20000);
    if (e.config.index && e.config.scale == Scale::heavy && e.id() != "fi23-Sp8") CHECK(e.config.index->value <= 2000000);
  }
  for (const char* id : {"coxeter-A2", "coxeter-A6", "coxeter-D4", "coxeter-D6", "coxeter-E6", "coxeter-E7",
                         "coxeter-E8", "sp62-S7", "mcl2-M22", "j32-L2_16_4"})
    CHECK(desk.count(id));
  for (const char* id : {"sp82-S10", "tits-S4", "fi23-Sp8"}) CHECK(heavy.count(id));
  for (const char* id : {"dot0-M24", "j4-M24", "ru-L4_2", "ru-L3_2", "fi22-2_6_Sp6", "fi24-O10", "o73-Sp6", "fi23-S12",
                         "m22-A7"})
    CHECK(defonly.count(id));
  CHECK(find_entry(catalog(), "no-such-entry") == nullptr);
}

TEST_CASE("run_entry on desk entries") {
  for (const char* id : {"coxeter-A4", "coxeter-E6", "sp62-S7"}) {
    CAPTURE(id);
    const auto r = run_entry(entry(id));
    CHECK(r.status == Status::verified);
    CHECK(r.message.empty());
    CHECK(r.partition == true);
    CHECK(r.connected == true);
    CHECK(r.conjugation_violations == 0u);
  }
  const auto e6 = run_entry(entry("coxeter-E6"));
  CHECK(e6.index == 72u);
  CHECK(e6.oracle_order == Integer(51840));
  CHECK(e6.coxeter_relations == true);
  const auto sp = run_entry(entry("sp62-S7"));
  CHECK(sp.index == 288u);
  CHECK(sp.order == Integer(1451520));
}

TEST_CASE("W(A4) has the double cosets N and N t_1 N of sizes 1 and 4") {
  const auto r = run_entry(entry("coxeter-A4"));
  REQUIRE(r.double_cosets.size() == 2);
  CHECK(r.double_cosets[0].size == 1);
  CHECK(r.double_cosets[0].word == "[*]");
  CHECK(r.double_cosets[1].size == 4);
  CHECK(r.double_cosets[1].stab_order == 6);
}

TEST_CASE("definition-only entries are skipped with their degrees checked") {
  for (const char* id : {"dot0-M24", "j4-M24", "ru-L4_2", "fi23-S12"}) {
    CAPTURE(id);
    const auto r = run_entry(entry(id));
    CHECK(r.status == Status::skipped);
    REQUIRE(r.degree);
    CHECK(Integer(*r.degree) == entry(id).config.degree->value);
  }
  const auto fi22 = run_entry(entry("fi22-2_6_Sp6"));
  CHECK(fi22.status == Status::skipped);
  CHECK(fi22.message.find("construction failed") != std::string::npos);
}

TEST_CASE("expectations that do not hold are mismatches") {
  auto c = entry("coxeter-A3").config;
  c.index->value = 5;
  const auto r = run_job(c).report;
  CHECK(r.status == Status::mismatch);
  CHECK(r.message.find("index 4 but expected 5") != std::string::npos);
}

TEST_CASE("overflow is a status, not an error") {
  auto c = entry("coxeter-E8").config;
  RunOptions opt;
  opt.max_cosets = 100;
  CHECK(run_job(c, opt).report.status == Status::overflow);
  opt.max_cosets.reset();
  opt.memory_mb = 1;  // about 13000 rows
  CHECK(run_job(c, opt).report.status == Status::overflow);
}

TEST_CASE("run_all filters by scale and keeps the catalog order") {
  std::vector<CatalogEntry> small;
  for (const char* id : {"coxeter-D4", "coxeter-A2", "ru-L3_2", "sp82-S10"}) small.push_back(entry(id));
  const auto desk = run_all(small, Scale::desk);
  REQUIRE(desk.size() == 2);
  CHECK(desk[0].entry == "coxeter-D4");
  CHECK(desk[1].entry == "coxeter-A2");
  for (const auto& r : desk) CHECK(r.status == Status::verified);
  CHECK(run_all({}, Scale::heavy).empty());
  const auto all = run_all({entry("ru-L3_2")}, Scale::definition_only);
  REQUIRE(all.size() == 1);
  CHECK(all[0].status == Status::skipped);
}

TEST_CASE("report JSON has the stable fields") {
  const auto j = to_json(run_entry(entry("coxeter-D4")));
  for (const char* k : {"entry", "status", "index", "order", "abelianization", "double_cosets", "stats"})
    CHECK(j.contains(k));
  CHECK(j["entry"] == "coxeter-D4");
  CHECK(j["status"] == "verified");
  CHECK(j["index"] == 8);
  CHECK(j["order"] == 192);
  CHECK(j["abelianization"] == 2);
  REQUIRE(j["double_cosets"].is_array());
  for (const auto& d : j["double_cosets"]) {
    CHECK(d.contains("size"));
    CHECK(d.contains("stab_order"));
    CHECK(d.contains("word"));
  }
  for (const char* k : {"defined", "merged", "seconds"}) CHECK(j["stats"].contains(k));
}

TEST_CASE("reports are reproducible") {
  auto a = to_json(run_entry(entry("coxeter-D5")));
  auto b = to_json(run_entry(entry("coxeter-D5")));
  a["stats"].erase("seconds");
  b["stats"].erase("seconds");
  CHECK(a == b);
}

TEST_CASE("search candidates from a file") {
  const auto job = build_job(entry("coxeter-A4").config);
  SearchSpec s;
  s.candidates = "order 2 1";
  CHECK(search_candidates(*job.progenitor, job.bindings, s).size() == 3);
  s.candidates = "centralizer 1 2";
  CHECK(search_candidates(*job.progenitor, job.bindings, s).size() == 3);
  s.candidates = "centralizer 9";
  CHECK_THROWS_AS(search_candidates(*job.progenitor, job.bindings, s), std::invalid_argument);
}
