#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "prym/report.hpp"
#include "prym/search.hpp"
#include "prym/seedio.hpp"

using namespace prym;

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "prym_forge_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto p = temp_dir() / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p.string();
}

MonodromyRep one_seed(int n, int gy, int b, std::uint64_t s) {
  SearchParams p;
  p.n = n;
  p.base_genus = gy;
  p.branch_count = b;
  p.count = 1;
  p.rng_seed = s;
  SearchResult res = search_seeds(p);
  REQUIRE(!res.seeds.empty());
  return res.seeds[0];
}

}  // namespace

TEST_CASE("seed file canonical round trip is byte-identical") {
  SeedFile sf;
  sf.rep = one_seed(4, 1, 4, 12);
  sf.name = "round-trip";
  std::string once = print_seed_file(sf);
  SeedFile parsed = parse_seed_text(once);
  CHECK(print_seed_file(parsed) == once);
  CHECK(parsed.rep.degree_n == sf.rep.degree_n);
  CHECK(parsed.rep.base_genus == sf.rep.base_genus);
  CHECK(parsed.rep.handles == sf.rep.handles);
  CHECK(parsed.rep.branches == sf.rep.branches);
  CHECK(parsed.name == sf.name);
}

TEST_CASE("seed parse errors carry a position") {
  // non-bijective permutation: a repeated point inside a cycle
  std::string text = R"js({
  "format": "prym-forge-seed",
  "version": 1,
  "degree_n": 3,
  "base_genus": 0,
  "handles": [],
  "branches": ["(0 1 0)"]
})js";
  try {
    parse_seed_text(text);
    FAIL("expected SeedParseError");
  } catch (const SeedParseError& e) {
    CHECK(e.line == 7);
    CHECK(e.column > 0);
  }

  CHECK_THROWS_AS(parse_seed_text("{ not json"), SeedParseError);
  CHECK_THROWS_AS(parse_seed_text("{}"), SeedParseError);
}

TEST_CASE("content digest is stable") {
  CHECK(content_digest("") == "fnv1a64:cbf29ce484222325");
  CHECK(content_digest("a") != content_digest("b"));
}

TEST_CASE("cmd_validate exit codes") {
  SeedFile good;
  good.rep = one_seed(4, 0, 10, 42);
  std::string good_path = write_temp("good.json", print_seed_file(good));
  CommandReport ok = cmd_validate(good_path);
  CHECK(ok.exit_code == kExitPass);
  CHECK(ok.json["validation"]["admissible"].get<bool>());

  std::string bad_path = write_temp("bad.json", R"js({
  "format": "prym-forge-seed",
  "version": 1,
  "degree_n": 3,
  "base_genus": 0,
  "handles": [],
  "branches": ["(0 1 9)"]
})js");
  CommandReport parse_fail = cmd_validate(bad_path);
  CHECK(parse_fail.exit_code == kExitParseError);

  // structurally fine but inadmissible: etale condition broken
  std::string inadm = write_temp("inadmissible.json", R"js({
  "format": "prym-forge-seed",
  "version": 1,
  "degree_n": 3,
  "base_genus": 0,
  "handles": [],
  "branches": ["(0 1 3 4)", "(0 4 3 1)"]
})js");
  CommandReport v = cmd_validate(inadm);
  CHECK(v.exit_code == kExitValidationFailed);
  bool etale_named = false;
  for (const auto& c : v.json["validation"]["checks"])
    if (c["name"] == "etale" && !c["passed"].get<bool>()) etale_named = true;
  CHECK(etale_named);
}

TEST_CASE("cmd_analyze emits the split report and formula check") {
  SeedFile sf;
  sf.rep = one_seed(4, 0, 10, 42);
  std::string path = write_temp("analyze.json", print_seed_file(sf));
  CommandReport r = cmd_analyze(path);
  CHECK(r.exit_code == kExitPass);
  CHECK(r.json["analysis"]["g_X"].get<long long>() == 2);
  CHECK(r.json["analysis"]["component_count"].get<int>() == 2);
  CHECK(r.json["analysis"]["formula_check"]["component_genera_match"].get<bool>());
  CHECK(r.json["analysis"]["formula_check"]["quotient_genera_match"].get<bool>());
}

TEST_CASE("cmd_analyze flags non-split seeds and skips the formula check") {
  SearchParams p;
  p.n = 4;
  p.base_genus = 1;
  p.branch_count = 4;
  p.count = 1;
  p.rng_seed = 19;
  p.require_nonsplit_sign = true;
  SearchResult res = search_seeds(p);
  REQUIRE(!res.seeds.empty());
  SeedFile sf;
  sf.rep = res.seeds[0];
  std::string path = write_temp("nonsplit.json", print_seed_file(sf));
  CommandReport r = cmd_analyze(path);
  CHECK(r.exit_code == kExitPass);
  CHECK(!r.json["analysis"]["split"].get<bool>());
  CHECK(r.json["analysis"]["formula_check"].is_string());  // skipped marker
  // the identities are only stated for split seeds
  CHECK(cmd_verify(path, "all").exit_code == kExitUnsupported);
}

TEST_CASE("cmd_verify runs both identity families and the prym package") {
  SeedFile sf;
  sf.rep = one_seed(4, 0, 10, 42);
  std::string path = write_temp("verify.json", print_seed_file(sf));
  CommandReport r = cmd_verify(path, "all");
  CHECK(r.exit_code == kExitPass);
  CHECK(r.json["correspondences"]["StS"]["ok"].get<bool>());
  CHECK(r.json["correspondences"]["SSt"]["ok"].get<bool>());
  for (const auto& v : r.json["prym"]["verdicts"]) CHECK(v["passed"].get<bool>());

  // prym selection requires n = 4
  SeedFile sf3;
  sf3.rep = one_seed(3, 0, 8, 1);
  std::string path3 = write_temp("verify3.json", print_seed_file(sf3));
  CHECK(cmd_verify(path3, "prym").exit_code == kExitUnsupported);
  CHECK(cmd_verify(path3, "correspondences").exit_code == kExitPass);
}

TEST_CASE("cmd_search is deterministic and its seeds validate") {
  auto dir = (temp_dir() / "search_out").string();
  std::filesystem::remove_all(dir);
  CommandReport r1 = cmd_search(4, 0, 10, 2, 42, dir, 0);
  CHECK(r1.exit_code == kExitPass);
  REQUIRE(r1.json["found"].get<int>() == 2);

  std::vector<std::string> first_bytes;
  for (const auto& f : r1.json["files"]) {
    std::ifstream in(f.get<std::string>(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    first_bytes.push_back(ss.str());
    CommandReport v = cmd_validate(f.get<std::string>());
    CHECK(v.exit_code == kExitPass);
    CommandReport a = cmd_analyze(f.get<std::string>());
    CHECK(a.exit_code == kExitPass);
  }

  // byte-identical rerun
  std::filesystem::remove_all(dir);
  CommandReport r2 = cmd_search(4, 0, 10, 2, 42, dir, 0);
  REQUIRE(r2.json["found"].get<int>() == 2);
  int idx = 0;
  for (const auto& f : r2.json["files"]) {
    std::ifstream in(f.get<std::string>(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == first_bytes[idx++]);
  }

  // odd branch parity is rejected as unsupported
  CHECK(cmd_search(4, 0, 3, 1, 1, dir, 0).exit_code == kExitUnsupported);
}

TEST_CASE("cmd_bounds covers every mode") {
  BoundsRequest plan;
  plan.mode = BoundsRequest::Mode::kPlan;
  plan.a = 3;
  CommandReport r = cmd_bounds(plan);
  CHECK(r.exit_code == kExitPass);
  CHECK(r.json["plan"]["g_Y"].get<long long>() == 2);
  CHECK(r.json["plan"]["delta_min"].get<long long>() == 48);
  CHECK(r.json["plan"]["g_X"].get<long long>() == 29);

  BoundsRequest cast;
  cast.mode = BoundsRequest::Mode::kCastelnuovo;
  cast.a = 4;
  cast.b = 5;
  cast.c = 2;
  cast.d = 0;
  CHECK(cmd_bounds(cast).json["castelnuovo"]["max_genus"].get<long long>() == 20);

  BoundsRequest vand;
  vand.mode = BoundsRequest::Mode::kVandermonde;
  vand.a = 4;
  vand.b = 7;
  CHECK(cmd_bounds(vand).json["vandermonde"]["value"].get<std::string>() == "1");

  BoundsRequest gon;
  gon.mode = BoundsRequest::Mode::kGonality;
  gon.a = 4;
  gon.b = 2;
  gon.c = 48;
  CHECK(cmd_bounds(gon).json["gonality"]["gon_X"].get<long long>() == 8);

  BoundsRequest cliff;
  cliff.mode = BoundsRequest::Mode::kClifford;
  cliff.a = 2;
  cliff.b = 48;
  CHECK(cmd_bounds(cliff).json["clifford"]["bound"].get<long long>() == 5);

  BoundsRequest gen;
  gen.mode = BoundsRequest::Mode::kGenus;
  gen.a = 4;
  gen.b = 2;
  gen.c = 0;
  auto gj = cmd_bounds(gen).json["genus_formulas"];
  CHECK(gj["genus_tC"].get<long long>() == 3);
  CHECK(gj["genus_C"].get<long long>() == 2);

  BoundsRequest bad;
  bad.mode = BoundsRequest::Mode::kCastelnuovo;
  bad.a = 1;
  CHECK(cmd_bounds(bad).exit_code == kExitUnsupported);
}

TEST_CASE("reports are deterministic") {
  SeedFile sf;
  sf.rep = one_seed(4, 0, 10, 42);
  std::string path = write_temp("det.json", print_seed_file(sf));
  CommandReport a = cmd_verify(path, "all");
  CommandReport b = cmd_verify(path, "all");
  CHECK(a.json.dump() == b.json.dump());
  CHECK(a.text == b.text);
  CHECK(cmd_validate(path).json.dump() == cmd_validate(path).json.dump());
  CHECK(cmd_analyze(path).json.dump() == cmd_analyze(path).json.dump());
}
