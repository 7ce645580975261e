#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "prym/report.hpp"
#include "prym/version.hpp"

namespace {

int emit(const prym::CommandReport& report, bool as_json) {
  if (as_json)
    std::cout << report.json.dump(2) << "\n";
  else
    std::cout << report.text;
  return report.exit_code;
}

long long env_budget() {
  const char* s = std::getenv("PRYM_FORGE_SEARCH_BUDGET");
  if (!s) return 0;
  return std::atoll(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(prym::kToolName) +
               " - exact verification of the n-gonal construction on "
               "monodromy seeds"};
  app.set_version_flag("--version",
                       std::string(prym::kToolName) + " " + prym::kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the machine-readable report");

  std::string path;
  auto* validate = app.add_subcommand("validate", "run the admissibility checks");
  validate->add_option("file", path, "seed file")->required();

  auto* analyze = app.add_subcommand(
      "analyze", "split the lift curve and check the genus bookkeeping");
  analyze->add_option("file", path, "seed file")->required();

  std::string which = "all";
  auto* verify = app.add_subcommand(
      "verify", "verify the correspondence and Prym lattice identities");
  verify->add_option("file", path, "seed file")->required();
  verify->add_option("--which", which,
                     "correspondences | prym | all (default all)");

  int n = 4, gy = 0, b = 10, count = 1;
  std::uint64_t rng_seed = 0;
  std::string out_dir = ".";
  auto* search = app.add_subcommand("search", "search for admissible seeds");
  search->add_option("n", n, "cover degree (>= 3)")->required();
  search->add_option("base_genus", gy, "genus of Y")->required();
  search->add_option("branches", b, "branch points (even, >= 2)")->required();
  search->add_option("count", count, "seeds to produce")->required();
  search->add_option("seed", rng_seed, "RNG seed")->required();
  search->add_option("-o,--out", out_dir, "output directory (default .)");

  auto* bounds = app.add_subcommand("bounds", "closed-form bound calculators");
  std::vector<long long> castelnuovo, gonality, clifford, genus;
  long long plan_n = 0;
  std::vector<long long> vander;
  bounds->add_option("--castelnuovo", castelnuovo,
                     "n1 n2 g1 g2: two-cover genus bound")
      ->expected(4);
  bounds->add_option("--gonality", gonality,
                     "n gonY delta: gonality of a simple cover")
      ->expected(3);
  bounds->add_option("--clifford", clifford,
                     "gY delta: Clifford lower bound for a 4-fold cover")
      ->expected(2);
  bounds->add_option("--plan", plan_n, "N: parameters for Clifford index >= N");
  bounds->add_option("--vandermonde", vander, "n gX: binomial identity value")
      ->expected(2);
  bounds->add_option("--genus", genus, "n gX gY: genus bookkeeping")->expected(3);

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return emit(prym::cmd_validate(path), as_json);
  if (analyze->parsed()) return emit(prym::cmd_analyze(path), as_json);
  if (verify->parsed()) return emit(prym::cmd_verify(path, which), as_json);
  if (search->parsed())
    return emit(prym::cmd_search(n, gy, b, count, rng_seed, out_dir, env_budget()),
                as_json);
  if (bounds->parsed()) {
    prym::BoundsRequest req;
    if (!castelnuovo.empty()) {
      req.mode = prym::BoundsRequest::Mode::kCastelnuovo;
      req.a = castelnuovo[0];
      req.b = castelnuovo[1];
      req.c = castelnuovo[2];
      req.d = castelnuovo[3];
    } else if (!gonality.empty()) {
      req.mode = prym::BoundsRequest::Mode::kGonality;
      req.a = gonality[0];
      req.b = gonality[1];
      req.c = gonality[2];
    } else if (!clifford.empty()) {
      req.mode = prym::BoundsRequest::Mode::kClifford;
      req.a = clifford[0];
      req.b = clifford[1];
    } else if (!vander.empty()) {
      req.mode = prym::BoundsRequest::Mode::kVandermonde;
      req.a = vander[0];
      req.b = vander[1];
    } else if (!genus.empty()) {
      req.mode = prym::BoundsRequest::Mode::kGenus;
      req.a = genus[0];
      req.b = genus[1];
      req.c = genus[2];
    } else if (plan_n > 0) {
      req.mode = prym::BoundsRequest::Mode::kPlan;
      req.a = plan_n;
    } else {
      std::cerr << "bounds: pick one of --castelnuovo, --gonality, --clifford, "
                   "--plan, --vandermonde, --genus\n";
      return prym::kExitUnsupported;
    }
    return emit(prym::cmd_bounds(req), as_json);
  }
  return prym::kExitUnsupported;
}
