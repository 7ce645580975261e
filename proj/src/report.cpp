#include "prym/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "prym/bounds.hpp"
#include "prym/corresp.hpp"
#include "prym/homology.hpp"
#include "prym/ngonal.hpp"
#include "prym/search.hpp"
#include "prym/seedio.hpp"
#include "prym/version.hpp"

namespace prym {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json base_json(const std::string& command) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SeedParseError("cannot open file: " + path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json checks_json(const ValidationReport& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : v.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  return arr;
}

void render_checks(std::ostream& os, const ValidationReport& v) {
  for (const auto& c : v.checks) {
    os << "  " << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
}

ordered_json matrix_json(const IntMat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(static_cast<std::int64_t>(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct LoadedSeed {
  SeedFile seed;
  std::string digest;
};

LoadedSeed load_with_digest(const std::string& path) {
  std::string bytes = read_file(path);
  LoadedSeed out;
  out.seed = parse_seed_text(bytes);
  out.digest = content_digest(bytes);
  return out;
}

CommandReport parse_failure(const std::string& command, const std::string& path,
                            const SeedParseError& e) {
  CommandReport r;
  r.exit_code = kExitParseError;
  std::ostringstream os;
  os << "parse error in " << path;
  if (e.line > 0) os << " at line " << e.line << ", column " << e.column;
  os << ": " << e.what() << "\n";
  r.text = os.str();
  r.json = base_json(command);
  r.json["error"] = {{"kind", "parse"},
                     {"message", e.what()},
                     {"line", e.line},
                     {"column", e.column}};
  return r;
}

ordered_json analysis_json(const MonodromyRep& rep, const SplitReport& sr,
                           long long g_x) {
  ordered_json a;
  a["n"] = rep.degree_n;
  a["g_Y"] = rep.base_genus;
  a["branch_points"] = rep.branch_count();
  a["g_X"] = g_x;
  a["deg_R"] = 2 * g_x - 2 - rep.degree_n * (2 * rep.base_genus - 2);
  a["sign_character"] = sr.sign_values;
  a["split"] = sr.split;
  a["component_count"] = sr.component_count;
  ordered_json comps = ordered_json::array();
  for (std::size_t i = 0; i < sr.degrees.size(); ++i) {
    ordered_json c;
    c["degree"] = sr.degrees[i];
    c["genus"] = sr.genera[i];
    c["ram_points_per_branch"] = sr.ram_points[i];
    comps.push_back(std::move(c));
  }
  a["components"] = std::move(comps);
  a["sigma_swaps_components"] = sr.sigma_swaps_components;
  a["quotient_component_count"] = sr.quotient_component_count;
  a["quotient_genera"] = sr.quotient_genera;

  if (sr.split) {
    GenusRecord rec = genus_formulas(rep.degree_n, g_x, rep.base_genus);
    bool comp_match = true;
    for (long long g : sr.genera) comp_match = comp_match && g == rec.genus_tC;
    bool quot_match = true;
    for (long long g : sr.quotient_genera)
      quot_match = quot_match &&
                   g == (rep.degree_n % 2 == 0 ? rec.genus_C : rec.genus_tC);
    ordered_json f;
    f["expected_genus_per_component"] = rec.genus_tC;
    if (rep.degree_n % 2 == 0) f["expected_quotient_genus"] = rec.genus_C;
    f["component_genera_match"] = comp_match;
    f["quotient_genera_match"] = quot_match;
    a["formula_check"] = std::move(f);
  } else {
    a["formula_check"] = "skipped: lift curve does not split";
  }
  return a;
}

}  // namespace

CommandReport cmd_validate(const std::string& path) {
  CommandReport r;
  r.json = base_json("validate");
  r.json["input"] = path;
  LoadedSeed in;
  try {
    in = load_with_digest(path);
  } catch (const SeedParseError& e) {
    return parse_failure("validate", path, e);
  }
  r.json["input_digest"] = in.digest;
  ValidationReport v = validate(in.seed.rep);
  r.json["validation"] = {{"admissible", v.admissible()},
                          {"checks", checks_json(v)}};
  std::ostringstream os;
  os << "validate " << path << "\n";
  render_checks(os, v);
  os << (v.admissible() ? "admissible\n" : "NOT admissible\n");
  r.text = os.str();
  r.exit_code = v.admissible() ? kExitPass : kExitValidationFailed;
  return r;
}

CommandReport cmd_analyze(const std::string& path) {
  CommandReport r;
  r.json = base_json("analyze");
  r.json["input"] = path;
  LoadedSeed in;
  try {
    in = load_with_digest(path);
  } catch (const SeedParseError& e) {
    return parse_failure("analyze", path, e);
  }
  r.json["input_digest"] = in.digest;
  ValidationReport v = validate(in.seed.rep);
  r.json["validation"] = {{"admissible", v.admissible()},
                          {"checks", checks_json(v)}};
  if (!v.admissible()) {
    std::ostringstream os;
    os << "analyze " << path << ": seed is not admissible\n";
    render_checks(os, v);
    r.text = os.str();
    r.exit_code = kExitValidationFailed;
    return r;
  }

  LiftAction la = lift_action(in.seed.rep);
  SplitReport sr = split(la);
  long long g_x = analyze(pair_action(in.seed.rep)).components[0].genus;
  r.json["analysis"] = analysis_json(in.seed.rep, sr, g_x);

  std::ostringstream os;
  os << "analyze " << path << "\n"
     << "  n=" << in.seed.rep.degree_n << " g_Y=" << in.seed.rep.base_genus
     << " b=" << in.seed.rep.branch_count() << " g_X=" << g_x << "\n"
     << "  lift curve: " << sr.component_count << " component(s)";
  if (sr.split) os << ", split";
  os << "\n";
  for (std::size_t i = 0; i < sr.degrees.size(); ++i)
    os << "  component " << i + 1 << ": degree " << sr.degrees[i] << ", genus "
       << sr.genera[i] << "\n";
  os << "  sigma " << (sr.sigma_swaps_components ? "swaps" : "preserves")
     << " components; quotient has " << sr.quotient_component_count
     << " component(s) of genera";
  for (long long g : sr.quotient_genera) os << ' ' << g;
  os << "\n";
  if (sr.split) {
    os << "  formula check: "
       << (r.json["analysis"]["formula_check"]["component_genera_match"].get<bool>() &&
                   r.json["analysis"]["formula_check"]["quotient_genera_match"].get<bool>()
               ? "ok"
               : "MISMATCH")
       << "\n";
  } else {
    os << "  formula check skipped: lift curve does not split\n";
  }
  r.text = os.str();
  return r;
}

CommandReport cmd_verify(const std::string& path, const std::string& which) {
  CommandReport r;
  r.json = base_json("verify");
  r.json["input"] = path;
  r.json["which"] = which;
  if (which != "correspondences" && which != "prym" && which != "all") {
    r.exit_code = kExitUnsupported;
    r.text = "verify: unknown selection '" + which + "'\n";
    r.json["error"] = "unknown selection";
    return r;
  }
  LoadedSeed in;
  try {
    in = load_with_digest(path);
  } catch (const SeedParseError& e) {
    return parse_failure("verify", path, e);
  }
  r.json["input_digest"] = in.digest;
  const MonodromyRep& rep = in.seed.rep;

  ValidationReport v = validate(rep);
  r.json["validation"] = {{"admissible", v.admissible()},
                          {"checks", checks_json(v)}};
  if (!v.admissible()) {
    std::ostringstream os;
    os << "verify " << path << ": seed is not admissible\n";
    render_checks(os, v);
    r.text = os.str();
    r.exit_code = kExitValidationFailed;
    return r;
  }
  if (which == "prym" && rep.degree_n != 4) {
    r.exit_code = kExitUnsupported;
    r.text = "verify: the full Prym isogeny package requires n = 4\n";
    r.json["error"] = "prym verdicts require n = 4";
    return r;
  }

  LiftAction la = lift_action(rep);
  SplitReport sr = split(la);
  if (!sr.split) {
    r.exit_code = kExitUnsupported;
    r.text = "verify: lift curve does not split; identities are stated for "
             "split seeds\n";
    r.json["error"] = "non-split lift curve";
    return r;
  }

  bool all_ok = true;
  std::ostringstream os;
  os << "verify " << path << "\n";

  if (which == "correspondences" || which == "all") {
    SCorrespondence sc = build_S(la, sr);
    VerifyReport sts = verify_StS(sc);
    VerifyReport sst = verify_SSt(sc);
    all_ok = all_ok && sts.ok && sst.ok;
    ordered_json c;
    c["StS"] = {{"ok", sts.ok}, {"checked", sts.checked}};
    if (!sts.ok) c["StS"]["witness"] = sts.detail;
    c["SSt"] = {{"ok", sst.ok}, {"checked", sst.checked}};
    if (!sst.ok) c["SSt"]["witness"] = sst.detail;
    r.json["correspondences"] = std::move(c);
    os << "  StS identity: " << (sts.ok ? "ok" : "FAIL") << " (" << sts.checked
       << " lifts)\n"
       << "  SSt identity: " << (sst.ok ? "ok" : "FAIL") << " (" << sst.checked
       << " sheets)\n";
    if (!sts.ok) os << "    " << sts.detail << "\n";
    if (!sst.ok) os << "    " << sst.detail << "\n";
  }

  if (which == "prym" || which == "all") {
    if (rep.degree_n % 2 != 0) {
      os << "  prym lattice verdicts skipped: n is odd\n";
      r.json["prym"] = "skipped: n odd";
    } else {
      IsogenyPackage pkg = verify_isogeny_package(rep);
      all_ok = all_ok && pkg.all_passed();
      ordered_json p;
      p["n"] = pkg.n;
      p["g_X"] = pkg.genus_X;
      p["g_Xtilde"] = pkg.genus_Xt;
      p["g_Ctilde1"] = pkg.genus_C1t;
      p["g_C1"] = pkg.genus_C1;
      p["prym_rank_kappa"] = pkg.prym_kappa.rank;
      p["prym_rank_tau1"] = pkg.prym_tau1.rank;
      p["image_index_kappa"] = pkg.prym_kappa.image_index.str();
      p["image_index_tau1"] = pkg.prym_tau1.image_index.str();
      ordered_json verd = ordered_json::array();
      for (const auto& vd : pkg.verdicts) {
        ordered_json e;
        e["name"] = vd.name;
        e["passed"] = vd.passed;
        if (!vd.detail.empty()) e["detail"] = vd.detail;
        verd.push_back(std::move(e));
      }
      p["verdicts"] = std::move(verd);
      p["s_restricted"] = matrix_json(pkg.s_restricted);
      p["st_restricted"] = matrix_json(pkg.st_restricted);
      if (pkg.n == 4 && pkg.psi.rows() > 0) p["psi"] = matrix_json(pkg.psi);
      r.json["prym"] = std::move(p);
      for (const auto& vd : pkg.verdicts) {
        os << "  " << (vd.passed ? "pass " : "FAIL ") << vd.name;
        if (!vd.detail.empty()) os << "  (" << vd.detail << ")";
        os << "\n";
      }
    }
  }
  os << (all_ok ? "all verdicts pass\n" : "SOME VERDICTS FAILED\n");
  r.text = os.str();
  r.exit_code = all_ok ? kExitPass : kExitValidationFailed;
  return r;
}

CommandReport cmd_search(int n, int base_genus, int branches, int count,
                         std::uint64_t rng_seed, const std::string& out_dir,
                         long long attempt_budget) {
  CommandReport r;
  r.json = base_json("search");
  SearchParams params;
  params.n = n;
  params.base_genus = base_genus;
  params.branch_count = branches;
  params.count = count;
  params.rng_seed = rng_seed;
  if (attempt_budget > 0) params.attempt_budget = attempt_budget;

  SearchResult res;
  try {
    res = search_seeds(params);
  } catch (const std::invalid_argument& e) {
    r.exit_code = kExitUnsupported;
    r.text = std::string("search: ") + e.what() + "\n";
    r.json["error"] = e.what();
    return r;
  }

  std::filesystem::create_directories(out_dir.empty() ? "." : out_dir);
  ordered_json files = ordered_json::array();
  std::ostringstream os;
  os << "search n=" << n << " g_Y=" << base_genus << " b=" << branches
     << " seed=" << rng_seed << ": found " << res.seeds.size() << "/" << count
     << " in " << res.attempts << " attempts\n";
  for (std::size_t i = 0; i < res.seeds.size(); ++i) {
    SeedFile sf;
    sf.rep = res.seeds[i];
    std::ostringstream name;
    name << "seed_n" << n << "_g" << base_genus << "_b" << branches << "_s"
         << rng_seed << "_" << i << ".json";
    sf.name = name.str();
    std::filesystem::path out =
        std::filesystem::path(out_dir.empty() ? "." : out_dir) / name.str();
    std::ofstream f(out, std::ios::binary);
    f << print_seed_file(sf);
    files.push_back(out.string());
    os << "  wrote " << out.string() << "\n";
  }
  r.json["attempts"] = res.attempts;
  r.json["requested"] = count;
  r.json["found"] = res.seeds.size();
  r.json["files"] = std::move(files);
  if (res.exhausted) {
    r.exit_code = kExitExhausted;
    os << "attempt budget exhausted\n";
  }
  r.text = os.str();
  return r;
}

CommandReport cmd_bounds(const BoundsRequest& req) {
  CommandReport r;
  r.json = base_json("bounds");
  std::ostringstream os;
  try {
    switch (req.mode) {
      case BoundsRequest::Mode::kCastelnuovo: {
        long long g = castelnuovo_max_genus(req.a, req.b, req.c, req.d);
        r.json["castelnuovo"] = {{"n1", req.a}, {"n2", req.b}, {"g1", req.c},
                                 {"g2", req.d}, {"max_genus", g}};
        os << "castelnuovo(" << req.a << "," << req.b << "," << req.c << ","
           << req.d << ") = " << g << "\n";
        break;
      }
      case BoundsRequest::Mode::kGonality: {
        GonalityResult gr = gonality_of_simple_cover(req.a, req.b, req.c);
        r.json["gonality"] = {{"n", req.a},
                              {"gon_Y", req.b},
                              {"delta", req.c},
                              {"threshold", gr.threshold},
                              {"hypothesis_met", gr.hypothesis_met}};
        if (gr.hypothesis_met) {
          r.json["gonality"]["gon_X"] = gr.gonality;
          os << "gon X = " << gr.gonality << "\n";
        } else {
          r.json["gonality"]["deficit"] = gr.deficit;
          os << "hypothesis fails: delta short by " << gr.deficit << "\n";
        }
        break;
      }
      case BoundsRequest::Mode::kClifford: {
        CliffordBound cb = clifford_lower_bound(req.a, req.b);
        r.json["clifford"] = {{"g_Y", req.a},
                              {"delta", req.b},
                              {"gon_Y", cb.gon_y},
                              {"via_gonality", cb.via_gonality},
                              {"via_genus", cb.via_genus},
                              {"hypothesis_met", cb.hypothesis_met}};
        if (cb.hypothesis_met) {
          r.json["clifford"]["bound"] = cb.bound;
          os << "cliff X >= " << cb.bound << " (gonality route " << cb.via_gonality
             << ", genus route " << cb.via_genus << ")\n";
        } else {
          r.json["clifford"]["deficit"] = cb.deficit;
          os << "hypothesis fails: delta short by " << cb.deficit << "\n";
        }
        break;
      }
      case BoundsRequest::Mode::kPlan: {
        CounterexamplePlan p = plan_counterexample(req.a);
        r.json["plan"] = {{"target", p.target},
                          {"g_Y", p.g_y},
                          {"gon_Y", p.gon_y},
                          {"delta_min", p.delta_min},
                          {"g_X", p.g_x}};
        os << "target cliff >= " << p.target << ": g_Y=" << p.g_y
           << " gon_Y=" << p.gon_y << " delta_min=" << p.delta_min
           << " g_X=" << p.g_x << "\n";
        break;
      }
      case BoundsRequest::Mode::kVandermonde: {
        Int v = vandermonde_check(req.a, req.b);
        r.json["vandermonde"] = {{"n", req.a}, {"g_X", req.b}, {"value", v.str()}};
        os << "vandermonde(" << req.a << "," << req.b << ") = " << v.str() << "\n";
        break;
      }
      case BoundsRequest::Mode::kGenus: {
        GenusRecord rec = genus_formulas(req.a, req.b, req.c);
        r.json["genus_formulas"] = {{"n", rec.n},
                                    {"g_X", rec.g_x},
                                    {"g_Y", rec.g_y},
                                    {"deg_R", rec.deg_r},
                                    {"genus_tC", rec.genus_tC},
                                    {"dim_P", rec.dim_p},
                                    {"class_coefficient", rec.class_coefficient.str()}};
        if (rec.n % 2 == 0) {
          r.json["genus_formulas"]["genus_C"] = rec.genus_C;
          r.json["genus_formulas"]["dim_P1"] = rec.dim_p1;
        }
        os << "n=" << rec.n << " g_X=" << rec.g_x << " g_Y=" << rec.g_y
           << ": deg R=" << rec.deg_r << " g_tC=" << rec.genus_tC;
        if (rec.n % 2 == 0) os << " g_C=" << rec.genus_C;
        os << " dim P=" << rec.dim_p;
        if (rec.n % 2 == 0) os << " dim P1=" << rec.dim_p1;
        os << " coeff=" << rec.class_coefficient.str() << "\n";
        break;
      }
    }
  } catch (const std::invalid_argument& e) {
    r.exit_code = kExitUnsupported;
    r.text = std::string("bounds: ") + e.what() + "\n";
    r.json["error"] = e.what();
    return r;
  }
  r.text = os.str();
  return r;
}

}  // namespace prym
