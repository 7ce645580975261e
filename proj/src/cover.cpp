#include "prym/cover.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace prym {

Permutation pairing_involution(int n) {
  std::vector<int> im(2 * n);
  for (int i = 0; i < 2 * n; ++i) im[i] = (i + n) % (2 * n);
  return Permutation(std::move(im));
}

CoverAction to_cover_action(const MonodromyRep& rep) {
  CoverAction a;
  a.point_count = rep.point_count();
  a.base_genus = rep.base_genus;
  a.branch_count = rep.branch_count();
  for (const auto& [ai, bi] : rep.handles) {
    a.generators.push_back(ai);
    a.generators.push_back(bi);
  }
  for (const auto& c : rep.branches) a.generators.push_back(c);
  return a;
}

Permutation relation_product(const CoverAction& action) {
  Permutation w = Permutation::identity(action.point_count);
  for (int i = 0; i < action.base_genus; ++i) {
    const Permutation& a = action.generators[2 * i];
    const Permutation& b = action.generators[2 * i + 1];
    w = compose(w, a);
    w = compose(w, b);
    w = compose(w, a.inverse());
    w = compose(w, b.inverse());
  }
  for (int j = 0; j < action.branch_count; ++j)
    w = compose(w, action.branch(j));
  return w;
}

bool ValidationReport::admissible() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
  return out;
}

namespace {

void require_well_formed(const MonodromyRep& rep) {
  if (rep.degree_n < 3)
    throw std::invalid_argument("monodromy: degree n must be >= 3");
  if (rep.base_genus < 0)
    throw std::invalid_argument("monodromy: base genus must be >= 0");
  const int d = rep.point_count();
  for (const auto& [a, b] : rep.handles)
    if (a.degree() != d || b.degree() != d)
      throw std::invalid_argument("monodromy: handle permutation degree mismatch");
  for (const auto& c : rep.branches)
    if (c.degree() != d)
      throw std::invalid_argument("monodromy: branch permutation degree mismatch");
}

bool commutes_with(const Permutation& g, const Permutation& h) {
  return compose(g, h) == compose(h, g);
}

// A cycle is "pairing-stable" if the involution maps its point set to itself.
bool has_pairing_stable_cycle(const Permutation& c, const Permutation& iota) {
  for (const auto& cyc : cycles_of(c)) {
    if (cyc.size() < 2) continue;  // a fixed point maps to its partner, never stable
    std::vector<int> img;
    img.reserve(cyc.size());
    for (int x : cyc) img.push_back(iota(x));
    std::vector<int> sorted_cyc = cyc;
    std::sort(sorted_cyc.begin(), sorted_cyc.end());
    std::sort(img.begin(), img.end());
    if (sorted_cyc == img) return true;
  }
  return false;
}

}  // namespace

CoverAction pair_action(const MonodromyRep& rep) {
  require_well_formed(rep);
  const int n = rep.degree_n;
  const Permutation iota = pairing_involution(n);
  CoverAction src = to_cover_action(rep);
  CoverAction out;
  out.point_count = n;
  out.base_genus = rep.base_genus;
  out.branch_count = rep.branch_count();
  for (const auto& g : src.generators) {
    if (!commutes_with(g, iota))
      throw std::invalid_argument(
          "pair_action: generator does not commute with the pairing");
    std::vector<int> im(n);
    for (int p = 0; p < n; ++p) im[p] = g(p) % n;
    out.generators.emplace_back(std::move(im));
  }
  return out;
}

ValidationReport validate(const MonodromyRep& rep) {
  require_well_formed(rep);
  const int n = rep.degree_n;
  const Permutation iota = pairing_involution(n);
  CoverAction action = to_cover_action(rep);
  ValidationReport rep_out;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    rep_out.checks.push_back({name, ok, ok ? "" : detail});
  };

  add("relation", relation_product(action).is_identity(),
      "product [a,b]... c_1...c_b is not the identity");

  bool equivariant = true;
  std::string eq_detail;
  for (int k = 0; k < action.generator_count(); ++k) {
    if (!commutes_with(action.generators[k], iota)) {
      equivariant = false;
      eq_detail = "generator " + std::to_string(k) + " does not commute with the pairing";
      break;
    }
  }
  add("pairing-equivariance", equivariant, eq_detail);

  add("transitive-points",
      orbits(action.generators, action.point_count).size() == 1,
      "sheet action on 2n points is not transitive");

  if (equivariant) {
    CoverAction pairs = pair_action(rep);
    add("transitive-pairs", orbits(pairs.generators, n).size() == 1,
        "induced action on the n pairs is not transitive");

    CycleType simple_type;
    simple_type.parts.assign(n - 1, 1);
    simple_type.parts[0] = 2;
    bool simple = true;
    std::string simple_detail;
    for (int j = 0; j < rep.branch_count(); ++j) {
      if (cycle_type(pairs.branch(j)) != simple_type) {
        simple = false;
        simple_detail = "c_" + std::to_string(j) + " has pair cycle type " +
                        cycle_type(pairs.branch(j)).to_string() +
                        ", expected " + simple_type.to_string();
        break;
      }
    }
    add("simple-ramification", simple, simple_detail);
  } else {
    // the pair action does not exist without equivariance
    add("transitive-pairs", false, "skipped: generators are not pairing-equivariant");
    add("simple-ramification", false, "skipped: generators are not pairing-equivariant");
  }

  bool etale = true;
  std::string etale_detail;
  for (int j = 0; j < rep.branch_count(); ++j) {
    if (has_pairing_stable_cycle(rep.branches[j], iota)) {
      etale = false;
      etale_detail = "c_" + std::to_string(j) + " has a pairing-stable cycle";
      break;
    }
  }
  add("etale", etale, etale_detail);

  if (rep_out.admissible()) {
    BaseChangeResult bc = is_base_change(rep);
    add("base-change", !bc.is_pullback,
        "cover is pulled back from a double cover of Y");
  } else {
    add("base-change", false, "skipped: earlier checks failed");
  }
  return rep_out;
}

CoverAnalysis analyze(const CoverAction& action) {
  if (!relation_product(action).is_identity())
    throw std::invalid_argument("analyze: product relation violated");
  const int d = action.point_count;
  std::vector<int> comp = orbit_index(action.generators, d);
  const int ncomp = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());

  CoverAnalysis out;
  out.components.resize(ncomp);
  for (int x = 0; x < d; ++x) out.components[comp[x]].points.push_back(x);

  for (int ci = 0; ci < ncomp; ++ci) {
    ComponentAnalysis& c = out.components[ci];
    c.degree = static_cast<long long>(c.points.size());
    long long ram = 0;
    for (int j = 0; j < action.branch_count; ++j) {
      CycleType profile;
      for (const auto& cyc : cycles_of(action.branch(j))) {
        if (comp[cyc[0]] != ci) continue;
        profile.parts.push_back(static_cast<int>(cyc.size()));
        ram += static_cast<long long>(cyc.size()) - 1;
      }
      std::sort(profile.parts.begin(), profile.parts.end(), std::greater<int>());
      c.branch_profiles.push_back(std::move(profile));
    }
    c.euler = c.degree * (2 - 2 * static_cast<long long>(action.base_genus)) - ram;
    if ((c.euler & 1LL) != 0)
      throw std::logic_error("analyze: odd Euler characteristic");
    c.genus = (2 - c.euler) / 2;
    if (c.genus < 0)
      throw std::logic_error("analyze: negative genus");
  }
  return out;
}

namespace {

// Backtracking search for an equivariant bijection, one source orbit at a
// time; within an orbit the basepoint image determines the rest.
struct IsoSearch {
  const CoverAction& a;
  const CoverAction& b;
  std::vector<Permutation> a_inv, b_inv;
  std::vector<int> map;   // a-point -> b-point or -1
  std::vector<char> used; // b-point taken

  bool extend(int a0, int b0) {
    std::vector<std::pair<int, int>> assigned;
    std::vector<int> queue;
    auto assign = [&](int x, int y) -> bool {
      if (map[x] >= 0) return map[x] == y;
      if (used[y]) return false;
      map[x] = y;
      used[y] = 1;
      assigned.push_back({x, y});
      queue.push_back(x);
      return true;
    };
    bool ok = assign(a0, b0);
    for (std::size_t qi = 0; ok && qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (std::size_t k = 0; ok && k < a.generators.size(); ++k) {
        ok = assign(a.generators[k](x), b.generators[k](map[x])) &&
             assign(a_inv[k](x), b_inv[k](map[x]));
      }
    }
    if (!ok) {
      for (auto [x, y] : assigned) { map[x] = -1; used[y] = 0; }
    }
    return ok;
  }

  bool match(const std::vector<int>& reps, std::size_t i) {
    if (i == reps.size()) return true;
    int a0 = reps[i];
    for (int b0 = 0; b0 < b.point_count; ++b0) {
      if (used[b0]) continue;
      if (extend(a0, b0)) {
        if (match(reps, i + 1)) return true;
        // roll back this orbit
        for (int x = 0; x < a.point_count; ++x) {
          if (map[x] >= 0 && orbit_of[x] == orbit_of[a0]) {
            used[map[x]] = 0;
            map[x] = -1;
          }
        }
      }
    }
    return false;
  }

  std::vector<int> orbit_of;
};

}  // namespace

bool equivariant_isomorphic(const CoverAction& a, const CoverAction& b) {
  if (a.point_count != b.point_count) return false;
  if (a.generators.size() != b.generators.size()) return false;
  IsoSearch s{a, b, {}, {}, {}, {}, {}};
  for (const auto& g : a.generators) s.a_inv.push_back(g.inverse());
  for (const auto& g : b.generators) s.b_inv.push_back(g.inverse());
  s.map.assign(a.point_count, -1);
  s.used.assign(b.point_count, 0);
  s.orbit_of = orbit_index(a.generators, a.point_count);
  std::vector<int> reps;
  int seen = -1;
  for (int x = 0; x < a.point_count; ++x)
    if (s.orbit_of[x] > seen) { reps.push_back(x); seen = s.orbit_of[x]; }
  return s.match(reps, 0);
}

BaseChangeResult is_base_change(const MonodromyRep& rep) {
  require_well_formed(rep);
  const int n = rep.degree_n;
  const int g = rep.base_genus;
  CoverAction sheets = to_cover_action(rep);
  CoverAction pairs = pair_action(rep);

  for (unsigned chi = 0; chi < (1u << (2 * g)); ++chi) {
    // Fiber product of the pair action with the chi-double cover of Y:
    // point (p, s) encoded as p + n*s; handles flip s by their chi bit,
    // branch loops never do.
    CoverAction fp;
    fp.point_count = 2 * n;
    fp.base_genus = g;
    fp.branch_count = rep.branch_count();
    for (int k = 0; k < pairs.generator_count(); ++k) {
      int flip = (k < 2 * g) ? ((chi >> k) & 1u) : 0;
      std::vector<int> im(2 * n);
      for (int p = 0; p < n; ++p) {
        for (int s = 0; s < 2; ++s)
          im[p + n * s] = pairs.generators[k](p) + n * (s ^ flip);
      }
      fp.generators.emplace_back(std::move(im));
    }
    if (equivariant_isomorphic(sheets, fp)) {
      BaseChangeResult r;
      r.is_pullback = true;
      for (int k = 0; k < 2 * g; ++k) r.chi.push_back((chi >> k) & 1u);
      return r;
    }
  }
  return {false, {}};
}

CoverAction restrict_to_component(const CoverAction& action,
                                  const std::vector<int>& component,
                                  std::vector<int>* relabel) {
  std::vector<int> newidx(action.point_count, -1);
  std::vector<int> pts = component;
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i) newidx[pts[i]] = static_cast<int>(i);

  CoverAction out;
  out.point_count = static_cast<int>(pts.size());
  out.base_genus = action.base_genus;
  out.branch_count = action.branch_count;
  for (const auto& g : action.generators) {
    std::vector<int> im(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      int y = g(pts[i]);
      if (newidx[y] < 0)
        throw std::invalid_argument("restrict_to_component: set is not invariant");
      im[i] = newidx[y];
    }
    out.generators.emplace_back(std::move(im));
  }
  if (relabel) *relabel = std::move(newidx);
  return out;
}

CoverAction quotient_by_involution(const CoverAction& action,
                                   const Permutation& sigma,
                                   std::vector<int>* class_of) {
  const int d = action.point_count;
  if (sigma.degree() != d)
    throw std::invalid_argument("quotient: involution degree mismatch");
  if (!compose(sigma, sigma).is_identity())
    throw std::invalid_argument("quotient: map is not an involution");
  for (const auto& g : action.generators)
    if (compose(g, sigma) != compose(sigma, g))
      throw std::invalid_argument("quotient: involution is not equivariant");
  for (int x = 0; x < d; ++x)
    if (sigma(x) == x)
      throw std::invalid_argument("quotient: involution has a fixed point");

  std::vector<int> cls(d, -1);
  int next_id = 0;
  for (int x = 0; x < d; ++x) {
    if (cls[x] >= 0) continue;
    cls[x] = cls[sigma(x)] = next_id++;
  }
  CoverAction out;
  out.point_count = next_id;
  out.base_genus = action.base_genus;
  out.branch_count = action.branch_count;
  for (const auto& g : action.generators) {
    std::vector<int> im(next_id, -1);
    for (int x = 0; x < d; ++x) im[cls[x]] = cls[g(x)];
    out.generators.emplace_back(std::move(im));
  }
  if (class_of) *class_of = std::move(cls);
  return out;
}

}  // namespace prym
