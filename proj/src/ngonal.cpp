#include "prym/ngonal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace prym {

LiftAction lift_action(const MonodromyRep& rep) {
  const int n = rep.degree_n;
  if (n < 3) throw std::invalid_argument("lift_action: degree n must be >= 3");
  if (n > kMaxLiftDegree)
    throw std::invalid_argument("lift_action: degree exceeds the eager-lift cap");

  CoverAction sheets = to_cover_action(rep);
  const Permutation iota = pairing_involution(n);
  for (const auto& g : sheets.generators)
    if (compose(g, iota) != compose(iota, g))
      throw std::invalid_argument("lift_action: generator not pairing-equivariant");

  LiftAction la;
  la.n = n;
  la.rep = rep;
  la.action.point_count = 1 << n;
  la.action.base_genus = rep.base_genus;
  la.action.branch_count = rep.branch_count();
  for (const auto& g : sheets.generators) {
    std::vector<int> im(1 << n);
    for (int L = 0; L < (1 << n); ++L) {
      LiftMask M = 0;
      for (int p = 0; p < n; ++p) {
        int x = p + n * ((L >> p) & 1);
        int y = g(x);
        if (y >= n) M |= LiftMask{1} << (y - n);
      }
      im[L] = static_cast<int>(M);
    }
    la.action.generators.emplace_back(std::move(im));
  }
  return la;
}

std::vector<int> sign_character(const MonodromyRep& rep) {
  const int n = rep.degree_n;
  CoverAction sheets = to_cover_action(rep);
  std::vector<int> out;
  for (const auto& g : sheets.generators) {
    int crossings = 0;
    for (int p = 0; p < n; ++p)
      if (g(p) >= n) ++crossings;
    out.push_back(crossings & 1);
  }
  return out;
}

SplitReport split(const LiftAction& la) {
  SplitReport r;
  r.sign_values = sign_character(la.rep);
  r.component_of = orbit_index(la.action.generators, la.lift_count());
  r.component_count =
      1 + *std::max_element(r.component_of.begin(), r.component_of.end());
  r.split = (r.component_count == 2);

  if (r.split) {
    r.parity_components = true;
    for (int L = 0; L < la.lift_count(); ++L) {
      int parity = std::popcount(static_cast<unsigned>(L)) & 1;
      if (r.component_of[L] != parity) { r.parity_components = false; break; }
    }
  }

  CoverAnalysis an = analyze(la.action);
  for (const auto& c : an.components) {
    r.degrees.push_back(c.degree);
    r.genera.push_back(c.genus);
  }
  r.ram_points.assign(r.component_count,
                      std::vector<long long>(la.action.branch_count, 0));
  for (int j = 0; j < la.action.branch_count; ++j) {
    for (const auto& cyc : cycles_of(la.action.branch(j)))
      if (cyc.size() == 2) r.ram_points[r.component_of[cyc[0]]][j] += 1;
  }

  SigmaQuotient q = sigma_quotient(la);
  r.sigma_swaps_components = q.swaps_components;
  r.quotient_component_count = q.analysis.component_count();
  for (const auto& c : q.analysis.components) r.quotient_genera.push_back(c.genus);
  return r;
}

SigmaQuotient sigma_quotient(const LiftAction& la) {
  SigmaQuotient out;
  const int count = la.lift_count();
  std::vector<int> im(count);
  for (int L = 0; L < count; ++L)
    im[L] = static_cast<int>(~static_cast<LiftMask>(L) & la.full_mask());
  out.sigma = Permutation(std::move(im));

  out.fixed_point_free = true;
  for (int L = 0; L < count; ++L)
    if (out.sigma(L) == L) { out.fixed_point_free = false; break; }
  if (!out.fixed_point_free)
    throw std::logic_error("sigma_quotient: complement involution fixed a lift");

  std::vector<int> comp = orbit_index(la.action.generators, count);
  out.swaps_components = comp[out.sigma(0)] != comp[0];
  out.quotient = quotient_by_involution(la.action, out.sigma, &out.class_of);
  out.analysis = analyze(out.quotient);
  return out;
}

SingularLiftSurvey singular_lift_survey(int n) {
  if (n < 4)
    throw std::invalid_argument("singular_lift_count: requires n >= 4");
  if (n > 14)
    throw std::invalid_argument("singular_lift_count: enumeration cap is n <= 14");
  // The fiber has n-2 distinct base points; points 0 and 1 each carry local
  // multiplicity 2, the remaining n-4 are unramified. Upstairs points are
  // (i, sheet) encoded as 2*i + sheet, 2(n-2) in total. A lift divisor here
  // is a reduced subset of size n whose pushdown has the multiplicities
  // (2,2,1,...,1): both sheets forced over points 0 and 1, one sheet chosen
  // over each other point.
  const int m = 2 * (n - 2);
  SingularLiftSurvey s;
  for (unsigned subset = 0; subset < (1u << m); ++subset) {
    if (std::popcount(subset) != n) continue;
    bool ok = true;
    for (int i = 0; ok && i < n - 2; ++i) {
      int mult = ((subset >> (2 * i)) & 1u) + ((subset >> (2 * i + 1)) & 1u);
      ok = (i < 2) ? (mult == 2) : (mult == 1);
    }
    if (!ok) continue;
    s.count += 1;
    unsigned swapped = 0;
    for (int i = 0; i < n - 2; ++i) {
      unsigned lo = (subset >> (2 * i)) & 1u, hi = (subset >> (2 * i + 1)) & 1u;
      swapped |= (hi << (2 * i)) | (lo << (2 * i + 1));
    }
    if (swapped == subset) s.sigma_fixed += 1;
  }
  return s;
}

long long singular_lift_count(int n) { return singular_lift_survey(n).count; }

}  // namespace prym
