#include "prym/bounds.hpp"

#include <stdexcept>

namespace prym {

Int binomial_generalized(long long m, long long k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be >= 0");
  Int num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= Int(m - i);
    den *= Int(i + 1);
  }
  return num / den;  // exact: k! divides any product of k consecutive integers
}

long long castelnuovo_max_genus(long long n1, long long n2, long long g1,
                                long long g2) {
  if (n1 < 2 || n2 < 2)
    throw std::invalid_argument("castelnuovo: degrees must be >= 2");
  if (g1 < 0 || g2 < 0)
    throw std::invalid_argument("castelnuovo: genera must be >= 0");
  return (n1 - 1) * (n2 - 1) + n1 * g1 + n2 * g2;
}

GonalityResult gonality_of_simple_cover(long long n, long long gon_y,
                                        long long delta) {
  if (n < 2) throw std::invalid_argument("gonality: degree must be >= 2");
  if (gon_y < 1 || delta < 0)
    throw std::invalid_argument("gonality: nonnegative data required");
  GonalityResult r;
  r.threshold = 2 * (n - 1) * n * gon_y;
  if (delta >= r.threshold) {
    r.hypothesis_met = true;
    r.gonality = n * gon_y;
  } else {
    r.deficit = r.threshold - delta;
  }
  return r;
}

CliffordBound clifford_lower_bound(long long g_y, long long delta) {
  if (g_y < 0) throw std::invalid_argument("clifford: genus must be >= 0");
  CliffordBound r;
  r.gon_y = (g_y + 3) / 2;
  r.via_gonality = 4 * r.gon_y - 3;
  r.via_genus = 2 * g_y - 1;
  r.bound = std::max(r.via_gonality, r.via_genus);
  long long threshold = 24 * r.gon_y;
  if (delta >= threshold) {
    r.hypothesis_met = true;
  } else {
    r.deficit = threshold - delta;
  }
  return r;
}

CounterexamplePlan plan_counterexample(long long target) {
  if (target < 1) throw std::invalid_argument("plan: target must be >= 1");
  CounterexamplePlan p;
  p.target = target;
  p.g_y = (target + 2) / 2;  // smallest g with 2g - 1 >= target
  p.gon_y = (p.g_y + 3) / 2;
  p.delta_min = 24 * p.gon_y;
  p.g_x = 4 * (p.g_y - 1) + 1 + p.delta_min / 2;
  return p;
}

Int vandermonde_check(long long n, long long g_x) {
  if (n < 1 || g_x < 0)
    throw std::invalid_argument("vandermonde: n >= 1 and g_X >= 0 required");
  Int sum = 0;
  for (long long alpha = 0; alpha <= n - 1; ++alpha)
    sum += binomial_generalized(n - 1 - g_x, alpha) *
           binomial_generalized(g_x, n - 1 - alpha);
  return sum;
}

GenusRecord genus_formulas(long long n, long long g_x, long long g_y) {
  if (n < 3 || n > 40)
    throw std::invalid_argument("genus_formulas: n must be in 3..40");
  if (g_x < 0 || g_y < 0)
    throw std::invalid_argument("genus_formulas: genera must be >= 0");
  GenusRecord r;
  r.n = n;
  r.g_x = g_x;
  r.g_y = g_y;
  r.deg_r = 2 * g_x - 2 - n * (2 * g_y - 2);
  if (r.deg_r < 0)
    throw std::invalid_argument("genus_formulas: negative ramification degree");

  const long long core = (g_x - 1) - (n - 4) * (g_y - 1);
  r.genus_tC = (1LL << (n - 3)) * core + 1;
  if (r.genus_tC < 0)
    throw std::invalid_argument("genus_formulas: inconsistent parameters");
  r.dim_p = g_x - 1;
  if (n % 2 == 0) {
    r.genus_C = (1LL << (n - 4)) * core + 1;
    r.dim_p1 = r.genus_tC - r.genus_C;
  }
  r.class_coefficient = Int(1) << (n - 1);
  return r;
}

}  // namespace prym
