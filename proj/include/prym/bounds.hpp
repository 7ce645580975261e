#pragma once

#include "prym/intmat.hpp"

namespace prym {

// Generalized binomial C(m, k) for any integer m and k >= 0:
// m(m-1)...(m-k+1)/k!.
Int binomial_generalized(long long m, long long k);

// Maximal genus of a curve with two independent covers of degrees n1, n2
// onto curves of genera g1, g2: (n1-1)(n2-1) + n1 g1 + n2 g2.
long long castelnuovo_max_genus(long long n1, long long n2, long long g1,
                                long long g2);

struct GonalityResult {
  bool hypothesis_met = false;
  long long gonality = 0;   // n * gon_Y when the hypothesis holds
  long long threshold = 0;  // 2(n-1) n gon_Y
  long long deficit = 0;    // threshold - delta when it fails
};

// For a simple degree-n cover with ramification degree delta:
// gon X = n gon Y once delta >= 2(n-1) n gon Y. Simplicity of the cover is
// asserted by the caller.
GonalityResult gonality_of_simple_cover(long long n, long long gon_y,
                                        long long delta);

struct CliffordBound {
  bool hypothesis_met = false;
  long long deficit = 0;
  long long gon_y = 0;         // floor((g_Y + 3) / 2), Y general
  long long via_gonality = 0;  // 4 gon_Y - 3
  long long via_genus = 0;     // 2 g_Y - 1
  long long bound = 0;         // max of the two
};

// Clifford-index lower bound for a simple 4-fold cover of a general curve of
// genus g_Y with ramification degree delta >= 24 gon_Y.
CliffordBound clifford_lower_bound(long long g_y, long long delta);

struct CounterexamplePlan {
  long long target = 0;     // requested Clifford index N
  long long g_y = 0;        // smallest with 2 g_Y - 1 >= N
  long long gon_y = 0;
  long long delta_min = 0;  // 24 gon_Y
  long long g_x = 0;        // 4(g_Y - 1) + 1 + delta_min / 2
};

CounterexamplePlan plan_counterexample(long long target);

// sum_{alpha=0}^{n-1} C(n-1-g_X, alpha) C(g_X, n-1-alpha); equals 1 for all
// n >= 1, g_X >= 0.
Int vandermonde_check(long long n, long long g_x);

struct GenusRecord {
  long long n = 0, g_x = 0, g_y = 0;
  long long deg_r = 0;      // 2g_X - 2 - n(2g_Y - 2)
  long long genus_tC = 0;   // per component of the lift curve
  long long genus_C = -1;   // per quotient component; n even only
  long long dim_p = 0;      // g_X - 1
  long long dim_p1 = -1;    // genus_tC - genus_C; n even only
  Int class_coefficient;    // 2^(n-1)
};

// Closed-form genus bookkeeping of the construction; throws when the
// parameters are inconsistent (negative ramification or genera).
GenusRecord genus_formulas(long long n, long long g_x, long long g_y);

}  // namespace prym
