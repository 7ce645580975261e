#include "doctest.h"
#include "prym/bounds.hpp"

using namespace prym;

TEST_CASE("generalized binomial") {
  CHECK(binomial_generalized(5, 2) == 10);
  CHECK(binomial_generalized(0, 0) == 1);
  CHECK(binomial_generalized(3, 5) == 0);
  // negative upper index: C(-2, 3) = (-2)(-3)(-4)/6 = -4
  CHECK(binomial_generalized(-2, 3) == -4);
  CHECK(binomial_generalized(-1, 4) == 1);
}

TEST_CASE("castelnuovo bound") {
  CHECK(castelnuovo_max_genus(2, 2, 0, 0) == 1);
  CHECK(castelnuovo_max_genus(3, 3, 1, 1) == 10);
  CHECK(castelnuovo_max_genus(4, 5, 2, 0) == 20);
  // the degree-4 shape used by the gonality lemma: 3(m-1) + 4 g_Y
  for (long long m = 2; m <= 9; ++m)
    for (long long gy = 0; gy <= 5; ++gy)
      CHECK(castelnuovo_max_genus(4, m, gy, 0) == 3 * (m - 1) + 4 * gy);
  CHECK_THROWS_AS(castelnuovo_max_genus(1, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("gonality of a simple cover") {
  GonalityResult r = gonality_of_simple_cover(4, 2, 48);
  CHECK(r.hypothesis_met);
  CHECK(r.gonality == 8);

  GonalityResult short1 = gonality_of_simple_cover(4, 2, 47);
  CHECK(!short1.hypothesis_met);
  CHECK(short1.deficit == 1);

  // boundary case included
  GonalityResult edge = gonality_of_simple_cover(3, 1, 12);
  CHECK(edge.hypothesis_met);
  CHECK(edge.gonality == 3);
}

TEST_CASE("clifford lower bound") {
  CliffordBound b2 = clifford_lower_bound(2, 48);
  CHECK(b2.hypothesis_met);
  CHECK(b2.gon_y == 2);
  CHECK(b2.via_gonality == 5);
  CHECK(b2.via_genus == 3);
  CHECK(b2.bound == 5);

  CliffordBound b0 = clifford_lower_bound(0, 24);
  CHECK(b0.hypothesis_met);
  CHECK(b0.bound == 1);

  CliffordBound b7 = clifford_lower_bound(7, 120);
  CHECK(b7.hypothesis_met);
  CHECK(b7.gon_y == 5);
  CHECK(b7.bound == 17);

  CliffordBound shy = clifford_lower_bound(2, 47);
  CHECK(!shy.hypothesis_met);
  CHECK(shy.deficit == 1);

  // the gonality route dominates the genus route over the whole grid
  for (long long gy = 0; gy <= 50; ++gy) {
    CliffordBound b = clifford_lower_bound(gy, 24 * ((gy + 3) / 2));
    CHECK(b.hypothesis_met);
    CHECK(b.via_gonality >= b.via_genus);
    CHECK(b.bound == b.via_gonality);
  }
}

TEST_CASE("counterexample plan") {
  CounterexamplePlan p3 = plan_counterexample(3);
  CHECK(p3.g_y == 2);
  CHECK(p3.delta_min == 48);
  CHECK(p3.g_x == 29);

  CHECK(plan_counterexample(1).g_y == 1);

  CounterexamplePlan p10 = plan_counterexample(10);
  CHECK(p10.g_y == 6);
  CHECK(p10.delta_min == 96);
  CHECK(p10.g_x == 69);

  // self-consistency: every plan meets its target
  for (long long target = 1; target <= 100; ++target) {
    CounterexamplePlan p = plan_counterexample(target);
    CHECK(2 * p.g_y - 1 >= target);
    CliffordBound b = clifford_lower_bound(p.g_y, p.delta_min);
    CHECK(b.hypothesis_met);
    CHECK(b.bound >= target);
    // planned parameters are Hurwitz-consistent for a degree-4 cover
    CHECK(2 * p.g_x - 2 == 4 * (2 * p.g_y - 2) + p.delta_min);
  }
}

TEST_CASE("vandermonde identity equals 1 on the full grid") {
  CHECK(vandermonde_check(4, 3) == 1);
  CHECK(vandermonde_check(1, 17) == 1);
  for (long long n = 1; n <= 12; ++n)
    for (long long gx = 0; gx <= 20; ++gx) CHECK(vandermonde_check(n, gx) == 1);
}

TEST_CASE("genus formulas record") {
  GenusRecord r = genus_formulas(4, 2, 0);
  CHECK(r.deg_r == 10);
  CHECK(r.genus_tC == 3);
  CHECK(r.genus_C == 2);
  CHECK(r.dim_p == 1);
  CHECK(r.dim_p1 == 1);
  CHECK(r.class_coefficient == 8);

  // n = 3 collapses to g_X + g_Y - 1
  for (long long gx = 1; gx <= 6; ++gx)
    for (long long gy = 0; gy <= 2; ++gy) {
      if (2 * gx - 2 - 3 * (2 * gy - 2) < 0) continue;
      CHECK(genus_formulas(3, gx, gy).genus_tC == gx + gy - 1);
    }

  GenusRecord r5 = genus_formulas(5, 6, 1);
  CHECK(r5.genus_tC == 21);
  CHECK(r5.genus_C == -1);  // no quotient components for odd n

  CHECK_THROWS_AS(genus_formulas(4, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(genus_formulas(2, 3, 0), std::invalid_argument);
}

TEST_CASE("castelnuovo monotonicity") {
  for (long long n1 = 2; n1 <= 5; ++n1)
    for (long long n2 = 2; n2 <= 5; ++n2)
      for (long long g1 = 0; g1 <= 3; ++g1)
        for (long long g2 = 0; g2 <= 3; ++g2) {
          long long base = castelnuovo_max_genus(n1, n2, g1, g2);
          CHECK(castelnuovo_max_genus(n1 + 1, n2, g1, g2) >= base);
          CHECK(castelnuovo_max_genus(n1, n2 + 1, g1, g2) >= base);
          CHECK(castelnuovo_max_genus(n1, n2, g1 + 1, g2) >= base);
          CHECK(castelnuovo_max_genus(n1, n2, g1, g2 + 1) >= base);
        }
}
