#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prym/perm.hpp"

namespace prym {

// Monodromy data for the tower  Xtilde --(2:1, etale)--> X --(n:1)--> Y.
//
// Points 0..n-1 are the "unprimed" sheets, n..2n-1 the "primed" ones; the
// pairing involution is i -> (i+n) mod 2n. Generators are listed as
// a_1,b_1,...,a_g,b_g (handles of Y) followed by c_1,...,c_b (one loop per
// branch point), and the product relation reads
//   [a_1,b_1]...[a_g,b_g] c_1 ... c_b = id
// in left-to-right composition, with [a,b] = a b a^-1 b^-1.
struct MonodromyRep {
  int degree_n = 0;   // n >= 3
  int base_genus = 0; // g_Y
  std::vector<std::pair<Permutation, Permutation>> handles;  // (a_i, b_i)
  std::vector<Permutation> branches;                         // c_j

  int point_count() const { return 2 * degree_n; }
  int branch_count() const { return static_cast<int>(branches.size()); }
};

// The pairing involution i -> (i+n) mod 2n on 2n points.
Permutation pairing_involution(int n);

// An abstract finite cover of Y: a point set with one permutation per base
// generator (handles first, then branches), satisfying the product relation.
struct CoverAction {
  int point_count = 0;
  int base_genus = 0;
  int branch_count = 0;
  std::vector<Permutation> generators;  // 2*base_genus + branch_count entries

  int generator_count() const { return static_cast<int>(generators.size()); }
  const Permutation& branch(int j) const { return generators[2 * base_genus + j]; }
};

// The 2n-sheet action of a MonodromyRep as a CoverAction.
CoverAction to_cover_action(const MonodromyRep& rep);

// Evaluates [a_1,b_1]...[a_g,b_g] c_1...c_b.
Permutation relation_product(const CoverAction& action);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool admissible() const;
  std::vector<std::string> failures() const;
};

// Named diagnostics: relation, pairing equivariance, transitivity on points
// and on pairs, simple ramification, the etale condition on branch cycles,
// and the base-change test. Throws only on structurally malformed input
// (wrong permutation degrees, n < 3).
ValidationReport validate(const MonodromyRep& rep);

struct ComponentAnalysis {
  std::vector<int> points;   // sorted
  long long degree = 0;      // over Y
  long long euler = 0;
  long long genus = 0;
  std::vector<CycleType> branch_profiles;  // cycle type per branch, restricted
};

struct CoverAnalysis {
  std::vector<ComponentAnalysis> components;
  int component_count() const { return static_cast<int>(components.size()); }
};

// Orbits, Euler characteristics and genera via Riemann-Hurwitz, with branch
// cycles counted per component. Throws if the product relation fails.
CoverAnalysis analyze(const CoverAction& action);

// Degree-n action on the sheet pairs {i, i+n}.
CoverAction pair_action(const MonodromyRep& rep);

struct BaseChangeResult {
  bool is_pullback = false;
  // When true: character values on a_1,b_1,...,a_g,b_g (0/1); branch loops
  // carry 0 by necessity.
  std::vector<int> chi;
};

// Tests whether the 2n-sheet cover is the pullback of some unramified
// double cover of Y along X -> Y, by enumerating all 2^(2g) characters and
// testing equivariant isomorphism with the fiber product.
BaseChangeResult is_base_change(const MonodromyRep& rep);

// Equivariant isomorphism of two actions over the same base generators,
// tested by basepoint-image backtracking orbit by orbit.
bool equivariant_isomorphic(const CoverAction& a, const CoverAction& b);

// Restriction of an action to one orbit; `relabel`, if given, receives the
// old-point -> new-point map (-1 off the component).
CoverAction restrict_to_component(const CoverAction& action,
                                  const std::vector<int>& component,
                                  std::vector<int>* relabel = nullptr);

// Quotient by a fixed-point-free involution commuting with every generator.
// `class_of`, if given, receives the point -> class map; classes are labeled
// by their smallest representative, in increasing order.
CoverAction quotient_by_involution(const CoverAction& action,
                                   const Permutation& sigma,
                                   std::vector<int>* class_of = nullptr);

}  // namespace prym
