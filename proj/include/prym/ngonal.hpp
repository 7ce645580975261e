#pragma once

#include <cstdint>
#include <vector>

#include "prym/cover.hpp"

namespace prym {

// A lift of a fiber of X -> Y: one preimage chosen per pair. Bit p set means
// the primed point of pair p is chosen. The all-unprimed lift is mask 0 and
// serves as the reference point; its component is Ctilde_1 by convention.
using LiftMask = std::uint32_t;

inline constexpr int kMaxLiftDegree = 12;  // 2^12 lifts, computed eagerly

struct LiftAction {
  int n = 0;
  MonodromyRep rep;    // originating data
  CoverAction action;  // on all 2^n lifts; point index == mask

  LiftMask full_mask() const { return (LiftMask{1} << n) - 1; }
  int lift_count() const { return 1 << n; }
};

// Action of each monodromy generator on lifts: the choice bit of a pair is
// transported along the generator and flipped exactly when the chosen point
// is carried across the pairing.
LiftAction lift_action(const MonodromyRep& rep);

// Per generator (a_1,b_1,...,c_1,...): parity of the number of unprimed
// points mapped to primed points. All values vanish iff the monodromy
// preserves the two parity classes of lifts.
std::vector<int> sign_character(const MonodromyRep& rep);

struct SplitReport {
  int component_count = 0;
  std::vector<int> sign_values;
  bool split = false;             // exactly two components
  bool parity_components = false; // components equal the two parity classes
  std::vector<int> component_of;  // per mask; component 0 contains mask 0
  std::vector<long long> degrees; // per component, over Y
  std::vector<long long> genera;  // per component
  // [component][branch]: number of 2-cycles of the lifted branch generator,
  // i.e. ramification points of that component over that branch point.
  std::vector<std::vector<long long>> ram_points;
  bool sigma_swaps_components = false;
  int quotient_component_count = 0;
  std::vector<long long> quotient_genera;
};

SplitReport split(const LiftAction& la);

struct SigmaQuotient {
  Permutation sigma;       // bitwise complement on lifts
  bool fixed_point_free = false;
  bool swaps_components = false;
  CoverAction quotient;    // action on sigma-classes
  CoverAnalysis analysis;  // of the quotient
  std::vector<int> class_of;  // lift mask -> class id
};

// sigma = complement involution; checks it commutes with every generator and
// is fixed-point-free, then forms the quotient cover with its analysis.
SigmaQuotient sigma_quotient(const LiftAction& la);

// The scenario with exactly two simple ramification points in one fiber:
// counts the reduced degree-n lift divisors over that fiber that force both
// preimages of each of the two ramified points.
long long singular_lift_count(int n);  // n >= 4

struct SingularLiftSurvey {
  long long count = 0;        // = 2^(n-4)
  long long sigma_fixed = 0;  // configurations fixed by the complement involution
};

SingularLiftSurvey singular_lift_survey(int n);

}  // namespace prym
