#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prym/ngonal.hpp"

namespace prym {

// Effective divisor on a fixed fiber: nonnegative multiplicity per point.
struct Divisor {
  std::vector<long long> mult;
  long long degree() const;
  Divisor& operator+=(const Divisor& o);
  Divisor& scale(long long k);
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

// The Ctilde_1 fiber over the (unramified) basepoint: the lifts in the
// component of the reference lift, in increasing mask order.
struct ComponentFiber {
  int n = 0;
  std::vector<LiftMask> lifts;
  std::vector<int> index_of;  // mask -> index in `lifts`, or -1
};

// The incidence correspondence between Ctilde_1 and Xtilde:
// incidence points are pairs (lift, chosen sheet), generators act diagonally,
// the left projection forgets the sheet, the right projection forgets the
// lift.
struct SCorrespondence {
  int n = 0;
  bool split = true;
  std::string flag;  // nonempty when built over a non-split lift curve
  ComponentFiber c1;
  CoverAction incidence;
  std::vector<int> left_of;   // incidence -> index into c1.lifts
  std::vector<int> right_of;  // incidence -> sheet in 0..2n-1
  // cached inverse images
  std::vector<std::vector<int>> over_left;   // c1 index -> incidence ids
  std::vector<std::vector<int>> over_right;  // sheet -> incidence ids
};

SCorrespondence build_S(const LiftAction& la, const SplitReport& sr);
SCorrespondence build_S(const MonodromyRep& rep);

// z = x_1 + ... + x_n: the n chosen sheets of the lift, multiplicity 1 each.
Divisor apply_S(const SCorrespondence& sc, LiftMask lift);

// All lifts of the incidence component containing the sheet x; degree 2^(n-2)
// in the split case.
Divisor apply_St(const SCorrespondence& sc, int sheet);

// All lifts differing from `lift` in exactly j pairs (j even), each with
// multiplicity 1; degree C(n, j). Throws for odd j, which leaves the
// component.
Divisor d_operator(const SCorrespondence& sc, int j, LiftMask lift);

struct VerifyReport {
  bool ok = true;
  long long checked = 0;
  std::string detail;           // witness description on failure
  std::optional<int> witness;   // offending fiber point
};

// St(S(z)) = sum_i (n-2i) [lifts at pair-distance 2i from z], for every lift
// of the component fiber. Exact multiset equality.
VerifyReport verify_StS(const SCorrespondence& sc);

// S(St(x)) = 2^(n-2) x + 2^(n-3) * (both sheets of every other pair), for
// every sheet x. Exact multiset equality.
VerifyReport verify_SSt(const SCorrespondence& sc);

}  // namespace prym
