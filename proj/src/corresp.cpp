#include "prym/corresp.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace prym {

long long Divisor::degree() const {
  long long s = 0;
  for (long long m : mult) s += m;
  return s;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  if (mult.size() != o.mult.size())
    throw std::invalid_argument("divisor: fiber size mismatch");
  for (std::size_t i = 0; i < mult.size(); ++i) mult[i] += o.mult[i];
  return *this;
}

Divisor& Divisor::scale(long long k) {
  for (auto& m : mult) m *= k;
  return *this;
}

SCorrespondence build_S(const LiftAction& la, const SplitReport& sr) {
  SCorrespondence sc;
  sc.n = la.n;
  sc.split = sr.split;
  if (!sr.split)
    sc.flag = "lift curve does not split; correspondence built over the "
              "component of the reference lift";

  sc.c1.n = la.n;
  sc.c1.index_of.assign(la.lift_count(), -1);
  for (int L = 0; L < la.lift_count(); ++L) {
    if (sr.component_of[L] != sr.component_of[0]) continue;
    sc.c1.index_of[L] = static_cast<int>(sc.c1.lifts.size());
    sc.c1.lifts.push_back(static_cast<LiftMask>(L));
  }

  const int n = la.n;
  const int c1_size = static_cast<int>(sc.c1.lifts.size());
  // incidence points (lift index, pair p); the chosen sheet is determined
  const int inc_count = c1_size * n;
  auto inc_id = [&](int li, int p) { return li * n + p; };

  sc.left_of.resize(inc_count);
  sc.right_of.resize(inc_count);
  for (int li = 0; li < c1_size; ++li) {
    LiftMask L = sc.c1.lifts[li];
    for (int p = 0; p < n; ++p) {
      sc.left_of[inc_id(li, p)] = li;
      sc.right_of[inc_id(li, p)] = p + n * ((L >> p) & 1);
    }
  }

  CoverAction sheets = to_cover_action(la.rep);
  sc.incidence.point_count = inc_count;
  sc.incidence.base_genus = la.rep.base_genus;
  sc.incidence.branch_count = la.rep.branch_count();
  for (std::size_t k = 0; k < sheets.generators.size(); ++k) {
    const Permutation& gl = la.action.generators[k];
    const Permutation& gs = sheets.generators[k];
    std::vector<int> im(inc_count);
    for (int li = 0; li < c1_size; ++li) {
      int Lto = gl(static_cast<int>(sc.c1.lifts[li]));
      int li_to = sc.c1.index_of[Lto];
      if (li_to < 0)
        throw std::logic_error("build_S: generator leaves the component");
      for (int p = 0; p < n; ++p) {
        int x = sc.right_of[inc_id(li, p)];
        int y = gs(x);
        im[inc_id(li, p)] = inc_id(li_to, y % n);
      }
    }
    sc.incidence.generators.emplace_back(std::move(im));
  }

  sc.over_left.resize(c1_size);
  sc.over_right.resize(2 * n);
  for (int i = 0; i < inc_count; ++i) {
    sc.over_left[sc.left_of[i]].push_back(i);
    sc.over_right[sc.right_of[i]].push_back(i);
  }
  return sc;
}

SCorrespondence build_S(const MonodromyRep& rep) {
  LiftAction la = lift_action(rep);
  SplitReport sr = split(la);
  return build_S(la, sr);
}

Divisor apply_S(const SCorrespondence& sc, LiftMask lift) {
  int li = sc.c1.index_of[lift];
  if (li < 0)
    throw std::invalid_argument("apply_S: lift not in the component fiber");
  Divisor d;
  d.mult.assign(2 * sc.n, 0);
  for (int inc : sc.over_left[li]) d.mult[sc.right_of[inc]] += 1;
  return d;
}

Divisor apply_St(const SCorrespondence& sc, int sheet) {
  if (sheet < 0 || sheet >= 2 * sc.n)
    throw std::invalid_argument("apply_St: sheet out of range");
  Divisor d;
  d.mult.assign(sc.c1.lifts.size(), 0);
  for (int inc : sc.over_right[sheet]) d.mult[sc.left_of[inc]] += 1;
  return d;
}

Divisor d_operator(const SCorrespondence& sc, int j, LiftMask lift) {
  if (j % 2 != 0)
    throw std::invalid_argument("d_operator: odd pair-distance leaves the component");
  if (j < 0 || j > sc.n)
    throw std::invalid_argument("d_operator: distance out of range");
  if (sc.c1.index_of[lift] < 0)
    throw std::invalid_argument("d_operator: lift not in the component fiber");
  Divisor d;
  d.mult.assign(sc.c1.lifts.size(), 0);
  for (std::size_t i = 0; i < sc.c1.lifts.size(); ++i) {
    if (std::popcount(static_cast<unsigned>(sc.c1.lifts[i] ^ lift)) == j)
      d.mult[i] += 1;
  }
  return d;
}

VerifyReport verify_StS(const SCorrespondence& sc) {
  VerifyReport r;
  const int n = sc.n;
  for (std::size_t li = 0; li < sc.c1.lifts.size(); ++li) {
    LiftMask L = sc.c1.lifts[li];
    Divisor lhs;
    lhs.mult.assign(sc.c1.lifts.size(), 0);
    Divisor sz = apply_S(sc, L);
    for (int x = 0; x < 2 * n; ++x) {
      if (sz.mult[x] == 0) continue;
      Divisor t = apply_St(sc, x);
      t.scale(sz.mult[x]);
      lhs += t;
    }
    Divisor rhs;
    rhs.mult.assign(sc.c1.lifts.size(), 0);
    for (int i = 0; 2 * i <= n - 1; ++i) {
      Divisor t = d_operator(sc, 2 * i, L);
      t.scale(n - 2 * i);
      rhs += t;
    }
    ++r.checked;
    if (!(lhs == rhs)) {
      r.ok = false;
      r.witness = static_cast<int>(L);
      std::ostringstream os;
      os << "StS identity fails at lift mask " << L;
      r.detail = os.str();
      return r;
    }
  }
  return r;
}

VerifyReport verify_SSt(const SCorrespondence& sc) {
  VerifyReport r;
  const int n = sc.n;
  const long long w_self = 1LL << (n - 2);
  const long long w_other = 1LL << (n - 3);
  for (int x = 0; x < 2 * n; ++x) {
    Divisor lhs;
    lhs.mult.assign(2 * n, 0);
    Divisor st = apply_St(sc, x);
    for (std::size_t li = 0; li < st.mult.size(); ++li) {
      if (st.mult[li] == 0) continue;
      Divisor t = apply_S(sc, sc.c1.lifts[li]);
      t.scale(st.mult[li]);
      lhs += t;
    }
    Divisor rhs;
    rhs.mult.assign(2 * n, 0);
    rhs.mult[x] = w_self;
    for (int y = 0; y < 2 * n; ++y)
      if (y % n != x % n) rhs.mult[y] += w_other;
    ++r.checked;
    if (!(lhs == rhs)) {
      r.ok = false;
      r.witness = x;
      std::ostringstream os;
      os << "SSt identity fails at sheet " << x;
      r.detail = os.str();
      return r;
    }
  }
  return r;
}

}  // namespace prym
