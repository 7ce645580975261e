#include "prym/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace prym {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMat::is_zero() const {
  for (const Int& v : a_)
    if (v != 0) return false;
  return true;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntVec IntMat::col(int j) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void IntMat::set_col(int j, const IntVec& v) {
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  IntMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matadd: shape mismatch");
  IntMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matsub: shape mismatch");
  IntMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

IntMat operator*(const Int& c, const IntMat& a) {
  IntMat out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = c * a.at(i, j);
  return out;
}

IntVec operator*(const IntMat& a, const IntVec& v) {
  if (a.cols() != static_cast<int>(v.size()))
    throw std::invalid_argument("matvec: shape mismatch");
  IntVec out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (v[j] != 0) out[i] += a.at(i, j) * v[j];
  return out;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = v / prev;  // exact by Bareiss
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

struct SnfWorker {
  IntMat a;
  IntMat P, Pinv, Q, Qinv;

  explicit SnfWorker(const IntMat& m)
      : a(m),
        P(IntMat::identity(m.rows())),
        Pinv(IntMat::identity(m.rows())),
        Q(IntMat::identity(m.cols())),
        Qinv(IntMat::identity(m.cols())) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < P.cols(); ++c) std::swap(P.at(i, c), P.at(j, c));
    for (int r = 0; r < Pinv.rows(); ++r) std::swap(Pinv.at(r, i), Pinv.at(r, j));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < Q.rows(); ++r) std::swap(Q.at(r, i), Q.at(r, j));
    for (int c = 0; c < Qinv.cols(); ++c) std::swap(Qinv.at(i, c), Qinv.at(j, c));
  }

  // row_i += f * row_j
  void add_row(int i, int j, const Int& f) {
    if (f == 0) return;
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) += f * a.at(j, c);
    for (int c = 0; c < P.cols(); ++c) P.at(i, c) += f * P.at(j, c);
    for (int r = 0; r < Pinv.rows(); ++r) Pinv.at(r, j) -= f * Pinv.at(r, i);
  }

  // col_i += f * col_j
  void add_col(int i, int j, const Int& f) {
    if (f == 0) return;
    for (int r = 0; r < a.rows(); ++r) a.at(r, i) += f * a.at(r, j);
    for (int r = 0; r < Q.rows(); ++r) Q.at(r, i) += f * Q.at(r, j);
    for (int c = 0; c < Qinv.cols(); ++c) Qinv.at(j, c) -= f * Qinv.at(i, c);
  }

  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < P.cols(); ++c) P.at(i, c) = -P.at(i, c);
    for (int r = 0; r < Pinv.rows(); ++r) Pinv.at(r, i) = -Pinv.at(r, i);
  }

  // Diagonalize the block starting at (t0, t0) by Euclidean pivoting.
  void diagonalize(int t0) {
    const int n = a.rows(), m = a.cols();
    for (int t = t0; t < n && t < m; ++t) {
      // smallest nonzero entry in the remaining block as pivot
      int pi = -1, pj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < m; ++j) {
          if (a.at(i, j) == 0) continue;
          if (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj))) { pi = i; pj = j; }
        }
      if (pi < 0) return;
      swap_rows(t, pi);
      swap_cols(t, pj);
      if (a.at(t, t) < 0) negate_row(t);

      bool clean = false;
      while (!clean) {
        clean = true;
        for (int i = t + 1; i < n; ++i) {
          if (a.at(i, t) == 0) continue;
          Int q = a.at(i, t) / a.at(t, t);
          add_row(i, t, -q);
          if (a.at(i, t) != 0) {  // remainder became the smaller pivot
            swap_rows(t, i);
            if (a.at(t, t) < 0) negate_row(t);
            clean = false;
          }
        }
        for (int j = t + 1; j < m; ++j) {
          if (a.at(t, j) == 0) continue;
          Int q = a.at(t, j) / a.at(t, t);
          add_col(j, t, -q);
          if (a.at(t, j) != 0) {
            swap_cols(t, j);
            if (a.at(t, t) < 0) negate_row(t);
            clean = false;
          }
        }
      }
    }
  }

  void run() {
    diagonalize(0);
    // Enforce the divisibility chain: fold a violating later invariant into
    // the earlier slot and re-diagonalize from there; the earlier entry then
    // becomes the gcd of the pair.
    const int lim = std::min(a.rows(), a.cols());
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i + 1 < lim; ++i) {
        if (a.at(i, i) == 0 || a.at(i + 1, i + 1) == 0) break;
        if (a.at(i + 1, i + 1) % a.at(i, i) != 0) {
          add_col(i, i + 1, 1);
          diagonalize(i);
          changed = true;
        }
      }
    }
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& m) {
  SnfWorker w(m);
  w.run();
  SmithDecomposition out;
  out.S = std::move(w.a);
  out.P = std::move(w.P);
  out.Pinv = std::move(w.Pinv);
  out.Q = std::move(w.Q);
  out.Qinv = std::move(w.Qinv);
  out.rank = 0;
  int lim = std::min(out.S.rows(), out.S.cols());
  for (int i = 0; i < lim; ++i) {
    if (out.S.at(i, i) == 0) break;
    out.invariants.push_back(out.S.at(i, i));
    ++out.rank;
  }
  return out;
}

std::vector<IntVec> kernel_basis(const IntMat& a) {
  SmithDecomposition d = smith_normal_form(a);
  std::vector<IntVec> out;
  for (int j = d.rank; j < a.cols(); ++j) out.push_back(d.Q.col(j));
  return out;
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve: size mismatch");
  SmithDecomposition d = smith_normal_form(a);
  IntVec pb = d.P * b;
  IntVec z(a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    if (i < d.rank) {
      if (pb[i] % d.S.at(i, i) != 0) return std::nullopt;
      z[i] = pb[i] / d.S.at(i, i);
    } else if (pb[i] != 0) {
      return std::nullopt;
    }
  }
  return d.Q * z;
}

std::optional<IntMat> express_in_basis(const IntMat& sub, const IntMat& vectors) {
  if (sub.rows() != vectors.rows())
    throw std::invalid_argument("express_in_basis: ambient dimension mismatch");
  SmithDecomposition d = smith_normal_form(sub);
  if (d.rank != sub.cols())
    throw std::invalid_argument("express_in_basis: columns are dependent");
  IntMat out(sub.cols(), vectors.cols());
  for (int j = 0; j < vectors.cols(); ++j) {
    IntVec pb = d.P * vectors.col(j);
    IntVec z(sub.cols());
    for (int i = 0; i < sub.rows(); ++i) {
      if (i < d.rank) {
        if (pb[i] % d.S.at(i, i) != 0) return std::nullopt;
        z[i] = pb[i] / d.S.at(i, i);
      } else if (pb[i] != 0) {
        return std::nullopt;
      }
    }
    out.set_col(j, d.Q * z);
  }
  return out;
}

}  // namespace prym
