#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace prym {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Dense exact integer matrix. Small sizes only; everything here favors
// exactness over speed.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMat transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  IntVec col(int j) const;
  void set_col(int j, const IntVec& v);

  friend bool operator==(const IntMat&, const IntMat&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntMat operator+(const IntMat& a, const IntMat& b);
IntMat operator-(const IntMat& a, const IntMat& b);
IntMat operator*(const Int& c, const IntMat& a);
IntVec operator*(const IntMat& a, const IntVec& v);

Int dot(const IntVec& a, const IntVec& b);

// Determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);

// P * A * Q = S with P, Q unimodular and S in Smith normal form
// (diagonal, each invariant dividing the next). Pinv and Qinv are the
// exact inverses.
struct SmithDecomposition {
  IntMat S, P, Pinv, Q, Qinv;
  int rank = 0;
  IntVec invariants;  // nonzero diagonal entries, in divisibility order
};

SmithDecomposition smith_normal_form(const IntMat& a);

// Basis of the integer kernel {x : A x = 0}; saturated by construction.
std::vector<IntVec> kernel_basis(const IntMat& a);

// Exact integer solution of A y = b, if one exists.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

// Columns of `sub` must be independent vectors in Z^rows. Expresses each
// column of `vectors` in that basis; returns nothing if some column lies
// outside the integer span.
std::optional<IntMat> express_in_basis(const IntMat& sub, const IntMat& vectors);

}  // namespace prym
