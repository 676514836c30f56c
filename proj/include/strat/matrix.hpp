// matrix.hpp
//
// Dense exact matrices over a Field, plus the row-reduction toolkit the
// whole project leans on: reduced row echelon form with deterministic
// first-nonzero pivoting, kernel bases, linear solves, and canonical
// subspace operations (sum, intersection, complement). Determinism matters
// here because downstream certificates and reports are byte-compared.

#ifndef STRAT_MATRIX_HPP
#define STRAT_MATRIX_HPP

#include <optional>
#include <vector>

#include "strat/scalar.hpp"

namespace strat {

struct Mat {
  int rows = 0;
  int cols = 0;
  Field field;
  std::vector<Scalar> a;  // row-major, rows*cols entries

  Mat() = default;
  Mat(int r, int c, Field f = Field::rationals());

  static Mat identity(int n, Field f = Field::rationals());
  // rows given as integer literals, handy in tests
  static Mat of(const std::vector<std::vector<long>>& rows_in, Field f = Field::rationals());

  Scalar& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_zero() const;
  bool is_identity() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;

  Mat col(int j) const;
  Mat cols_selected(const std::vector<int>& js) const;
  void set_col(int j, const Mat& v);
};

// [a | b] side by side and a over b
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

struct Rref {
  Mat r;                   // the reduced form
  std::vector<int> pivots; // pivot column per nonzero row
};

// Gauss-Jordan with the first nonzero entry in each column as pivot.
Rref rref(const Mat& m);
int rank(const Mat& m);

// Columns span ker(m); the basis is the canonical one read off the rref
// (free variable set to 1, pivots back-substituted), in free-column order.
Mat kernel_basis(const Mat& m);

// One solution of m x = b (free variables zero), or nullopt. b may have
// several columns; the result then solves them all simultaneously.
std::optional<Mat> solve(const Mat& m, const Mat& b);

bool in_colspan(const Mat& basis, const Mat& v);

// Canonical basis of the column space: rref of the transpose, transposed
// back. Two matrices with the same column span map to the same output.
Mat colspace(const Mat& m);

struct SubspaceOps {
  Mat sum;           // canonical basis of U + V
  Mat intersection;  // canonical basis of U cap V
  Mat complement;    // columns of V extending U to a basis of U + V
};
// U, V given by spanning columns inside the same ambient space.
SubspaceOps subspace_ops(const Mat& u, const Mat& v);

// Greedy column selection: indices of columns of m that enlarge the span of
// `seed` one by one, scanned left to right.
std::vector<int> independent_cols(const Mat& seed, const Mat& m);

struct LinalgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace strat

#endif
