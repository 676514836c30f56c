// matrix.cpp

#include "strat/matrix.hpp"

#include <string>

namespace strat {

static void check_same_field(const Mat& a, const Mat& b, const char* who) {
  if (!(a.field == b.field)) throw LinalgError(std::string(who) + ": field mismatch");
}

Mat::Mat(int r, int c, Field f) : rows(r), cols(c), field(f), a(std::size_t(r) * c, Scalar(0)) {}

Mat Mat::identity(int n, Field f) {
  Mat m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::of(const std::vector<std::vector<long>>& rows_in, Field f) {
  int r = int(rows_in.size());
  int c = r == 0 ? 0 : int(rows_in[0].size());
  Mat m(r, c, f);
  for (int i = 0; i < r; ++i) {
    if (int(rows_in[i].size()) != c) throw LinalgError("Mat::of: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = f.canon(Scalar(rows_in[i][j]));
  }
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (!Field::is_zero(x)) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows != cols) return false;
  return *this == identity(rows, field);
}

Mat Mat::operator+(const Mat& o) const {
  check_same_field(*this, o, "add");
  if (rows != o.rows || cols != o.cols) throw LinalgError("add: shape mismatch");
  Mat m(rows, cols, field);
  for (std::size_t k = 0; k < a.size(); ++k) m.a[k] = field.add(a[k], o.a[k]);
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  check_same_field(*this, o, "sub");
  if (rows != o.rows || cols != o.cols) throw LinalgError("sub: shape mismatch");
  Mat m(rows, cols, field);
  for (std::size_t k = 0; k < a.size(); ++k) m.a[k] = field.sub(a[k], o.a[k]);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  check_same_field(*this, o, "mul");
  if (cols != o.rows) throw LinalgError("mul: shape mismatch");
  Mat m(rows, o.cols, field);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Scalar& x = at(i, k);
      if (Field::is_zero(x)) continue;
      for (int j = 0; j < o.cols; ++j) {
        const Scalar& y = o.at(k, j);
        if (Field::is_zero(y)) continue;
        m.at(i, j) = field.add(m.at(i, j), field.mul(x, y));
      }
    }
  return m;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat m(rows, cols, field);
  for (std::size_t k = 0; k < a.size(); ++k) m.a[k] = field.mul(a[k], s);
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols, rows, field);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat Mat::col(int j) const {
  Mat v(rows, 1, field);
  for (int i = 0; i < rows; ++i) v.at(i, 0) = at(i, j);
  return v;
}

Mat Mat::cols_selected(const std::vector<int>& js) const {
  Mat m(rows, int(js.size()), field);
  for (int j = 0; j < int(js.size()); ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = at(i, js[j]);
  return m;
}

void Mat::set_col(int j, const Mat& v) {
  if (v.rows != rows || v.cols != 1) throw LinalgError("set_col: shape mismatch");
  for (int i = 0; i < rows; ++i) at(i, j) = v.at(i, 0);
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.cols == 0 && a.rows == 0) return b;
  if (b.cols == 0 && b.rows == 0) return a;
  check_same_field(a, b, "hstack");
  if (a.rows != b.rows) throw LinalgError("hstack: row mismatch");
  Mat m(a.rows, a.cols + b.cols, a.field);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
  }
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols == 0 && a.rows == 0) return b;
  if (b.cols == 0 && b.rows == 0) return a;
  check_same_field(a, b, "vstack");
  if (a.cols != b.cols) throw LinalgError("vstack: col mismatch");
  Mat m(a.rows + b.rows, a.cols, a.field);
  for (int j = 0; j < a.cols; ++j) {
    for (int i = 0; i < a.rows; ++i) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i) m.at(a.rows + i, j) = b.at(i, j);
  }
  return m;
}

Rref rref(const Mat& m) {
  Rref out;
  out.r = m;
  Mat& r = out.r;
  const Field& f = m.field;
  int lead = 0;
  for (int j = 0; j < r.cols && lead < r.rows; ++j) {
    // first nonzero entry at or below `lead` becomes the pivot
    int piv = -1;
    for (int i = lead; i < r.rows; ++i)
      if (!Field::is_zero(r.at(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int k = 0; k < r.cols; ++k) std::swap(r.at(piv, k), r.at(lead, k));
    Scalar s = f.inv(r.at(lead, j));
    for (int k = j; k < r.cols; ++k) r.at(lead, k) = f.mul(r.at(lead, k), s);
    for (int i = 0; i < r.rows; ++i) {
      if (i == lead) continue;
      const Scalar c = r.at(i, j);
      if (Field::is_zero(c)) continue;
      for (int k = j; k < r.cols; ++k)
        r.at(i, k) = f.sub(r.at(i, k), f.mul(c, r.at(lead, k)));
    }
    out.pivots.push_back(j);
    ++lead;
  }
  return out;
}

int rank(const Mat& m) { return int(rref(m).pivots.size()); }

Mat kernel_basis(const Mat& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int j : rr.pivots) is_pivot[j] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat k(m.cols, int(free_cols.size()), m.field);
  for (int fj = 0; fj < int(free_cols.size()); ++fj) {
    int j = free_cols[fj];
    k.at(j, fj) = 1;
    for (int pi = 0; pi < int(rr.pivots.size()); ++pi)
      k.at(rr.pivots[pi], fj) = m.field.neg(rr.r.at(pi, j));
  }
  return k;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  check_same_field(m, b, "solve");
  if (m.rows != b.rows) throw LinalgError("solve: shape mismatch");
  Rref rr = rref(hstack(m, b));
  // consistency: no pivot may land in the augmented block
  for (int j : rr.pivots)
    if (j >= m.cols) return std::nullopt;
  Mat x(m.cols, b.cols, m.field);
  for (int pi = 0; pi < int(rr.pivots.size()); ++pi)
    for (int j = 0; j < b.cols; ++j) x.at(rr.pivots[pi], j) = rr.r.at(pi, m.cols + j);
  return x;
}

bool in_colspan(const Mat& basis, const Mat& v) { return solve(basis, v).has_value(); }

Mat colspace(const Mat& m) {
  Rref rr = rref(m.transpose());
  Mat b(m.rows, int(rr.pivots.size()), m.field);
  for (int i = 0; i < b.cols; ++i)
    for (int j = 0; j < m.rows; ++j) b.at(j, i) = rr.r.at(i, j);
  return b;
}

std::vector<int> independent_cols(const Mat& seed, const Mat& m) {
  std::vector<int> picked;
  Mat span = seed;
  int r = span.cols == 0 ? 0 : rank(span);
  for (int j = 0; j < m.cols; ++j) {
    Mat cand = span.rows == 0 && span.cols == 0 ? m.col(j) : hstack(span, m.col(j));
    int nr = rank(cand);
    if (nr > r) {
      picked.push_back(j);
      span = cand;
      r = nr;
    }
  }
  return picked;
}

SubspaceOps subspace_ops(const Mat& u, const Mat& v) {
  check_same_field(u, v, "subspace_ops");
  if (u.rows != v.rows) throw LinalgError("subspace_ops: ambient mismatch");
  SubspaceOps out;
  out.sum = colspace(hstack(u, v));
  // pairs (x, y) with u x + v y = 0 give intersection vectors u x
  Mat k = kernel_basis(hstack(u, v));
  Mat inter(u.rows, k.cols, u.field);
  for (int j = 0; j < k.cols; ++j) {
    Mat x(u.cols, 1, u.field);
    for (int i = 0; i < u.cols; ++i) x.at(i, 0) = k.at(i, j);
    inter.set_col(j, u * x);
  }
  out.intersection = colspace(inter);
  out.complement = v.cols_selected(independent_cols(u, v));
  return out;
}

}  // namespace strat
