#include "bihom/matrix.hpp"

#include <algorithm>

#include "bihom/errors.hpp"

namespace bihom {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::diagonal(const Vec& d) {
  Mat m(int(d.size()), int(d.size()));
  for (int i = 0; i < int(d.size()); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat();
  Mat m(int(cols[0].size()), int(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (int(cols[c].size()) != m.rows()) throw DimensionMismatch("from_columns");
    for (int r = 0; r < m.rows(); ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(int(rows.size()), int(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (int(rows[r].size()) != m.cols()) throw DimensionMismatch("from_rows");
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(int r) const {
  Vec v(c_);
  for (int c = 0; c < c_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vec Mat::col(int c) const {
  Vec v(r_);
  for (int r = 0; r < r_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw DimensionMismatch("matrix product");
  Mat out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rat& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.c_; ++j)
        if (o(k, j) != 0) out(i, j) += x * o(k, j);
    }
  return out;
}

Vec Mat::operator*(const Vec& v) const {
  if (int(v.size()) != c_) throw DimensionMismatch("matrix-vector product");
  Vec out(r_, Rat(0));
  for (int j = 0; j < c_; ++j) {
    if (v[j] == 0) continue;
    for (int i = 0; i < r_; ++i)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix sum");
  Mat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix difference");
  Mat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

Mat Mat::operator-() const {
  Mat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
  return out;
}

Mat Mat::operator*(const Rat& s) const {
  Mat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
  return out;
}

Mat Mat::transpose() const {
  Mat out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Mat Mat::pow(int k) const {
  if (!is_square()) throw DimensionMismatch("power of non-square matrix");
  if (k < 0) throw Error("negative matrix power");
  Mat out = identity(r_);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool Mat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if ((*this)(i, j) != ((i == j) ? 1 : 0)) return false;
  return true;
}

int rank(const Mat& m) {
  const int nr = m.rows(), nc = m.cols();
  // Clear denominators row by row; scaling rows by nonzero constants keeps rank.
  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (int i = 0; i < nr; ++i) {
    mpz_class l(1);
    for (int j = 0; j < nc; ++j) l = lcm(l, m(i, j).get_den());
    for (int j = 0; j < nc; ++j) {
      Rat s = m(i, j) * Rat(l);
      a[i][j] = s.get_num();
    }
  }
  // Bareiss: after eliminating with pivot p, divide by the previous pivot.
  mpz_class prev(1);
  int row = 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    int piv = -1;
    for (int i = row; i < nr; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    for (int i = row + 1; i < nr; ++i) {
      for (int j = col + 1; j < nc; ++j)
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

namespace {

// Reduced row echelon form in place; returns pivot columns in order.
std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
    Rat inv = Rat(1) / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Vec> kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Rat(0));
    v[free] = 1;
    for (int i = 0; i < int(pivots.size()); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat invert(const Mat& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> pivots = rref(aug);
  if (int(pivots.size()) != n || pivots.back() >= n) throw SingularMatrix();
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

Vec solve(const Mat& m, const Vec& b) {
  if (!m.is_square() || int(b.size()) != m.rows())
    throw DimensionMismatch("solve shape");
  Mat inv = invert(m);
  return inv * b;
}

Vec RowSpan::reduce(Vec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rat& x = v[pivots_[i]];
    if (x == 0) continue;
    Rat f = x;
    for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool RowSpan::add(const Vec& v) {
  Vec r = reduce(v);
  int p = -1;
  for (size_t j = 0; j < r.size(); ++j)
    if (r[j] != 0) { p = int(j); break; }
  if (p < 0) return false;
  Rat inv = Rat(1) / r[p];
  for (Rat& x : r) x *= inv;
  for (size_t i = 0; i < rows_.size(); ++i) {
    Rat f = rows_[i][p];
    if (f == 0) continue;
    for (size_t j = 0; j < r.size(); ++j) rows_[i][j] -= f * r[j];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool RowSpan::contains(const Vec& v) const { return is_zero(reduce(v)); }

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Rat& s, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product");
  Rat out(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) out += a[i] * b[i];
  return out;
}

Vec unit_vec(int n, int i) {
  Vec v(n, Rat(0));
  v[i] = 1;
  return v;
}

}  // namespace bihom
