#pragma once

#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

/// Dense matrix over Q, row-major, 0-based indexing.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, Rat(0)) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  /// Square matrix with the given diagonal.
  static Mat diagonal(const Vec& d);
  /// Matrix whose columns are the given vectors.
  static Mat from_columns(const std::vector<Vec>& cols);
  /// Matrix whose rows are the given vectors.
  static Mat from_rows(const std::vector<Vec>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }

  Rat& operator()(int r, int c) { return a_[size_t(r) * c_ + c]; }
  const Rat& operator()(int r, int c) const { return a_[size_t(r) * c_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;

  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Rat& s) const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  /// Non-negative matrix power (square matrices only).
  Mat pow(int k) const;

  bool is_square() const { return r_ == c_; }
  bool is_zero() const;
  bool is_identity() const;

  /// True iff this and o commute (both square, same size).
  bool commutes_with(const Mat& o) const { return *this * o == o * *this; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

/// Rank via fraction-free (Bareiss) elimination on a denominator-cleared
/// integer copy; intermediate entries stay integral and bounded.
int rank(const Mat& m);

/// Deterministic basis of the right kernel {x : m x = 0}: reduced echelon
/// pivots in increasing column order, one basis vector per free column (free
/// columns in increasing order, unit coordinate at the free column).
std::vector<Vec> kernel_basis(const Mat& m);

/// Exact inverse; throws SingularMatrix.
Mat invert(const Mat& m);

/// Unique solution of m x = b for invertible m; throws SingularMatrix.
Vec solve(const Mat& m, const Vec& b);

/// Incremental row-space accumulator in reduced echelon form. Used for span
/// membership, rank of spanning sets, and basis completion.
class RowSpan {
 public:
  /// Returns true iff v enlarged the span.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  int dim() const { return int(rows_.size()); }
  /// Echelon basis rows, pivot columns strictly increasing.
  const std::vector<Vec>& basis() const { return rows_; }

 private:
  std::vector<Vec> rows_;   // reduced: pivot entry 1, pivot column clear elsewhere
  std::vector<int> pivots_; // pivot column of rows_[i]
  Vec reduce(Vec v) const;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& v);
Rat dot(const Vec& a, const Vec& b);
/// Standard basis vector e_i (0-based) in dimension n.
Vec unit_vec(int n, int i);

}  // namespace bihom
