#pragma once

#include "bihom/matrix.hpp"

namespace bihom {

/// Dense coefficient tensor of a trilinear map V^3 -> W with dim V = n and
/// dim W = m: at(i,j,k,l) is the l-th output coordinate on the basis triple
/// (e_i, e_j, e_k). Brackets use m == n; cocycles use the module dimension.
/// Indices are 0-based internally.
class TriTensor {
 public:
  TriTensor() = default;
  TriTensor(int dim_in, int dim_out)
      : n_(dim_in), m_(dim_out),
        c_(size_t(dim_in) * dim_in * dim_in * dim_out, Rat(0)) {}

  int dim_in() const { return n_; }
  int dim_out() const { return m_; }

  Rat& at(int i, int j, int k, int l) { return c_[idx(i, j, k, l)]; }
  const Rat& at(int i, int j, int k, int l) const { return c_[idx(i, j, k, l)]; }

  /// Output vector on the basis triple (e_i, e_j, e_k).
  Vec col(int i, int j, int k) const;
  void set_col(int i, int j, int k, const Vec& v);

  /// Multilinear evaluation on arbitrary coordinate vectors.
  Vec eval(const Vec& x, const Vec& y, const Vec& z) const;

  /// Tensor of (x,y,z) -> t(a x, b y, c z). The maps may be rectangular:
  /// each must have dim_in() rows, and all three the same column count,
  /// which becomes the input dimension of the result.
  TriTensor compose_inputs(const Mat& a, const Mat& b, const Mat& c) const;

  /// Tensor of (x,y,z) -> m t(x,y,z).
  TriTensor compose_output(const Mat& m) const;

  TriTensor operator+(const TriTensor& o) const;
  TriTensor operator*(const Rat& s) const;
  bool operator==(const TriTensor& o) const {
    return n_ == o.n_ && m_ == o.m_ && c_ == o.c_;
  }
  bool operator!=(const TriTensor& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  size_t idx(int i, int j, int k, int l) const {
    return ((size_t(i) * n_ + j) * n_ + k) * m_ + l;
  }
  int n_ = 0, m_ = 0;
  std::vector<Rat> c_;
};

/// Same layout for a bilinear map V^2 -> W (binary brackets).
class BiTensor {
 public:
  BiTensor() = default;
  BiTensor(int dim_in, int dim_out)
      : n_(dim_in), m_(dim_out), c_(size_t(dim_in) * dim_in * dim_out, Rat(0)) {}

  int dim_in() const { return n_; }
  int dim_out() const { return m_; }

  Rat& at(int i, int j, int l) { return c_[idx(i, j, l)]; }
  const Rat& at(int i, int j, int l) const { return c_[idx(i, j, l)]; }

  Vec col(int i, int j) const;
  void set_col(int i, int j, const Vec& v);
  Vec eval(const Vec& x, const Vec& y) const;
  BiTensor compose_inputs(const Mat& a, const Mat& b) const;
  BiTensor compose_output(const Mat& m) const;
  bool operator==(const BiTensor& o) const {
    return n_ == o.n_ && m_ == o.m_ && c_ == o.c_;
  }
  bool operator!=(const BiTensor& o) const { return !(*this == o); }

 private:
  size_t idx(int i, int j, int l) const { return (size_t(i) * n_ + j) * m_ + l; }
  int n_ = 0, m_ = 0;
  std::vector<Rat> c_;
};

}  // namespace bihom
