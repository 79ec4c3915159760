#pragma once

#include "bihom/representations.hpp"

// Shared helpers for the representation-style checkers: precomputed tables of
// rho evaluated on transformed basis pairs, and combinations against a
// coordinate vector in either slot.
namespace bihom::detail {

inline Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// table(u,v) = rho(m1 e_u, m2 e_v)
inline std::vector<Mat> rho_table(const Representation& r, const Mat& m1, const Mat& m2) {
  const int n = r.algebra_dim(), m = r.module_dim();
  std::vector<Mat> t(size_t(n) * n, Mat(m, m));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      Mat acc(m, m);
      for (int p = 0; p < n; ++p) {
        if (m1(p, u) == 0) continue;
        for (int q = 0; q < n; ++q) {
          Rat f = m1(p, u) * m2(q, v);
          if (f != 0) acc = acc + r.rho(p, q) * f;
        }
      }
      t[size_t(u) * n + v] = std::move(acc);
    }
  return t;
}

// rho(w, . e_y) with coordinate vector w in the first slot, from a table
// whose first slot is untransformed.
inline Mat combine_first(const std::vector<Mat>& table, int n, int m, const Vec& w, int y) {
  Mat acc(m, m);
  for (int p = 0; p < n; ++p)
    if (w[p] != 0) acc = acc + table[size_t(p) * n + y] * w[p];
  return acc;
}

// rho(. e_x, w) with coordinate vector w in the second slot.
inline Mat combine_second(const std::vector<Mat>& table, int n, int m, int x, const Vec& w) {
  Mat acc(m, m);
  for (int q = 0; q < n; ++q)
    if (w[q] != 0) acc = acc + table[size_t(x) * n + q] * w[q];
  return acc;
}

}  // namespace bihom::detail
