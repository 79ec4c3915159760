#include "bihom/derivations.hpp"

#include "bihom/errors.hpp"

namespace bihom {

namespace {

Mat weight_map(const ThreeBihomLieAlgebra& A, int k, int l) {
  if (k < 0 || l < 0) throw PreconditionFailed("derivation weight must be non-negative");
  return A.alpha.pow(k) * A.beta.pow(l);
}

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

AxiomReport is_derivation(const Mat& d, const ThreeBihomLieAlgebra& A, int k, int l) {
  if (d.rows() != A.n || d.cols() != A.n) throw DimensionMismatch("derivation shape");
  const int n = A.n;
  Mat g = weight_map(A, k, l);
  AxiomReport rep;
  rep.axioms.push_back("derivation.commute.alpha");
  if (d * A.alpha != A.alpha * d)
    rep.add("derivation.commute.alpha", {}, flatten(d * A.alpha), flatten(A.alpha * d));
  rep.axioms.push_back("derivation.commute.beta");
  if (d * A.beta != A.beta * d)
    rep.add("derivation.commute.beta", {}, flatten(d * A.beta), flatten(A.beta * d));

  rep.axioms.push_back("derivation.leibniz");
  TriTensor lhs = A.bracket.compose_output(d);
  TriTensor t1 = A.bracket.compose_inputs(d, g, g);
  TriTensor t2 = A.bracket.compose_inputs(g, d, g);
  TriTensor t3 = A.bracket.compose_inputs(g, g, d);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        Vec l0 = lhs.col(u, v, w);
        Vec r = t1.col(u, v, w) + t2.col(u, v, w) + t3.col(u, v, w);
        if (l0 != r)
          rep.add("derivation.leibniz", {u + 1, v + 1, w + 1}, std::move(l0), std::move(r));
      }
  return rep;
}

DerivationSpace derivation_space(const ThreeBihomLieAlgebra& A, int k, int l) {
  const int n = A.n;
  Mat g = weight_map(A, k, l);
  const int vars = n * n;  // d(p,q) at index p*n+q
  const size_t rows = size_t(2) * vars + size_t(n) * n * n * n;
  Mat sys(int(rows), vars);
  int row = 0;
  // d alpha - alpha d == 0 and the beta counterpart.
  for (const Mat* m : {&A.alpha, &A.beta}) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        for (int q = 0; q < n; ++q) sys(row, r * n + q) += (*m)(q, c);
        for (int p = 0; p < n; ++p) sys(row, p * n + c) -= (*m)(r, p);
        ++row;
      }
  }
  // Leibniz rows: D[e_u,e_v,e_w] - [D e_u, g e_v, g e_w]
  //             - [g e_u, D e_v, g e_w] - [g e_u, g e_v, D e_w] == 0.
  Mat id = Mat::identity(n);
  TriTensor c1 = A.bracket.compose_inputs(id, g, g);
  TriTensor c2 = A.bracket.compose_inputs(g, id, g);
  TriTensor c3 = A.bracket.compose_inputs(g, g, id);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        for (int r = 0; r < n; ++r) {
          for (int m = 0; m < n; ++m) {
            const Rat& c = A.bracket.at(u, v, w, m);
            if (c != 0) sys(row, r * n + m) += c;
          }
          for (int q = 0; q < n; ++q) {
            const Rat& a1 = c1.at(q, v, w, r);
            if (a1 != 0) sys(row, q * n + u) -= a1;
            const Rat& a2 = c2.at(u, q, w, r);
            if (a2 != 0) sys(row, q * n + v) -= a2;
            const Rat& a3 = c3.at(u, v, q, r);
            if (a3 != 0) sys(row, q * n + w) -= a3;
          }
          ++row;
        }
  DerivationSpace out;
  out.k = k;
  out.l = l;
  for (const Vec& kvec : kernel_basis(sys)) {
    Mat d(n, n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) d(p, q) = kvec[p * n + q];
    out.basis.push_back(std::move(d));
  }
  return out;
}

Mat inner_derivation(const ThreeBihomLieAlgebra& A, const Vec& u1, const Vec& u2,
                     int k, int l) {
  if (int(u1.size()) != A.n || int(u2.size()) != A.n)
    throw DimensionMismatch("fixed point dimension");
  if (!is_regular(A)) throw NotRegular();
  if (A.alpha * u1 != u1 || A.beta * u1 != u1 || A.alpha * u2 != u2 || A.beta * u2 != u2)
    throw NotFixedPoint();
  Mat g = weight_map(A, k, l);
  Mat d(A.n, A.n);
  for (int j = 0; j < A.n; ++j) {
    Vec col = A.bracket.eval(u1, u2, g.col(j));
    for (int i = 0; i < A.n; ++i) d(i, j) = col[i];
  }
  return d;
}

Mat derivation_bracket(const Mat& d1, const Mat& d2) {
  if (d1.rows() != d1.cols() || d2.rows() != d2.cols() || d1.rows() != d2.rows())
    throw DimensionMismatch("derivation bracket");
  return d1 * d2 - d2 * d1;
}

}  // namespace bihom
