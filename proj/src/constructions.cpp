#include "bihom/constructions.hpp"

#include "bihom/errors.hpp"

namespace bihom {

bool is_multiplicative(const TriTensor& t, const Mat& m) {
  if (m.rows() != t.dim_in() || m.cols() != t.dim_in() || t.dim_in() != t.dim_out())
    throw DimensionMismatch("multiplicativity test");
  return t.compose_output(m) == t.compose_inputs(m, m, m);
}

ThreeBihomLieAlgebra yau_twist(const ThreeBihomLieAlgebra& L, const Mat& a, const Mat& b) {
  if (a.rows() != L.n || a.cols() != L.n || b.rows() != L.n || b.cols() != L.n)
    throw DimensionMismatch("twist maps");
  if (!L.alpha.is_identity() || !L.beta.is_identity())
    throw PreconditionFailed("yau_twist input must carry identity structure maps");
  if (!check_three_bihom_lie(L).passed())
    throw PreconditionFailed("yau_twist input is not a ternary Lie algebra");
  if (!is_multiplicative(L.bracket, a))
    throw PreconditionFailed("yau_twist: a is not multiplicative");
  if (!is_multiplicative(L.bracket, b))
    throw PreconditionFailed("yau_twist: b is not multiplicative");
  if (!a.commutes_with(b)) throw PreconditionFailed("yau_twist: maps do not commute");
  return ThreeBihomLieAlgebra(L.n, L.bracket.compose_inputs(a, a, b), a, b);
}

ThreeBihomLieAlgebra twist(const ThreeBihomLieAlgebra& A, const Mat& a2, const Mat& b2) {
  if (a2.rows() != A.n || a2.cols() != A.n || b2.rows() != A.n || b2.cols() != A.n)
    throw DimensionMismatch("twist maps");
  if (!is_multiplicative(A.bracket, a2))
    throw PreconditionFailed("twist: a' is not multiplicative");
  if (!is_multiplicative(A.bracket, b2))
    throw PreconditionFailed("twist: b' is not multiplicative");
  // All six pairings among {alpha, beta, a', b'} must commute.
  const Mat* maps[4] = {&A.alpha, &A.beta, &a2, &b2};
  const char* names[4] = {"alpha", "beta", "a'", "b'"};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!maps[i]->commutes_with(*maps[j]))
        throw PreconditionFailed(std::string("twist: ") + names[i] + " and " + names[j] +
                                 " do not commute");
  return ThreeBihomLieAlgebra(A.n, A.bracket.compose_inputs(a2, a2, b2),
                              A.alpha * a2, A.beta * b2);
}

ThreeBihomLieAlgebra power_twist(const ThreeBihomLieAlgebra& A, int k) {
  if (k < 0) throw PreconditionFailed("power_twist exponent must be non-negative");
  return twist(A, A.alpha.pow(k), A.beta.pow(k));
}

ThreeBihomLieAlgebra tensor_product(const TotallyBihomAssocAlgebra& T,
                                    const ThreeBihomLieAlgebra& A) {
  if (!check_totally_assoc(T).passed())
    throw PreconditionFailed("tensor factor fails total associativity axioms");
  if (!check_tensor_condition(T).passed())
    throw PreconditionFailed("tensor factor fails the symmetry condition");
  if (rank(T.alpha) != T.n)
    throw PreconditionFailed("tensor factor alpha is not invertible");
  if (!check_three_bihom_lie(A).passed())
    throw PreconditionFailed("tensor bracket algebra fails its axioms");
  const int t = T.n, m = A.n, n = t * m;
  TriTensor c(n, n);
  for (int i1 = 0; i1 < t; ++i1)
    for (int i2 = 0; i2 < t; ++i2)
      for (int i3 = 0; i3 < t; ++i3)
        for (int i4 = 0; i4 < t; ++i4) {
          const Rat& p = T.product.at(i1, i2, i3, i4);
          if (p == 0) continue;
          for (int j1 = 0; j1 < m; ++j1)
            for (int j2 = 0; j2 < m; ++j2)
              for (int j3 = 0; j3 < m; ++j3)
                for (int j4 = 0; j4 < m; ++j4) {
                  const Rat& q = A.bracket.at(j1, j2, j3, j4);
                  if (q != 0)
                    c.at(i1 * m + j1, i2 * m + j2, i3 * m + j3, i4 * m + j4) = p * q;
                }
        }
  return ThreeBihomLieAlgebra(n, std::move(c), kron(T.alpha, A.alpha),
                              kron(T.beta, A.beta));
}

BihomLieAlgebra induced_binary(const ThreeBihomLieAlgebra& A, const Vec& a) {
  if (int(a.size()) != A.n) throw DimensionMismatch("fixed point dimension");
  if (A.alpha * a != a || A.beta * a != a) throw NotFixedPoint();
  BiTensor c(A.n, A.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j)
      c.set_col(i, j, A.bracket.eval(a, unit_vec(A.n, i), unit_vec(A.n, j)));
  return BihomLieAlgebra(A.n, std::move(c), A.alpha, A.beta);
}

ThreeBihomLieAlgebra direct_sum(const ThreeBihomLieAlgebra& A,
                                const ThreeBihomLieAlgebra& B) {
  const int n = A.n + B.n;
  TriTensor c(n, n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j)
      for (int k = 0; k < A.n; ++k)
        for (int l = 0; l < A.n; ++l) c.at(i, j, k, l) = A.bracket.at(i, j, k, l);
  for (int i = 0; i < B.n; ++i)
    for (int j = 0; j < B.n; ++j)
      for (int k = 0; k < B.n; ++k)
        for (int l = 0; l < B.n; ++l)
          c.at(A.n + i, A.n + j, A.n + k, A.n + l) = B.bracket.at(i, j, k, l);
  Mat alpha(n, n), beta(n, n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      alpha(i, j) = A.alpha(i, j);
      beta(i, j) = A.beta(i, j);
    }
  for (int i = 0; i < B.n; ++i)
    for (int j = 0; j < B.n; ++j) {
      alpha(A.n + i, A.n + j) = B.alpha(i, j);
      beta(A.n + i, A.n + j) = B.beta(i, j);
    }
  return ThreeBihomLieAlgebra(n, std::move(c), std::move(alpha), std::move(beta));
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          if (b(p, q) != 0) out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return out;
}

}  // namespace bihom
