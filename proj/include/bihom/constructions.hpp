#pragma once

#include "bihom/algebra.hpp"

namespace bihom {

/// True iff m is an algebra map for the trilinear structure t:
/// m t(x,y,z) == t(m x, m y, m z) on all basis triples.
bool is_multiplicative(const TriTensor& t, const Mat& m);

/// Twist of a ternary Lie algebra (alpha == beta == identity required) along
/// two multiplicative commuting maps a, b: new bracket (x,y,z) -> [a x, a y, b z],
/// structure maps (a, b). The input must pass the full checker with identity
/// maps; violations raise PreconditionFailed.
ThreeBihomLieAlgebra yau_twist(const ThreeBihomLieAlgebra& L, const Mat& a, const Mat& b);

/// General twist by additional multiplicative maps a2, b2 commuting pairwise
/// with each other and with the algebra's own maps (six commutations checked):
/// bracket' = bracket(a2 ., a2 ., b2 .), maps (alpha a2, beta b2).
ThreeBihomLieAlgebra twist(const ThreeBihomLieAlgebra& A, const Mat& a2, const Mat& b2);

/// twist(A, alpha^k, beta^k); resulting maps are alpha^{k+1}, beta^{k+1}.
ThreeBihomLieAlgebra power_twist(const ThreeBihomLieAlgebra& A, int k);

/// Tensor product of a ternary associative factor T (which must pass
/// check_totally_assoc and check_tensor_condition, with invertible alpha)
/// with a bracket algebra A. Basis ordering: e_i (x) f_j at 1-based index
/// (i-1)*dim(A)+j, i over T, j over A.
ThreeBihomLieAlgebra tensor_product(const TotallyBihomAssocAlgebra& T,
                                    const ThreeBihomLieAlgebra& A);

/// Binary bracket [x,y] = [a,x,y] for a common fixed point a of alpha and
/// beta (else NotFixedPoint), with the same structure maps.
BihomLieAlgebra induced_binary(const ThreeBihomLieAlgebra& A, const Vec& a);

/// Componentwise direct sum; A's basis first, then B's.
ThreeBihomLieAlgebra direct_sum(const ThreeBihomLieAlgebra& A,
                                const ThreeBihomLieAlgebra& B);

/// Kronecker product with A-index major: (i1*B.rows+i2, j1*B.cols+j2).
Mat kron(const Mat& a, const Mat& b);

}  // namespace bihom
