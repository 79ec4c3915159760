#pragma once

#include "bihom/report.hpp"
#include "bihom/tensor.hpp"

namespace bihom {

/// Finite-dimensional algebra with a trilinear bracket and two commuting
/// structure maps, given by structure constants on a fixed basis:
/// [e_i, e_j, e_k] = sum_l bracket(i,j,k,l) e_l.
struct ThreeBihomLieAlgebra {
  int n = 0;
  TriTensor bracket;  // dim_in == dim_out == n
  Mat alpha, beta;

  ThreeBihomLieAlgebra() = default;
  ThreeBihomLieAlgebra(int dim, TriTensor br, Mat a, Mat b);

  Vec apply_bracket(const Vec& x, const Vec& y, const Vec& z) const {
    return bracket.eval(x, y, z);
  }
};

/// Binary counterpart produced by induced_binary.
struct BihomLieAlgebra {
  int n = 0;
  BiTensor bracket;
  Mat alpha, beta;

  BihomLieAlgebra() = default;
  BihomLieAlgebra(int dim, BiTensor br, Mat a, Mat b);
};

/// Ternary algebra with a totally associative-type product (tensor factor).
struct TotallyBihomAssocAlgebra {
  int n = 0;
  TriTensor product;
  Mat alpha, beta;

  TotallyBihomAssocAlgebra() = default;
  TotallyBihomAssocAlgebra(int dim, TriTensor pr, Mat a, Mat b);
};

/// Full axiom scan for the ternary bracket structure. Axiom ids, in report
/// order:
///   commutation            alpha beta == beta alpha
///   multiplicativity.alpha alpha[x,y,z] == [alpha x, alpha y, alpha z]
///   multiplicativity.beta  likewise for beta
///   skew.12                [b x, b y, a z] == -[b y, b x, a z]
///   skew.23                [b x, b y, a z] == -[b x, b z, a y]
///   jacobi                 the five-variable identity, scanned over all
///                          n^5 basis tuples (u,v,x,y,z) lexicographically
AxiomReport check_three_bihom_lie(const ThreeBihomLieAlgebra& A);

/// Axioms for the binary structure: commutation, multiplicativity.alpha,
/// multiplicativity.beta, skew ([b x, a y] == -[b y, a x]), jacobi (cyclic
/// three-variable identity on [b^2 x, [b y, a z]]).
AxiomReport check_bihom_lie(const BihomLieAlgebra& A);

/// Axioms for the ternary product: commutation, multiplicativity.alpha,
/// multiplicativity.beta, assoc.1, assoc.2 (the two equalities of the total
/// associativity chain, scanned over n^5 tuples).
AxiomReport check_totally_assoc(const TotallyBihomAssocAlgebra& A);

/// Extra symmetry required of a tensor factor: b(x) b(y) a(z) invariant
/// under swapping x,y (tensor.sym.12) and y,z (tensor.sym.23).
AxiomReport check_tensor_condition(const TotallyBihomAssocAlgebra& A);

/// True iff alpha and beta are both invertible.
bool is_regular(const ThreeBihomLieAlgebra& A);

/// Basis of the common fixed space {x : alpha x == x and beta x == x}.
std::vector<Vec> fixed_points(const ThreeBihomLieAlgebra& A);

/// S must be linearly independent (else DependentSpanInput). Checks closure
/// of span S under the bracket (all three slots from S) and under alpha,
/// beta.
bool is_subalgebra(const ThreeBihomLieAlgebra& A, const std::vector<Vec>& S);

/// Ideal test: [s, y, z] in span S for s in S, y,z basis vectors, plus
/// alpha/beta stability.
bool is_ideal(const ThreeBihomLieAlgebra& A, const std::vector<Vec>& S);

/// Report on f: src -> dst being a morphism. Axiom ids: morphism.bracket
/// (witness (i,j,k)), morphism.alpha, morphism.beta (map identities).
AxiomReport is_morphism(const Mat& f, const ThreeBihomLieAlgebra& src,
                        const ThreeBihomLieAlgebra& dst);

/// Basis {(e_i, f e_i)} of the graph of f inside src (+) dst.
std::vector<Vec> graph_subspace(const Mat& f, const ThreeBihomLieAlgebra& src,
                                const ThreeBihomLieAlgebra& dst);

}  // namespace bihom
