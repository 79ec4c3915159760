#pragma once

#include "bihom/algebra.hpp"

namespace bihom {

/// Report on D being a derivation of weight (k,l), i.e. D commutes with
/// alpha and beta and satisfies the Leibniz rule with g = alpha^k beta^l:
///   D[u,v,w] == [D u, g v, g w] + [g u, D v, g w] + [g u, g v, D w].
/// Axiom ids: derivation.commute.alpha, derivation.commute.beta,
/// derivation.leibniz (witness (u,v,w)).
AxiomReport is_derivation(const Mat& d, const ThreeBihomLieAlgebra& A, int k, int l);

struct DerivationSpace {
  int k = 0, l = 0;
  std::vector<Mat> basis;
  int dim() const { return int(basis.size()); }
};

/// Solves the linear system cutting out all weight-(k,l) derivations;
/// deterministic basis (kernel of the stacked constraint matrix, matrix
/// entries flattened row-major).
DerivationSpace derivation_space(const ThreeBihomLieAlgebra& A, int k, int l);

/// Inner map w -> [u1, u2, alpha^k beta^l w] for common fixed points u1, u2
/// of a regular algebra. The defining exponents are (k,l); the map is
/// expected to be a derivation of weight (k, l+1), which callers verify
/// per instance with is_derivation.
Mat inner_derivation(const ThreeBihomLieAlgebra& A, const Vec& u1, const Vec& u2,
                     int k, int l);

/// Commutator d1 d2 - d2 d1.
Mat derivation_bracket(const Mat& d1, const Mat& d2);

}  // namespace bihom
