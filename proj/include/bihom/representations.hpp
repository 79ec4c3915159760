#pragma once

#include "bihom/algebra.hpp"

namespace bihom {

/// Bilinear family rho: L x L -> gl(M) on basis pairs, skew in the pair,
/// together with commuting module maps. The skew pairing is a storage
/// invariant: rho(i,j) == -rho(j,i) holds exactly for every constructed
/// object (constructors validate or complete it).
class Representation {
 public:
  /// From the full n*n table (validated for skewness).
  Representation(int n, int m, std::vector<Mat> rho_table, Mat alpha_m, Mat beta_m);

  /// Empty (all-zero rho) representation; fill with set_rho.
  Representation(int n, int m, Mat alpha_m, Mat beta_m);

  int algebra_dim() const { return n_; }
  int module_dim() const { return m_; }

  const Mat& rho(int i, int j) const { return rho_[size_t(i) * n_ + j]; }
  /// Sets rho(i,j) and rho(j,i) = -value; i == j rejects nonzero values.
  void set_rho(int i, int j, const Mat& value);

  /// rho evaluated on arbitrary coordinate vectors (bilinear extension).
  Mat rho_eval(const Vec& x, const Vec& y) const;

  const Mat& alpha_m() const { return alpha_m_; }
  const Mat& beta_m() const { return beta_m_; }

 private:
  int n_ = 0, m_ = 0;
  std::vector<Mat> rho_;
  Mat alpha_m_, beta_m_;
};

/// Trilinear map L^3 -> M by components on basis triples.
using Cocycle = TriTensor;

/// Conditions on (M, rho, alpha_M, beta_M) over A. Axiom ids in order:
///   rep.commutation  alpha_M beta_M == beta_M alpha_M
///   rep.skew         stored skewness re-check
///   rep.1            rho(a u, a v) alpha_M == alpha_M rho(u, v)
///   rep.2            rho(b u, b v) beta_M == beta_M rho(u, v)
///   rep.3            the four-variable compatibility identity
///   rep.4            the second four-variable identity
/// The source text misprints (2) and (4) with a repeated u argument; the
/// corrected (u,v) forms are checked, and the literal printed forms are
/// evaluated into report notes (ids rep.2.printed / rep.4.printed).
AxiomReport check_representation(const ThreeBihomLieAlgebra& A, const Representation& R);

struct RepWithReport {
  Representation rep;
  AxiomReport report;
};

/// rho(u,v) = [u, v, .] on a regular algebra (else NotRegular), with module
/// maps (alpha, beta). Report: check_representation of the result.
RepWithReport adjoint_rep(const ThreeBihomLieAlgebra& A);

/// Algebra on L (+) M with bracket
///   [u+x, v+y, w+z] = [u,v,w] + rho(u,v) z
///                     - rho(u, a^-1 b w) (alpha_M beta_M^-1 y)
///                     + rho(v, a^-1 b w) (alpha_M beta_M^-1 x)
/// and maps alpha (+) alpha_M, beta (+) beta_M. Preconditions: the
/// representation report passes, alpha invertible, beta_M invertible.
ThreeBihomLieAlgebra semidirect_product(const ThreeBihomLieAlgebra& A,
                                        const Representation& R);

/// Cocycle conditions over (A, R). Axiom ids: cocycle.1, cocycle.2
/// (equivariance), cocycle.skew.12, cocycle.skew.23, cocycle.identity
/// (five-variable identity, witness (x1..x5)).
AxiomReport check_cocycle(const ThreeBihomLieAlgebra& A, const Representation& R,
                          const Cocycle& theta);

/// Semidirect bracket plus theta(u,v,w) in the module component.
/// Preconditions: semidirect's plus check_cocycle passes.
ThreeBihomLieAlgebra t_theta_extension(const ThreeBihomLieAlgebra& A,
                                       const Representation& R, const Cocycle& theta);

/// theta_f(x,y,z) = f[x,y,z] - rho(x,y) f(z) + rho(x, a^-1 b z) f(a b^-1 y)
///                - rho(y, a^-1 b z) f(a b^-1 x)
/// for f: L -> M intertwining (f alpha == alpha_M f, f beta == beta_M f)
/// over a regular-maps algebra (alpha, beta invertible).
Cocycle coboundary_cocycle(const ThreeBihomLieAlgebra& A, const Representation& R,
                           const Mat& f);

Cocycle cocycle_sum(const Cocycle& a, const Cocycle& b);

struct MapWithReport {
  Mat map;
  AxiomReport report;
};

/// sigma(v + x) = v + f(v) + x as a block matrix [[I,0],[f,I]], checked to be
/// an isomorphism from the theta-extension to the (theta + theta_f)-extension.
/// Axiom ids: sigma.invertible plus the morphism report.
MapWithReport extension_isomorphism(const ThreeBihomLieAlgebra& A,
                                    const Representation& R, const Cocycle& theta,
                                    const Mat& f);

}  // namespace bihom
