#pragma once

#include "bihom/representations.hpp"

namespace bihom {

/// Bilinear form by its Gram matrix: f(x,y) = x^T gram y.
struct BilinearForm {
  Mat gram;
  Rat eval(const Vec& x, const Vec& y) const;
};

/// Algebra together with a form expected to satisfy check_quadratic.
struct QuadraticAlgebra {
  ThreeBihomLieAlgebra algebra;
  BilinearForm form;
};

/// Axiom ids in order:
///   quadratic.nondegenerate   rank(gram) == n
///   quadratic.symmetric       gram(i,j) == gram(j,i)
///   quadratic.invariance      f([b x1, b x2, a x3], a x4) == -f(a x3, [b x1, b x2, a x4])
///   quadratic.selfadjoint.alpha  f(a x, y) == f(x, a y)
///   quadratic.selfadjoint.beta   f(b x, y) == f(x, b y)
AxiomReport check_quadratic(const ThreeBihomLieAlgebra& A, const BilinearForm& f);

/// Dual representation on M*: rho~(i,j) = -rho(i,j)^T with transposed module
/// maps. The report evaluates the four conditions on rho that are equivalent
/// to check_representation(A, dual) passing, with identical witness tuples:
///   dual.1  alpha_M rho(a x, a y) == rho(x,y) alpha_M
///   dual.2  beta_M rho(b x, b y) == rho(x,y) beta_M
///   dual.3  rho(x,y) rho(ab u, ab v) == rho(a u, a v) rho(b x, b y)
///             - beta_M rho([b u, b v, x], b y) - beta_M rho(b x, [b u, b v, y])
///   dual.4  beta_M rho([b u, b v, x], b y) == -rho(a u, y) rho(ab v, b x)
///             - rho(a v, y) rho(b x, ab u) - rho(x,y) rho(ab u, ab v)
/// The source text prints the first product of (3) as rho(b u, b v); its own
/// derivation uses rho(b x, b y), which is what makes the equivalence exact.
/// The printed variant is evaluated into notes (id dual.3.printed).
RepWithReport dual_representation(const ThreeBihomLieAlgebra& A, const Representation& R);

/// Dual of the adjoint: rho(i,j) = -ad(i,j)^T on L* with maps (a^T, b^T).
/// Requires regular maps. Report: the dual.1-4 conditions for ad.
RepWithReport coadjoint_rep(const ThreeBihomLieAlgebra& A);

/// Derived series L(0) = L, L(k+1) = [L(k), L(k), L] as a list of bases, and
/// central descending series L0 = L, L{k+1} = [Lk, L, L]. Both stop at the
/// zero space, at stabilization, or after max_steps brackets.
std::vector<std::vector<Vec>> derived_series(const ThreeBihomLieAlgebra& A, int max_steps);
std::vector<std::vector<Vec>> descending_series(const ThreeBihomLieAlgebra& A,
                                                int max_steps);
bool is_solvable(const ThreeBihomLieAlgebra& A);
bool is_nilpotent(const ThreeBihomLieAlgebra& A);

/// Symmetry condition a dual-valued cocycle must satisfy for the hyperbolic
/// form on the extension to be invariant:
///   theta(b x1, b x2, a x3)(a x4) + theta(b x1, b x2, a x4)(a x3) == 0.
/// Axiom id tstar.symmetry; the differently-indexed printed variant of the
/// condition goes to notes (id tstar.symmetry.printed).
AxiomReport theta_symmetry_report(const ThreeBihomLieAlgebra& A, const Cocycle& theta);

/// Extension of A by its coadjoint representation and theta, carrying the
/// hyperbolic form (Gram [[0,I],[I,0]] in the L, L* basis). Preconditions in
/// order: regular maps; coadjoint conditions pass; cocycle conditions pass;
/// tstar.symmetry passes. Each failure throws a named error.
QuadraticAlgebra t_star_extension(const ThreeBihomLieAlgebra& A, const Cocycle& theta);

/// All x with f(x, s) = 0 for every s in the span (kernel basis).
std::vector<Vec> orthogonal_complement(const BilinearForm& f, const std::vector<Vec>& s);
/// f vanishes on all pairs from the span.
bool is_isotropic(const BilinearForm& f, const std::vector<Vec>& s);

/// Certifies [b(I), b(L), a(I)] = 0 for a half-dimensional isotropic ideal I
/// of a quadratic algebra with invertible alpha (preconditions enforced).
bool ideal_bracket_vanishes(const ThreeBihomLieAlgebra& A, const BilinearForm& f,
                            const std::vector<Vec>& ideal);

struct Reconstruction {
  ThreeBihomLieAlgebra base;   // quotient by the ideal, in complement coordinates
  Cocycle theta;               // dual-valued cocycle recovered from the form
  Mat phi;                     // coordinate isomorphism onto the extension
  QuadraticAlgebra extension;  // t_star_extension(base, theta)
  AxiomReport report;          // is_isometry(phi, Q, extension)
};

/// Splits Q along a half-dimensional isotropic ideal: picks an isotropic
/// complement by hyperbolic-pair completion (greedy basis extension in index
/// order, corrected against the form's dual basis of the ideal), forms the
/// quotient algebra on the complement coordinates, reads theta off the
/// ideal component of complement brackets, and certifies that phi is an
/// isometric isomorphism onto t_star_extension(base, theta).
Reconstruction reconstruct(const QuadraticAlgebra& Q, const std::vector<Vec>& ideal);

/// phi an invertible algebra morphism q1 -> q2 preserving the forms:
/// isometry.invertible, morphism.*, isometry.form (phi^T G2 phi == G1).
AxiomReport is_isometry(const Mat& phi, const QuadraticAlgebra& q1,
                        const QuadraticAlgebra& q2);

}  // namespace bihom
