#include "bihom/quadratic.hpp"

#include "bihom/errors.hpp"
#include "tables.hpp"

namespace bihom {

using detail::combine_first;
using detail::combine_second;
using detail::flatten;
using detail::rho_table;

Rat BilinearForm::eval(const Vec& x, const Vec& y) const {
  if (int(x.size()) != gram.rows() || int(y.size()) != gram.cols())
    throw DimensionMismatch("form evaluation");
  return dot(x, gram * y);
}

AxiomReport check_quadratic(const ThreeBihomLieAlgebra& A, const BilinearForm& f) {
  const int n = A.n;
  const Mat& g = f.gram;
  if (g.rows() != n || g.cols() != n) throw DimensionMismatch("gram matrix shape");
  AxiomReport rep;

  rep.axioms.push_back("quadratic.nondegenerate");
  int r = rank(g);
  if (r != n) rep.add("quadratic.nondegenerate", {}, {Rat(r)}, {Rat(n)});

  rep.axioms.push_back("quadratic.symmetric");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g(i, j) != g(j, i))
        rep.add("quadratic.symmetric", {i + 1, j + 1}, {g(i, j)}, {g(j, i)});

  rep.axioms.push_back("quadratic.invariance");
  TriTensor t1 = A.bracket.compose_inputs(A.beta, A.beta, A.alpha);
  Mat ga = g * A.alpha;                // column x4: g . (a e_x4)
  Mat gta = g.transpose() * A.alpha;   // column x3: g^T . (a e_x3)
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2)
      for (int x3 = 0; x3 < n; ++x3) {
        Vec t = t1.col(x1, x2, x3);
        for (int x4 = 0; x4 < n; ++x4) {
          Rat lhs = dot(t, ga.col(x4));
          Rat rhs = -dot(t1.col(x1, x2, x4), gta.col(x3));
          if (lhs != rhs)
            rep.add("quadratic.invariance", {x1 + 1, x2 + 1, x3 + 1, x4 + 1}, {lhs},
                    {rhs});
        }
      }

  rep.axioms.push_back("quadratic.selfadjoint.alpha");
  Mat atg = A.alpha.transpose() * g;
  if (atg != ga) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (atg(i, j) != ga(i, j))
          rep.add("quadratic.selfadjoint.alpha", {i + 1, j + 1}, {atg(i, j)},
                  {ga(i, j)});
  }

  rep.axioms.push_back("quadratic.selfadjoint.beta");
  Mat btg = A.beta.transpose() * g;
  Mat gb = g * A.beta;
  if (btg != gb) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (btg(i, j) != gb(i, j))
          rep.add("quadratic.selfadjoint.beta", {i + 1, j + 1}, {btg(i, j)}, {gb(i, j)});
  }
  return rep;
}

RepWithReport dual_representation(const ThreeBihomLieAlgebra& A, const Representation& R) {
  if (R.algebra_dim() != A.n) throw DimensionMismatch("representation over wrong algebra");
  const int n = A.n, m = R.module_dim();

  std::vector<Mat> dual_table(size_t(n) * n, Mat(m, m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dual_table[size_t(i) * n + j] = -R.rho(i, j).transpose();
  Representation dual(n, m, std::move(dual_table), R.alpha_m().transpose(),
                      R.beta_m().transpose());

  const Mat& am = R.alpha_m();
  const Mat& bm = R.beta_m();
  Mat ab = A.alpha * A.beta;
  Mat id = Mat::identity(n);
  std::vector<Mat> pa = rho_table(R, A.alpha, A.alpha);
  std::vector<Mat> pb = rho_table(R, A.beta, A.beta);
  std::vector<Mat> pab = rho_table(R, ab, ab);
  std::vector<Mat> p_ib = rho_table(R, id, A.beta);
  std::vector<Mat> p_bi = rho_table(R, A.beta, id);
  std::vector<Mat> p_ab_b = rho_table(R, ab, A.beta);
  std::vector<Mat> p_b_ab = rho_table(R, A.beta, ab);
  std::vector<Mat> p_ai = rho_table(R, A.alpha, id);
  auto at = [n](const std::vector<Mat>& t, int u, int v) -> const Mat& {
    return t[size_t(u) * n + v];
  };
  TriTensor br_bbi = A.bracket.compose_inputs(A.beta, A.beta, id);

  AxiomReport rep;
  rep.axioms.push_back("dual.1");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Mat lhs = am * at(pa, x, y), rhs = R.rho(x, y) * am;
      if (lhs != rhs) rep.add("dual.1", {x + 1, y + 1}, flatten(lhs), flatten(rhs));
    }
  rep.axioms.push_back("dual.2");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Mat lhs = bm * at(pb, x, y), rhs = R.rho(x, y) * bm;
      if (lhs != rhs) rep.add("dual.2", {x + 1, y + 1}, flatten(lhs), flatten(rhs));
    }

  rep.axioms.push_back("dual.3");
  rep.axioms.push_back("dual.4");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          Mat bp1 = bm * combine_first(p_ib, n, m, br_bbi.col(u, v, x), y);
          Mat bp2 = bm * combine_second(p_bi, n, m, x, br_bbi.col(u, v, y));
          Mat lhs3 = R.rho(x, y) * at(pab, u, v);
          Mat rhs3 = at(pa, u, v) * at(pb, x, y) - bp1 - bp2;
          if (lhs3 != rhs3)
            rep.add("dual.3", {u + 1, v + 1, x + 1, y + 1}, flatten(lhs3), flatten(rhs3));
          Mat printed = at(pa, u, v) * at(pb, u, v) - bp1 - bp2;
          if (lhs3 != printed)
            rep.add_note("dual.3.printed", {u + 1, v + 1, x + 1, y + 1}, flatten(lhs3),
                         flatten(printed));
          Mat rhs4 = -(at(p_ai, u, y) * at(p_ab_b, v, x)) -
                     at(p_ai, v, y) * at(p_b_ab, x, u) - R.rho(x, y) * at(pab, u, v);
          if (bp1 != rhs4)
            rep.add("dual.4", {u + 1, v + 1, x + 1, y + 1}, flatten(bp1), flatten(rhs4));
        }
  return {std::move(dual), std::move(rep)};
}

RepWithReport coadjoint_rep(const ThreeBihomLieAlgebra& A) {
  if (!is_regular(A)) throw NotRegular();
  const int n = A.n;
  std::vector<Mat> table(size_t(n) * n, Mat(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat r(n, n);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) r(l, k) = A.bracket.at(i, j, k, l);
      table[size_t(i) * n + j] = std::move(r);
    }
  Representation ad(n, n, std::move(table), A.alpha, A.beta);
  return dual_representation(A, ad);
}

namespace {

std::vector<std::vector<Vec>> bracket_series(const ThreeBihomLieAlgebra& A, int max_steps,
                                             bool derived) {
  const int n = A.n;
  std::vector<std::vector<Vec>> members;
  std::vector<Vec> cur;
  for (int i = 0; i < n; ++i) cur.push_back(unit_vec(n, i));
  members.push_back(cur);
  for (int step = 0; step < max_steps; ++step) {
    RowSpan next;
    if (derived) {
      for (const Vec& a : cur)
        for (const Vec& b : cur)
          for (int k = 0; k < n; ++k) next.add(A.bracket.eval(a, b, unit_vec(n, k)));
    } else {
      for (const Vec& a : cur)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            next.add(A.bracket.eval(a, unit_vec(n, j), unit_vec(n, k)));
    }
    bool stable = next.dim() == int(cur.size());
    cur = next.basis();
    members.push_back(cur);
    if (cur.empty() || stable) break;
  }
  return members;
}

}  // namespace

std::vector<std::vector<Vec>> derived_series(const ThreeBihomLieAlgebra& A, int max_steps) {
  return bracket_series(A, max_steps, true);
}

std::vector<std::vector<Vec>> descending_series(const ThreeBihomLieAlgebra& A,
                                                int max_steps) {
  return bracket_series(A, max_steps, false);
}

bool is_solvable(const ThreeBihomLieAlgebra& A) {
  return derived_series(A, A.n + 1).back().empty();
}

bool is_nilpotent(const ThreeBihomLieAlgebra& A) {
  return descending_series(A, A.n + 1).back().empty();
}

AxiomReport theta_symmetry_report(const ThreeBihomLieAlgebra& A, const Cocycle& theta) {
  const int n = A.n;
  if (theta.dim_in() != n || theta.dim_out() != n)
    throw DimensionMismatch("dual-valued cocycle shape");
  TriTensor th1 = theta.compose_inputs(A.beta, A.beta, A.alpha);
  // value of theta(b x1, b x2, a x3) at the vector a e_x4
  auto val = [&](int x1, int x2, int x3, int x4) {
    return dot(th1.col(x1, x2, x3), A.alpha.col(x4));
  };
  AxiomReport rep;
  rep.axioms.push_back("tstar.symmetry");
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2)
      for (int x3 = 0; x3 < n; ++x3)
        for (int x4 = 0; x4 < n; ++x4) {
          Rat lhs = val(x1, x2, x3, x4);
          Rat rhs = -val(x1, x2, x4, x3);
          if (lhs != rhs)
            rep.add("tstar.symmetry", {x1 + 1, x2 + 1, x3 + 1, x4 + 1}, {lhs}, {rhs});
          // printed variant repeats x3 inside the second term
          Rat rhs_printed = -val(x1, x3, x3, x4);
          if (lhs != rhs_printed)
            rep.add_note("tstar.symmetry.printed", {x1 + 1, x2 + 1, x3 + 1, x4 + 1},
                         {lhs}, {rhs_printed});
        }
  return rep;
}

QuadraticAlgebra t_star_extension(const ThreeBihomLieAlgebra& A, const Cocycle& theta) {
  const int n = A.n;
  if (theta.dim_in() != n || theta.dim_out() != n)
    throw DimensionMismatch("dual-valued cocycle shape");
  if (!is_regular(A)) throw NotRegular();
  RepWithReport coad = coadjoint_rep(A);
  if (!coad.report.passed())
    throw PreconditionFailed("coadjoint representation conditions fail");
  if (!check_cocycle(A, coad.rep, theta).passed())
    throw PreconditionFailed("cocycle conditions fail");
  if (!theta_symmetry_report(A, theta).passed())
    throw PreconditionFailed("theta symmetry condition fails");
  ThreeBihomLieAlgebra ext = t_theta_extension(A, coad.rep, theta);
  Mat gram(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    gram(i, n + i) = 1;
    gram(n + i, i) = 1;
  }
  return {std::move(ext), BilinearForm{std::move(gram)}};
}

std::vector<Vec> orthogonal_complement(const BilinearForm& f, const std::vector<Vec>& s) {
  const int n = f.gram.rows();
  RowSpan span;
  for (const Vec& v : s)
    if (!span.add(v)) throw DependentSpanInput();
  Mat rows(int(s.size()), n);
  for (int i = 0; i < int(s.size()); ++i) {
    Vec gs = f.gram * s[i];
    for (int j = 0; j < n; ++j) rows(i, j) = gs[j];
  }
  return kernel_basis(rows);
}

bool is_isotropic(const BilinearForm& f, const std::vector<Vec>& s) {
  for (const Vec& a : s)
    for (const Vec& b : s)
      if (f.eval(a, b) != 0) return false;
  return true;
}

bool ideal_bracket_vanishes(const ThreeBihomLieAlgebra& A, const BilinearForm& f,
                            const std::vector<Vec>& ideal) {
  if (!is_ideal(A, ideal)) throw PreconditionFailed("input span is not an ideal");
  if (!is_isotropic(f, ideal)) throw PreconditionFailed("ideal is not isotropic");
  if (2 * int(ideal.size()) != A.n)
    throw PreconditionFailed("ideal dimension is not half the algebra dimension");
  if (rank(A.alpha) != A.n) throw PreconditionFailed("alpha is not invertible");
  for (const Vec& i : ideal)
    for (int x = 0; x < A.n; ++x)
      for (const Vec& j : ideal)
        if (!is_zero(A.bracket.eval(A.beta * i, A.beta.col(x), A.alpha * j)))
          return false;
  return true;
}

Reconstruction reconstruct(const QuadraticAlgebra& Q, const std::vector<Vec>& ideal) {
  const ThreeBihomLieAlgebra& A = Q.algebra;
  const int full = A.n;
  if (full % 2 != 0) throw PreconditionFailed("algebra dimension is not even");
  const int n = full / 2;
  if (!check_quadratic(A, Q.form).passed())
    throw PreconditionFailed("quadratic form conditions fail");
  if (!is_ideal(A, ideal)) throw PreconditionFailed("input span is not an ideal");
  if (!is_isotropic(Q.form, ideal)) throw PreconditionFailed("ideal is not isotropic");
  if (int(ideal.size()) != n)
    throw PreconditionFailed("ideal dimension is not half the algebra dimension");
  if (!is_regular(A)) throw NotRegular();

  // Greedy complement candidates: standard basis vectors extending the ideal.
  RowSpan acc;
  for (const Vec& v : ideal) acc.add(v);
  std::vector<Vec> cand;
  for (int j = 0; j < full && int(cand.size()) < n; ++j) {
    Vec e = unit_vec(full, j);
    if (acc.add(e)) cand.push_back(e);
  }
  if (int(cand.size()) != n) throw NoIsotropicComplement();

  // Pairing of candidates against the ideal; its inverse gives the dual
  // basis i*_k inside the ideal with q(cand_j, i*_k) = delta_jk.
  Mat pair(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) pair(j, k) = Q.form.eval(cand[j], ideal[k]);
  Mat pair_inv;
  try {
    pair_inv = invert(pair);
  } catch (const SingularMatrix&) {
    throw NoIsotropicComplement();
  }
  std::vector<Vec> istar(n, Vec(full, Rat(0)));
  for (int k = 0; k < n; ++k)
    for (int t = 0; t < n; ++t)
      if (pair_inv(t, k) != 0) istar[k] = istar[k] + pair_inv(t, k) * ideal[t];

  // Hyperbolic correction: w_j = cand_j - 1/2 sum_k q(cand_j, cand_k) i*_k
  // is orthogonal to every other corrected vector (char 0).
  Rat half = rat(1, 2);
  std::vector<Vec> w(n);
  for (int j = 0; j < n; ++j) {
    Vec v = cand[j];
    for (int k = 0; k < n; ++k) {
      Rat qjk = Q.form.eval(cand[j], cand[k]);
      if (qjk != 0) v = v - (half * qjk) * istar[k];
    }
    w[j] = std::move(v);
  }
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      if (Q.form.eval(w[j], w[l]) != 0) throw NoIsotropicComplement();

  // Coordinates: columns (w | ideal); the first n coordinates of
  // basis_inv * z are the complement component, the rest the ideal one.
  std::vector<Vec> cols = w;
  cols.insert(cols.end(), ideal.begin(), ideal.end());
  Mat basis = Mat::from_columns(cols);
  Mat basis_inv;
  try {
    basis_inv = invert(basis);
  } catch (const SingularMatrix&) {
    throw NoIsotropicComplement();
  }

  // Quotient structure on the complement coordinates.
  Mat balpha(n, n), bbeta(n, n);
  for (int j = 0; j < n; ++j) {
    Vec ca = basis_inv * (A.alpha * w[j]);
    Vec cb = basis_inv * (A.beta * w[j]);
    for (int l = 0; l < n; ++l) {
      balpha(l, j) = ca[l];
      bbeta(l, j) = cb[l];
    }
  }
  Mat fi(n, n);  // fi(l,t) = q(ideal_t, w_l): the ideal-to-dual pairing
  for (int l = 0; l < n; ++l)
    for (int t = 0; t < n; ++t) fi(l, t) = Q.form.eval(ideal[t], w[l]);

  TriTensor bc(n, n);
  Cocycle theta(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Vec co = basis_inv * A.bracket.eval(w[a], w[b], w[c]);
        Vec p1(n, Rat(0));
        for (int l = 0; l < n; ++l) {
          bc.at(a, b, c, l) = co[l];
          p1[l] = co[n + l];
        }
        theta.set_col(a, b, c, fi * p1);
      }
  ThreeBihomLieAlgebra base(n, std::move(bc), std::move(balpha), std::move(bbeta));

  Mat blk(full, full);
  for (int i = 0; i < n; ++i) blk(i, i) = 1;
  for (int l = 0; l < n; ++l)
    for (int t = 0; t < n; ++t) blk(n + l, n + t) = fi(l, t);
  Mat phi = blk * basis_inv;

  QuadraticAlgebra ext = t_star_extension(base, theta);
  AxiomReport report = is_isometry(phi, Q, ext);
  return {std::move(base), std::move(theta), std::move(phi), std::move(ext),
          std::move(report)};
}

AxiomReport is_isometry(const Mat& phi, const QuadraticAlgebra& q1,
                        const QuadraticAlgebra& q2) {
  const int n1 = q1.algebra.n, n2 = q2.algebra.n;
  if (phi.rows() != n2 || phi.cols() != n1) throw DimensionMismatch("isometry shape");
  AxiomReport rep;
  rep.axioms.push_back("isometry.invertible");
  int r = rank(phi);
  if (n1 != n2 || r != n1) rep.add("isometry.invertible", {}, {Rat(r)}, {Rat(n1)});
  rep.merge(is_morphism(phi, q1.algebra, q2.algebra));
  rep.axioms.push_back("isometry.form");
  Mat pulled = phi.transpose() * q2.form.gram * phi;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      if (pulled(i, j) != q1.form.gram(i, j))
        rep.add("isometry.form", {i + 1, j + 1}, {pulled(i, j)}, {q1.form.gram(i, j)});
  return rep;
}

}  // namespace bihom
