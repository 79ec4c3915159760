#include "bihom/representations.hpp"

#include "bihom/errors.hpp"
#include "tables.hpp"

namespace bihom {

using detail::combine_first;
using detail::combine_second;
using detail::flatten;
using detail::rho_table;

Representation::Representation(int n, int m, std::vector<Mat> rho_table_in, Mat alpha_m,
                               Mat beta_m)
    : n_(n), m_(m), rho_(std::move(rho_table_in)), alpha_m_(std::move(alpha_m)),
      beta_m_(std::move(beta_m)) {
  if (int(rho_.size()) != n_ * n_) throw DimensionMismatch("rho table size");
  for (const Mat& r : rho_)
    if (r.rows() != m_ || r.cols() != m_) throw DimensionMismatch("rho entry shape");
  if (alpha_m_.rows() != m_ || alpha_m_.cols() != m_ || beta_m_.rows() != m_ ||
      beta_m_.cols() != m_)
    throw DimensionMismatch("module map shape");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j <= i; ++j)
      if (!(rho(i, j) + rho(j, i)).is_zero())
        throw PreconditionFailed("rho table is not skew");
}

Representation::Representation(int n, int m, Mat alpha_m, Mat beta_m)
    : Representation(n, m, std::vector<Mat>(size_t(n) * n, Mat(m, m)),
                     std::move(alpha_m), std::move(beta_m)) {}

void Representation::set_rho(int i, int j, const Mat& value) {
  if (value.rows() != m_ || value.cols() != m_) throw DimensionMismatch("rho entry shape");
  if (i == j) {
    if (!value.is_zero()) throw PreconditionFailed("rho(i,i) must vanish");
    return;
  }
  rho_[size_t(i) * n_ + j] = value;
  rho_[size_t(j) * n_ + i] = -value;
}

Mat Representation::rho_eval(const Vec& x, const Vec& y) const {
  if (int(x.size()) != n_ || int(y.size()) != n_)
    throw DimensionMismatch("rho evaluation");
  Mat acc(m_, m_);
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      Rat f = x[i] * y[j];
      if (f != 0) acc = acc + rho(i, j) * f;
    }
  }
  return acc;
}

AxiomReport check_representation(const ThreeBihomLieAlgebra& A, const Representation& R) {
  if (R.algebra_dim() != A.n) throw DimensionMismatch("representation over wrong algebra");
  const int n = A.n, m = R.module_dim();
  const Mat& am = R.alpha_m();
  const Mat& bm = R.beta_m();
  AxiomReport rep;

  rep.axioms.push_back("rep.commutation");
  if (am * bm != bm * am)
    rep.add("rep.commutation", {}, flatten(am * bm), flatten(bm * am));

  rep.axioms.push_back("rep.skew");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (!(R.rho(i, j) + R.rho(j, i)).is_zero())
        rep.add("rep.skew", {i + 1, j + 1}, flatten(R.rho(i, j)), flatten(-R.rho(j, i)));

  Mat ab = A.alpha * A.beta;
  Mat id = Mat::identity(n);
  std::vector<Mat> ra = rho_table(R, A.alpha, A.alpha);  // rho(a u, a v)
  std::vector<Mat> rb = rho_table(R, A.beta, A.beta);    // rho(b u, b v)
  std::vector<Mat> rab = rho_table(R, ab, ab);           // rho(ab u, ab v)
  std::vector<Mat> r_ib = rho_table(R, id, A.beta);      // rho(e_p, b e_y)
  std::vector<Mat> r_bi = rho_table(R, A.beta, id);      // rho(b e_x, e_q)
  std::vector<Mat> r_ab_b = rho_table(R, ab, A.beta);    // rho(ab e_v, b e_x)
  std::vector<Mat> r_b_ab = rho_table(R, A.beta, ab);    // rho(b e_x, ab e_u)
  std::vector<Mat> r_ai = rho_table(R, A.alpha, id);     // rho(a e_u, e_y)
  auto at = [n](const std::vector<Mat>& t, int u, int v) -> const Mat& {
    return t[size_t(u) * n + v];
  };

  rep.axioms.push_back("rep.1");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      Mat lhs = at(ra, u, v) * am, rhs = am * R.rho(u, v);
      if (lhs != rhs) rep.add("rep.1", {u + 1, v + 1}, flatten(lhs), flatten(rhs));
    }

  rep.axioms.push_back("rep.2");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      Mat lhs = at(rb, u, v) * bm, rhs = bm * R.rho(u, v);
      if (lhs != rhs) rep.add("rep.2", {u + 1, v + 1}, flatten(lhs), flatten(rhs));
      Mat printed = at(rb, u, u) * bm;  // the source text repeats the u slot
      if (printed != rhs)
        rep.add_note("rep.2.printed", {u + 1, v + 1}, flatten(printed), flatten(rhs));
    }

  // Columns of [b e_u, b e_v, e_x], consumed by a rho slot below.
  TriTensor br_bbi = A.bracket.compose_inputs(A.beta, A.beta, id);

  rep.axioms.push_back("rep.3");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          Mat lhs = at(rab, u, v) * R.rho(x, y);
          Mat rhs = at(rb, x, y) * at(ra, u, v) +
                    combine_first(r_ib, n, m, br_bbi.col(u, v, x), y) * bm +
                    combine_second(r_bi, n, m, x, br_bbi.col(u, v, y)) * bm;
          if (lhs != rhs)
            rep.add("rep.3", {u + 1, v + 1, x + 1, y + 1}, flatten(lhs), flatten(rhs));
        }

  rep.axioms.push_back("rep.4");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          Mat lhs = combine_first(r_ib, n, m, br_bbi.col(u, v, x), y) * bm;
          Mat rhs = at(r_ab_b, v, x) * at(r_ai, u, y) +
                    at(r_b_ab, x, u) * at(r_ai, v, y) + at(rab, u, v) * R.rho(x, y);
          if (lhs != rhs)
            rep.add("rep.4", {u + 1, v + 1, x + 1, y + 1}, flatten(lhs), flatten(rhs));
          Mat printed = combine_first(r_ib, n, m, br_bbi.col(u, u, x), y) * bm;
          if (printed != rhs)
            rep.add_note("rep.4.printed", {u + 1, v + 1, x + 1, y + 1}, flatten(printed),
                         flatten(rhs));
        }
  return rep;
}

RepWithReport adjoint_rep(const ThreeBihomLieAlgebra& A) {
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
  Representation rep(n, n, std::move(table), A.alpha, A.beta);
  AxiomReport report = check_representation(A, rep);
  return {std::move(rep), std::move(report)};
}

ThreeBihomLieAlgebra semidirect_product(const ThreeBihomLieAlgebra& A,
                                        const Representation& R) {
  if (R.algebra_dim() != A.n) throw DimensionMismatch("representation over wrong algebra");
  if (!check_representation(A, R).passed())
    throw PreconditionFailed("representation conditions fail");
  if (rank(A.alpha) != A.n) throw PreconditionFailed("alpha is not invertible");
  const int n = A.n, m = R.module_dim();
  if (rank(R.beta_m()) != m) throw PreconditionFailed("beta_M is not invertible");

  Mat w = invert(A.alpha) * A.beta;               // a^-1 b
  Mat vmap = R.alpha_m() * invert(R.beta_m());    // alpha_M beta_M^-1
  std::vector<Mat> rw = rho_table(R, Mat::identity(n), w);  // rho(e_i, w e_k)
  auto at = [n](const std::vector<Mat>& t, int u, int v) -> const Mat& {
    return t[size_t(u) * n + v];
  };

  const int d = n + m;
  TriTensor c(d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) c.at(i, j, k, l) = A.bracket.at(i, j, k, l);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Mat& rij = R.rho(i, j);
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) c.at(i, j, n + k, n + l) = rij(l, k);
    }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Mat neg = -(at(rw, i, k) * vmap);  // applied to the middle-slot module vector
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) c.at(i, n + j, k, n + l) = neg(l, j);
      Mat pos = at(rw, i, k) * vmap;     // first-slot module vector, i plays v
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) c.at(n + j, i, k, n + l) = pos(l, j);
    }

  Mat alpha(d, d), beta(d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      alpha(i, j) = A.alpha(i, j);
      beta(i, j) = A.beta(i, j);
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      alpha(n + i, n + j) = R.alpha_m()(i, j);
      beta(n + i, n + j) = R.beta_m()(i, j);
    }
  return ThreeBihomLieAlgebra(d, std::move(c), std::move(alpha), std::move(beta));
}

AxiomReport check_cocycle(const ThreeBihomLieAlgebra& A, const Representation& R,
                          const Cocycle& theta) {
  if (R.algebra_dim() != A.n) throw DimensionMismatch("representation over wrong algebra");
  if (theta.dim_in() != A.n || theta.dim_out() != R.module_dim())
    throw DimensionMismatch("cocycle shape");
  const int n = A.n, m = R.module_dim();
  AxiomReport rep;

  rep.axioms.push_back("cocycle.1");
  rep.axioms.push_back("cocycle.2");
  {
    TriTensor lhs = theta.compose_output(R.alpha_m());
    TriTensor rhs = theta.compose_inputs(A.alpha, A.alpha, A.alpha);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vec l = lhs.col(i, j, k), r = rhs.col(i, j, k);
          if (l != r) rep.add("cocycle.1", {i + 1, j + 1, k + 1}, std::move(l), std::move(r));
        }
    lhs = theta.compose_output(R.beta_m());
    rhs = theta.compose_inputs(A.beta, A.beta, A.beta);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vec l = lhs.col(i, j, k), r = rhs.col(i, j, k);
          if (l != r) rep.add("cocycle.2", {i + 1, j + 1, k + 1}, std::move(l), std::move(r));
        }
  }

  TriTensor th1 = theta.compose_inputs(A.beta, A.beta, A.alpha);
  rep.axioms.push_back("cocycle.skew.12");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec l = th1.col(i, j, k);
        Vec r = Rat(-1) * th1.col(j, i, k);
        if (l != r)
          rep.add("cocycle.skew.12", {i + 1, j + 1, k + 1}, std::move(l), std::move(r));
      }
  rep.axioms.push_back("cocycle.skew.23");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec l = th1.col(i, j, k);
        Vec r = Rat(-1) * th1.col(i, k, j);
        if (l != r)
          rep.add("cocycle.skew.23", {i + 1, j + 1, k + 1}, std::move(l), std::move(r));
      }

  rep.axioms.push_back("cocycle.identity");
  Mat beta2 = A.beta * A.beta;
  TriTensor th2 = theta.compose_inputs(beta2, beta2, Mat::identity(n));
  TriTensor t1 = A.bracket.compose_inputs(A.beta, A.beta, A.alpha);
  std::vector<Mat> rb2 = rho_table(R, beta2, beta2);
  std::vector<Vec> t1c(size_t(n) * n * n), th1c(size_t(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        t1c[(size_t(i) * n + j) * n + k] = t1.col(i, j, k);
        th1c[(size_t(i) * n + j) * n + k] = th1.col(i, j, k);
      }
  // term(a,b; x,y,z) = theta(b^2 a, b^2 b, [b x, b y, a z])
  //                  + rho(b^2 a, b^2 b) theta(b x, b y, a z)
  auto term = [&](int a, int b, int x, int y, int z) {
    const Vec& w = t1c[(size_t(x) * n + y) * n + z];
    Vec out(m, Rat(0));
    for (int mm = 0; mm < n; ++mm) {
      if (w[mm] == 0) continue;
      for (int l = 0; l < m; ++l) {
        const Rat& c = th2.at(a, b, mm, l);
        if (c != 0) out[l] += w[mm] * c;
      }
    }
    return out + rb2[size_t(a) * n + b] * th1c[(size_t(x) * n + y) * n + z];
  };
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2)
      for (int x3 = 0; x3 < n; ++x3)
        for (int x4 = 0; x4 < n; ++x4)
          for (int x5 = 0; x5 < n; ++x5) {
            Vec lhs = term(x1, x2, x3, x4, x5);
            Vec rhs = term(x4, x5, x1, x2, x3) - term(x3, x5, x1, x2, x4) +
                      term(x3, x4, x1, x2, x5);
            if (lhs != rhs)
              rep.add("cocycle.identity", {x1 + 1, x2 + 1, x3 + 1, x4 + 1, x5 + 1},
                      std::move(lhs), std::move(rhs));
          }
  return rep;
}

ThreeBihomLieAlgebra t_theta_extension(const ThreeBihomLieAlgebra& A,
                                       const Representation& R, const Cocycle& theta) {
  if (!check_cocycle(A, R, theta).passed())
    throw PreconditionFailed("cocycle conditions fail");
  ThreeBihomLieAlgebra ext = semidirect_product(A, R);
  const int n = A.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < theta.dim_out(); ++l)
          ext.bracket.at(i, j, k, n + l) = theta.at(i, j, k, l);
  return ext;
}

Cocycle coboundary_cocycle(const ThreeBihomLieAlgebra& A, const Representation& R,
                           const Mat& f) {
  const int n = A.n, m = R.module_dim();
  if (R.algebra_dim() != n) throw DimensionMismatch("representation over wrong algebra");
  if (f.rows() != m || f.cols() != n) throw DimensionMismatch("coboundary map shape");
  if (rank(A.alpha) != n) throw PreconditionFailed("alpha is not invertible");
  if (rank(A.beta) != n) throw PreconditionFailed("beta is not invertible");
  if (f * A.alpha != R.alpha_m() * f)
    throw PreconditionFailed("f does not intertwine alpha");
  if (f * A.beta != R.beta_m() * f)
    throw PreconditionFailed("f does not intertwine beta");

  Mat w = invert(A.alpha) * A.beta;   // a^-1 b
  Mat u = A.alpha * invert(A.beta);   // a b^-1
  Mat fu = f * u;
  std::vector<Mat> rw = rho_table(R, Mat::identity(n), w);
  Cocycle theta(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec val = f * A.bracket.col(i, j, k);
        val = val - R.rho(i, j) * f.col(k);
        val = val + rw[size_t(i) * n + k] * fu.col(j);
        val = val - rw[size_t(j) * n + k] * fu.col(i);
        theta.set_col(i, j, k, val);
      }
  return theta;
}

Cocycle cocycle_sum(const Cocycle& a, const Cocycle& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out())
    throw DimensionMismatch("cocycle sum");
  return a + b;
}

MapWithReport extension_isomorphism(const ThreeBihomLieAlgebra& A,
                                    const Representation& R, const Cocycle& theta,
                                    const Mat& f) {
  Cocycle shifted = cocycle_sum(theta, coboundary_cocycle(A, R, f));
  ThreeBihomLieAlgebra ext1 = t_theta_extension(A, R, theta);
  ThreeBihomLieAlgebra ext2 = t_theta_extension(A, R, shifted);
  const int n = A.n, m = R.module_dim();
  Mat sigma(n + m, n + m);
  for (int i = 0; i < n; ++i) sigma(i, i) = 1;
  for (int i = 0; i < m; ++i) sigma(n + i, n + i) = 1;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) sigma(n + r, c) = f(r, c);
  AxiomReport report;
  report.axioms.push_back("sigma.invertible");
  if (rank(sigma) != n + m)
    report.add("sigma.invertible", {}, {Rat(rank(sigma))}, {Rat(n + m)});
  report.merge(is_morphism(sigma, ext1, ext2));
  return {std::move(sigma), std::move(report)};
}

}  // namespace bihom
