#include "bihom/algebra.hpp"

#include <algorithm>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

void require_square(const Mat& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch(what);
}

Vec negate(Vec v) {
  for (Rat& x : v) x = -x;
  return v;
}

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

void check_map_identity(AxiomReport& rep, const std::string& axiom, const Mat& lhs,
                        const Mat& rhs) {
  if (lhs != rhs) rep.add(axiom, {}, flatten(lhs), flatten(rhs));
}

void check_commutation(AxiomReport& rep, const Mat& alpha, const Mat& beta) {
  rep.axioms.push_back("commutation");
  check_map_identity(rep, "commutation", alpha * beta, beta * alpha);
}

void check_multiplicativity(AxiomReport& rep, const TriTensor& t, const Mat& alpha,
                            const Mat& beta) {
  const int n = t.dim_in();
  rep.axioms.push_back("multiplicativity.alpha");
  rep.axioms.push_back("multiplicativity.beta");
  const Mat* maps[2] = {&alpha, &beta};
  const char* ids[2] = {"multiplicativity.alpha", "multiplicativity.beta"};
  for (int w = 0; w < 2; ++w) {
    TriTensor lhs = t.compose_output(*maps[w]);
    TriTensor rhs = t.compose_inputs(*maps[w], *maps[w], *maps[w]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vec l = lhs.col(i, j, k), r = rhs.col(i, j, k);
          if (l != r) rep.add(ids[w], {i + 1, j + 1, k + 1}, std::move(l), std::move(r));
        }
  }
}

}  // namespace

ThreeBihomLieAlgebra::ThreeBihomLieAlgebra(int dim, TriTensor br, Mat a, Mat b)
    : n(dim), bracket(std::move(br)), alpha(std::move(a)), beta(std::move(b)) {
  if (bracket.dim_in() != n || bracket.dim_out() != n)
    throw DimensionMismatch("bracket tensor shape");
  require_square(alpha, n, "alpha shape");
  require_square(beta, n, "beta shape");
}

BihomLieAlgebra::BihomLieAlgebra(int dim, BiTensor br, Mat a, Mat b)
    : n(dim), bracket(std::move(br)), alpha(std::move(a)), beta(std::move(b)) {
  if (bracket.dim_in() != n || bracket.dim_out() != n)
    throw DimensionMismatch("bracket tensor shape");
  require_square(alpha, n, "alpha shape");
  require_square(beta, n, "beta shape");
}

TotallyBihomAssocAlgebra::TotallyBihomAssocAlgebra(int dim, TriTensor pr, Mat a, Mat b)
    : n(dim), product(std::move(pr)), alpha(std::move(a)), beta(std::move(b)) {
  if (product.dim_in() != n || product.dim_out() != n)
    throw DimensionMismatch("product tensor shape");
  require_square(alpha, n, "alpha shape");
  require_square(beta, n, "beta shape");
}

AxiomReport check_three_bihom_lie(const ThreeBihomLieAlgebra& A) {
  const int n = A.n;
  AxiomReport rep;
  check_commutation(rep, A.alpha, A.beta);
  check_multiplicativity(rep, A.bracket, A.alpha, A.beta);

  // Both stated transpositions of the skew identity, on [b x, b y, a z].
  TriTensor t1 = A.bracket.compose_inputs(A.beta, A.beta, A.alpha);
  rep.axioms.push_back("skew.12");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec l = t1.col(i, j, k), r = negate(t1.col(j, i, k));
        if (l != r) rep.add("skew.12", {i + 1, j + 1, k + 1}, std::move(l), std::move(r));
      }
  rep.axioms.push_back("skew.23");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec l = t1.col(i, j, k), r = negate(t1.col(i, k, j));
        if (l != r) rep.add("skew.23", {i + 1, j + 1, k + 1}, std::move(l), std::move(r));
      }

  // Five-variable identity. t2 covers the outer bracket [b^2 u, b^2 v, -],
  // t1 the inner one; combining them keeps the scan near-linear per tuple.
  rep.axioms.push_back("jacobi");
  Mat beta2 = A.beta * A.beta;
  TriTensor t2 = A.bracket.compose_inputs(beta2, beta2, Mat::identity(n));
  std::vector<Vec> inner(size_t(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        inner[(size_t(i) * n + j) * n + k] = t1.col(i, j, k);
  auto outer = [&](int a, int b, const Vec& w) {
    Vec out(n, Rat(0));
    for (int m = 0; m < n; ++m) {
      if (w[m] == 0) continue;
      for (int l = 0; l < n; ++l) {
        const Rat& c = t2.at(a, b, m, l);
        if (c != 0) out[l] += w[m] * c;
      }
    }
    return out;
  };
  auto in = [&](int a, int b, int c) -> const Vec& {
    return inner[(size_t(a) * n + b) * n + c];
  };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            Vec lhs = outer(u, v, in(x, y, z));
            Vec rhs = outer(y, z, in(u, v, x)) - outer(x, z, in(u, v, y)) +
                      outer(x, y, in(u, v, z));
            if (lhs != rhs)
              rep.add("jacobi", {u + 1, v + 1, x + 1, y + 1, z + 1}, std::move(lhs),
                      std::move(rhs));
          }
  return rep;
}

AxiomReport check_bihom_lie(const BihomLieAlgebra& A) {
  const int n = A.n;
  AxiomReport rep;
  check_commutation(rep, A.alpha, A.beta);

  rep.axioms.push_back("multiplicativity.alpha");
  rep.axioms.push_back("multiplicativity.beta");
  const Mat* maps[2] = {&A.alpha, &A.beta};
  const char* ids[2] = {"multiplicativity.alpha", "multiplicativity.beta"};
  for (int w = 0; w < 2; ++w) {
    BiTensor lhs = A.bracket.compose_output(*maps[w]);
    BiTensor rhs = A.bracket.compose_inputs(*maps[w], *maps[w]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec l = lhs.col(i, j), r = rhs.col(i, j);
        if (l != r) rep.add(ids[w], {i + 1, j + 1}, std::move(l), std::move(r));
      }
  }

  rep.axioms.push_back("skew");
  BiTensor s = A.bracket.compose_inputs(A.beta, A.alpha);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec l = s.col(i, j), r = negate(s.col(j, i));
      if (l != r) rep.add("skew", {i + 1, j + 1}, std::move(l), std::move(r));
    }

  rep.axioms.push_back("jacobi");
  Mat beta2 = A.beta * A.beta;
  BiTensor u = A.bracket.compose_inputs(beta2, Mat::identity(n));
  auto term = [&](int a, int b, int c) {
    Vec w = s.col(b, c);
    Vec out(n, Rat(0));
    for (int m = 0; m < n; ++m) {
      if (w[m] == 0) continue;
      for (int l = 0; l < n; ++l) {
        const Rat& q = u.at(a, m, l);
        if (q != 0) out[l] += w[m] * q;
      }
    }
    return out;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec lhs = term(x, y, z) + term(y, z, x) + term(z, x, y);
        if (!is_zero(lhs))
          rep.add("jacobi", {x + 1, y + 1, z + 1}, std::move(lhs), Vec(n, Rat(0)));
      }
  return rep;
}

AxiomReport check_totally_assoc(const TotallyBihomAssocAlgebra& A) {
  const int n = A.n;
  AxiomReport rep;
  check_commutation(rep, A.alpha, A.beta);
  check_multiplicativity(rep, A.product, A.alpha, A.beta);

  Mat id = Mat::identity(n);
  TriTensor q1 = A.product.compose_inputs(id, A.beta, A.beta);
  TriTensor q2 = A.product.compose_inputs(A.alpha, id, A.beta);
  TriTensor q3 = A.product.compose_inputs(A.alpha, A.alpha, id);
  std::vector<Vec> p(size_t(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) p[(size_t(i) * n + j) * n + k] = A.product.col(i, j, k);
  auto pc = [&](int i, int j, int k) -> const Vec& {
    return p[(size_t(i) * n + j) * n + k];
  };
  // x1: (a1 a2 a3) b(a4) b(a5); x2: a(a1) (a2 a3 a4) b(a5);
  // x3: a(a1) a(a2) (a3 a4 a5). Each is a contraction of a product column
  // with one of the q tensors over the inner slot.
  auto contract = [&](const TriTensor& t, int a, int pos, int b, const Vec& w) {
    Vec out(n, Rat(0));
    for (int m = 0; m < n; ++m) {
      if (w[m] == 0) continue;
      for (int l = 0; l < n; ++l) {
        const Rat& c = pos == 0   ? t.at(m, a, b, l)
                       : pos == 1 ? t.at(a, m, b, l)
                                  : t.at(a, b, m, l);
        if (c != 0) out[l] += w[m] * c;
      }
    }
    return out;
  };
  rep.axioms.push_back("assoc.1");
  rep.axioms.push_back("assoc.2");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            Vec x1 = contract(q1, l, 0, m, pc(i, j, k));
            Vec x2 = contract(q2, i, 1, m, pc(j, k, l));
            Vec x3 = contract(q3, i, 2, j, pc(k, l, m));
            if (x1 != x2)
              rep.add("assoc.1", {i + 1, j + 1, k + 1, l + 1, m + 1}, x1, x2);
            if (x2 != x3)
              rep.add("assoc.2", {i + 1, j + 1, k + 1, l + 1, m + 1}, std::move(x2),
                      std::move(x3));
          }
  // Keep violations grouped by axiom id as documented.
  std::stable_sort(rep.violations.begin(), rep.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.axiom < b.axiom; });
  return rep;
}

AxiomReport check_tensor_condition(const TotallyBihomAssocAlgebra& A) {
  const int n = A.n;
  AxiomReport rep;
  TriTensor v = A.product.compose_inputs(A.beta, A.beta, A.alpha);
  rep.axioms.push_back("tensor.sym.12");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec l = v.col(i, j, k), r = v.col(j, i, k);
        if (l != r)
          rep.add("tensor.sym.12", {i + 1, j + 1, k + 1}, std::move(l), std::move(r));
      }
  rep.axioms.push_back("tensor.sym.23");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec l = v.col(i, j, k), r = v.col(i, k, j);
        if (l != r)
          rep.add("tensor.sym.23", {i + 1, j + 1, k + 1}, std::move(l), std::move(r));
      }
  return rep;
}

bool is_regular(const ThreeBihomLieAlgebra& A) {
  return rank(A.alpha) == A.n && rank(A.beta) == A.n;
}

std::vector<Vec> fixed_points(const ThreeBihomLieAlgebra& A) {
  Mat sys(2 * A.n, A.n);
  Mat id = Mat::identity(A.n);
  Mat da = A.alpha - id, db = A.beta - id;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      sys(i, j) = da(i, j);
      sys(A.n + i, j) = db(i, j);
    }
  return kernel_basis(sys);
}

namespace {

RowSpan independent_span(const std::vector<Vec>& S) {
  RowSpan span;
  for (const Vec& s : S)
    if (!span.add(s)) throw DependentSpanInput();
  return span;
}

}  // namespace

bool is_subalgebra(const ThreeBihomLieAlgebra& A, const std::vector<Vec>& S) {
  RowSpan span = independent_span(S);
  for (const Vec& s : S)
    if (!span.contains(A.alpha * s) || !span.contains(A.beta * s)) return false;
  for (const Vec& a : S)
    for (const Vec& b : S)
      for (const Vec& c : S)
        if (!span.contains(A.bracket.eval(a, b, c))) return false;
  return true;
}

bool is_ideal(const ThreeBihomLieAlgebra& A, const std::vector<Vec>& S) {
  RowSpan span = independent_span(S);
  for (const Vec& s : S)
    if (!span.contains(A.alpha * s) || !span.contains(A.beta * s)) return false;
  for (const Vec& s : S)
    for (int j = 0; j < A.n; ++j)
      for (int k = 0; k < A.n; ++k)
        if (!span.contains(A.bracket.eval(s, unit_vec(A.n, j), unit_vec(A.n, k))))
          return false;
  return true;
}

AxiomReport is_morphism(const Mat& f, const ThreeBihomLieAlgebra& src,
                        const ThreeBihomLieAlgebra& dst) {
  if (f.rows() != dst.n || f.cols() != src.n) throw DimensionMismatch("morphism shape");
  AxiomReport rep;
  rep.axioms.push_back("morphism.bracket");
  TriTensor lhs = src.bracket.compose_output(f);
  TriTensor rhs = dst.bracket.compose_inputs(f, f, f);
  for (int i = 0; i < src.n; ++i)
    for (int j = 0; j < src.n; ++j)
      for (int k = 0; k < src.n; ++k) {
        Vec l = lhs.col(i, j, k), r = rhs.col(i, j, k);
        if (l != r)
          rep.add("morphism.bracket", {i + 1, j + 1, k + 1}, std::move(l), std::move(r));
      }
  rep.axioms.push_back("morphism.alpha");
  check_map_identity(rep, "morphism.alpha", f * src.alpha, dst.alpha * f);
  rep.axioms.push_back("morphism.beta");
  check_map_identity(rep, "morphism.beta", f * src.beta, dst.beta * f);
  return rep;
}

std::vector<Vec> graph_subspace(const Mat& f, const ThreeBihomLieAlgebra& src,
                                const ThreeBihomLieAlgebra& dst) {
  if (f.rows() != dst.n || f.cols() != src.n) throw DimensionMismatch("morphism shape");
  std::vector<Vec> out;
  for (int i = 0; i < src.n; ++i) {
    Vec v(src.n + dst.n, Rat(0));
    v[i] = 1;
    Vec fi = f.col(i);
    for (int r = 0; r < dst.n; ++r) v[src.n + r] = fi[r];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace bihom
