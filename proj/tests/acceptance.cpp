// Acceptance run: drives the library end to end and prints one line per
// criterion. Exits with the number of failed criteria. argv: <cli> <corpus>.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bihom/constructions.hpp"
#include "bihom/derivations.hpp"
#include "bihom/errors.hpp"
#include "bihom/io.hpp"
#include "bihom/quadratic.hpp"
#include "generators.hpp"

using namespace bihom;
namespace fs = std::filesystem;

namespace {

std::string cli;
fs::path corpus_dir;
fs::path work;

struct Named {
  std::string name;
  ThreeBihomLieAlgebra alg;
};
std::vector<std::string> corpus_paths;          // every corpus file
std::vector<Named> corpus_algebras;             // the ternary bracket ones
std::map<std::string, AlgebraFile> corpus_by_stem;

struct CheckFailure : std::runtime_error {
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

const AlgebraFile& corpus_file(const std::string& stem) {
  auto it = corpus_by_stem.find(stem);
  require(it != corpus_by_stem.end(), "corpus file missing: " + stem);
  return it->second;
}

std::string corpus_path(const std::string& stem) {
  for (const std::string& p : corpus_paths)
    if (fs::path(p).stem() == stem) return p;
  throw CheckFailure("corpus path missing: " + stem);
}

void load_corpus() {
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    AlgebraFile f = load_algebra_file(entry.path().string());
    corpus_paths.push_back(entry.path().string());
    corpus_by_stem.emplace(entry.path().stem().string(), f);
    if (f.kind == FileKind::ThreeBihomLie)
      corpus_algebras.push_back({entry.path().stem().string(), f.as_three_bihom()});
  }
  require(!corpus_algebras.empty(), "no ternary algebras in the corpus");
}

Vec neg(const Vec& v) { return rat(-1) * v; }

// Recomputes both sides of a reported violation straight from the structure
// constants (TriTensor::eval plus plain matrix products), bypassing the
// checker's cached composition tables.
std::pair<Vec, Vec> reevaluate(const ThreeBihomLieAlgebra& A, const Violation& v) {
  const Mat& a = A.alpha;
  const Mat& b = A.beta;
  auto e = [&](int w) { return unit_vec(A.n, v.witness[size_t(w)] - 1); };
  if (v.axiom == "skew.12") {
    Vec lhs = A.apply_bracket(b * e(0), b * e(1), a * e(2));
    Vec rhs = neg(A.apply_bracket(b * e(1), b * e(0), a * e(2)));
    return {lhs, rhs};
  }
  if (v.axiom == "skew.23") {
    Vec lhs = A.apply_bracket(b * e(0), b * e(1), a * e(2));
    Vec rhs = neg(A.apply_bracket(b * e(0), b * e(2), a * e(1)));
    return {lhs, rhs};
  }
  if (v.axiom == "multiplicativity.alpha") {
    Vec lhs = a * A.apply_bracket(e(0), e(1), e(2));
    Vec rhs = A.apply_bracket(a * e(0), a * e(1), a * e(2));
    return {lhs, rhs};
  }
  if (v.axiom == "multiplicativity.beta") {
    Vec lhs = b * A.apply_bracket(e(0), e(1), e(2));
    Vec rhs = A.apply_bracket(b * e(0), b * e(1), b * e(2));
    return {lhs, rhs};
  }
  if (v.axiom == "jacobi") {
    Mat b2 = b * b;
    auto inner = [&](int x, int y, int z) {
      return A.apply_bracket(b * e(x), b * e(y), a * e(z));
    };
    auto outer = [&](int x, int y, const Vec& w) {
      return A.apply_bracket(b2 * e(x), b2 * e(y), w);
    };
    Vec lhs = outer(0, 1, inner(2, 3, 4));
    Vec rhs = outer(3, 4, inner(0, 1, 2)) - outer(2, 4, inner(0, 1, 3)) +
              outer(2, 3, inner(0, 1, 4));
    return {lhs, rhs};
  }
  throw CheckFailure("unexpected axiom in perturbation report: " + v.axiom);
}

std::vector<int> witnesses_of(const AxiomReport& rep, const std::string& id) {
  std::vector<int> flat;
  for (const Violation& v : rep.violations)
    if (v.axiom == id) {
      flat.insert(flat.end(), v.witness.begin(), v.witness.end());
      flat.push_back(-1);
    }
  return flat;
}

std::vector<Vec> units(int n, int from, int count) {
  std::vector<Vec> s;
  for (int i = 0; i < count; ++i) s.push_back(unit_vec(n, from + i));
  return s;
}

ThreeBihomLieAlgebra scaled_twist() {
  return yau_twist(gen::nilpotent4(),
                   Mat::diagonal(Vec{rat(2), rat(1), rat(1), rat(2)}),
                   Mat::diagonal(Vec{rat(3), rat(1), rat(1), rat(3)}));
}

struct RunResult {
  int code = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

RunResult run_cli(const std::string& args) {
  fs::path cap = work / "capture.txt";
  std::string command = cli + " " + args + " > " + cap.string() + " 2>&1";
  int raw = std::system(command.c_str());
  RunResult r;
  if (raw != -1 && WIFEXITED(raw)) r.code = WEXITSTATUS(raw);
  r.out = slurp(cap);
  return r;
}

int cli_runs = 0;

// Runs one CLI invocation and cross-checks the exit code against the report
// text: 0 must come with "result pass", 1 with "result fail", 2 with neither.
RunResult expect_cli(const std::string& args, int want) {
  RunResult r = run_cli(args);
  require(r.code == want, "exit " + std::to_string(r.code) + " (want " +
                              std::to_string(want) + ") from: " + args);
  bool pass_line = contains(r.out, "result pass");
  bool fail_line = contains(r.out, "result fail");
  if (want == 0) require(pass_line && !fail_line, "report text mismatch: " + args);
  if (want == 1) require(fail_line, "report text mismatch: " + args);
  if (want == 2) require(!pass_line && !fail_line, "report text on error: " + args);
  ++cli_runs;
  return r;
}

void round_trip_file(const std::string& path) {
  AlgebraFile f = load_algebra_file(path);
  std::string s1 = print_algebra_file(f);
  std::istringstream in1(s1);
  AlgebraFile g = parse_algebra_file(in1);
  require(g.kind == f.kind && g.dim == f.dim && g.mdim == f.mdim,
          "round trip changed the shape of " + path);
  require(print_algebra_file(g) == s1, "round trip not stable for " + path);
}

int failures = 0;

void criterion(int num, const std::function<std::string()>& body) {
  try {
    std::string detail = body();
    std::cout << "criterion " << num << " pass";
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "criterion " << num << " fail (" << e.what() << ")\n";
  }
}

std::string criterion1() {
  require(check_three_bihom_lie(corpus_file("nilpotent4").as_three_bihom()).passed(),
          "nilpotent4 axioms");
  for (int n = 1; n <= 6; ++n)
    require(check_three_bihom_lie(gen::abelian(n)).passed(),
            "abelian dim " + std::to_string(n));

  // time the full five-variable scan on a six-dimensional nonzero bracket
  ThreeBihomLieAlgebra six = direct_sum(gen::nilpotent4(), gen::abelian(2));
  auto t0 = std::chrono::steady_clock::now();
  require(check_three_bihom_lie(six).passed(), "six-dimensional sum axioms");
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  require(ms < 10000, "dim-6 scan took " + std::to_string(ms) + " ms");

  gen::Rng rng(4242);
  for (int it = 0; it < 20; ++it) {
    const Named& pick = corpus_algebras[size_t(it) % corpus_algebras.size()];
    ThreeBihomLieAlgebra bad = gen::perturb(rng, pick.alg);
    AxiomReport rep = check_three_bihom_lie(bad);
    require(!rep.passed(), "perturbed " + pick.name + " still passes");
    const Violation& v = rep.violations.front();
    auto sides = reevaluate(bad, v);
    require(sides.first != sides.second,
            "witness does not separate the sides for " + pick.name);
    require(sides.first == v.lhs && sides.second == v.rhs,
            "recorded sides disagree with re-evaluation for " + pick.name);
  }
  return "dim-6 scan " + std::to_string(ms) + " ms, 20 perturbations re-checked";
}

std::string criterion2() {
  gen::Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    gen::Family f = gen::conjugated_family(rng, 4);
    require(check_three_bihom_lie(f.lie).passed(), "family base axioms");
    require(is_multiplicative(f.lie.bracket, f.a), "a not multiplicative");
    require(is_multiplicative(f.lie.bracket, f.b), "b not multiplicative");
    require(f.a.commutes_with(f.b), "maps do not commute");
    ThreeBihomLieAlgebra tw = yau_twist(f.lie, f.a, f.b);
    require(check_three_bihom_lie(tw).passed(), "twist axioms");
    if (it < 3) {
      for (int k = 0; k <= 3; ++k) {
        ThreeBihomLieAlgebra p = power_twist(tw, k);
        ThreeBihomLieAlgebra q = twist(tw, tw.alpha.pow(k), tw.beta.pow(k));
        require(p.bracket == q.bracket && p.alpha == q.alpha && p.beta == q.beta,
                "power twist mismatch at k=" + std::to_string(k));
      }
    }
  }
  return "20 twists, power twists matched for k<=3";
}

std::string criterion3() {
  TotallyBihomAssocAlgebra one = corpus_file("unital1").as_assoc();
  TotallyBihomAssocAlgebra two = corpus_file("diag2").as_assoc();
  for (const TotallyBihomAssocAlgebra* t : {&one, &two}) {
    require(check_totally_assoc(*t).passed(), "associative factor axioms");
    require(check_tensor_condition(*t).passed(), "tensor symmetry condition");
  }

  gen::Rng rng(11);
  int pairs = 0;
  for (int it = 0; it < 5; ++it) {
    ThreeBihomLieAlgebra A = gen::random_three_bihom(rng, 4);
    ThreeBihomLieAlgebra B = it % 2 == 0 ? gen::nilpotent4() : gen::abelian(2);
    require(check_three_bihom_lie(direct_sum(A, B)).passed(), "direct sum axioms");
    ++pairs;
    const TotallyBihomAssocAlgebra& T = it % 2 == 0 ? one : two;
    require(check_three_bihom_lie(tensor_product(T, A)).passed(), "tensor axioms");
    ++pairs;
  }
  require(pairs >= 10, "not enough construction pairs");

  // the one-dimensional unital factor embeds A identically
  for (const Named& c : corpus_algebras) {
    ThreeBihomLieAlgebra t = tensor_product(one, c.alg);
    require(t.n == c.alg.n, "unital tensor changed the dimension");
    require(t.bracket == c.alg.bracket && t.alpha == c.alg.alpha &&
                t.beta == c.alg.beta,
            "unital tensor is not the identity embedding on " + c.name);
  }
  return std::to_string(pairs) + " sums/products checked";
}

std::string criterion4() {
  int induced = 0;
  for (const Named& c : corpus_algebras) {
    for (const Vec& v : fixed_points(c.alg)) {
      BihomLieAlgebra b = induced_binary(c.alg, v);
      require(check_bihom_lie(b).passed(), "induced bracket on " + c.name);
      ++induced;
    }
  }
  require(induced > 0, "no fixed points found anywhere");
  return std::to_string(induced) + " induced binary algebras";
}

std::string criterion5() {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 2; k += 2)
      require(derivation_space(gen::abelian(n), k, 1).dim() == n * n,
              "abelian derivation space dim " + std::to_string(n));

  int inner_checked = 0;
  for (const Named& c : corpus_algebras) {
    if (!is_regular(c.alg)) continue;
    std::vector<Vec> fix = fixed_points(c.alg);
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l)
        for (size_t i = 0; i < fix.size(); ++i)
          for (size_t j = i + 1; j < fix.size(); ++j) {
            Mat d = inner_derivation(c.alg, fix[i], fix[j], k, l);
            require(is_derivation(d, c.alg, k, l + 1).passed(),
                    "inner derivation weight on " + c.name);
            ++inner_checked;
          }
  }

  // commutator identity between a derivation and the inner family
  gen::Rng rng(23);
  int commutators = 0;
  for (int it = 0; it < 5; ++it) {
    ThreeBihomLieAlgebra inst =
        gen::conjugate(scaled_twist(), gen::random_invertible(rng, 4));
    std::vector<Vec> fix = fixed_points(inst);
    require(fix.size() >= 2, "twisted instance lost its fixed plane");
    Vec u1 = fix[0], u2 = fix[1];
    for (size_t p = 0; p < fix.size(); ++p) {
      Rat w1 = rng.small_rat(), w2 = rng.small_rat();
      u1 = u1 + w1 * fix[p];
      u2 = u2 + w2 * fix[p];
    }
    for (int k = 0; k <= 1; ++k)
      for (int l = 0; l <= 1; ++l) {
        DerivationSpace ds = derivation_space(inst, k, l);
        require(ds.dim() > 0, "empty derivation space on the twisted instance");
        Mat D = ds.basis[0];
        for (int b = 1; b < ds.dim(); ++b) D = D + ds.basis[size_t(b)] * rng.small_rat();
        require(is_derivation(D, inst, k, l).passed(), "combined map not a derivation");
        for (int s = 0; s <= 1; ++s)
          for (int t = 0; t <= 1; ++t) {
            Mat lhs = derivation_bracket(D, inner_derivation(inst, u1, u2, s, t));
            Mat rhs = inner_derivation(inst, D * u1, u2, k + s, l + t) +
                      inner_derivation(inst, u1, D * u2, k + s, l + t);
            require(lhs == rhs, "commutator identity failed");
            ++commutators;
          }
      }
  }
  return std::to_string(inner_checked) + " inner derivations, " +
         std::to_string(commutators) + " commutator identities";
}

std::string criterion6() {
  ThreeBihomLieAlgebra nil = corpus_file("nilpotent4").as_three_bihom();
  require(adjoint_rep(nil).report.passed(), "adjoint of nilpotent4");

  gen::Rng rng(31);
  int instances = 0;
  for (int it = 0; it < 10; ++it) {
    ThreeBihomLieAlgebra A = it == 0   ? corpus_file("euclid4").as_three_bihom()
                             : it == 1 ? nil
                                       : gen::random_three_bihom(rng, 4);
    Representation R = it == 1 ? coadjoint_rep(A).rep : adjoint_rep(A).rep;
    require(check_representation(A, R).passed(), "representation conditions");
    Cocycle base = it == 1 ? gen::epsilon_theta4() : Cocycle(A.n, R.module_dim());
    require(check_cocycle(A, R, base).passed(), "base cocycle conditions");

    ThreeBihomLieAlgebra sd = semidirect_product(A, R);
    require(check_three_bihom_lie(sd).passed(), "semidirect axioms");

    Mat f = gen::intertwining_map(rng, A, R);
    Cocycle theta_f = coboundary_cocycle(A, R, f);
    require(check_cocycle(A, R, theta_f).passed(), "coboundary conditions");
    Cocycle theta = cocycle_sum(base, theta_f);
    require(check_cocycle(A, R, theta).passed(), "shifted cocycle conditions");

    ThreeBihomLieAlgebra ext = t_theta_extension(A, R, theta);
    require(check_three_bihom_lie(ext).passed(), "extension axioms");

    MapWithReport iso = extension_isomorphism(A, R, base, f);
    require(iso.report.passed(), "extension isomorphism report");
    ++instances;
  }
  require(instances >= 10, "not enough extension instances");
  return "10 semidirect/extension instances";
}

std::string criterion7() {
  int swept = 0;
  for (const Named& c : corpus_algebras) {
    if (!is_regular(c.alg)) continue;
    RepWithReport ad = adjoint_rep(c.alg);
    require(ad.report.passed(), "adjoint conditions on " + c.name);
    RepWithReport dual = dual_representation(c.alg, ad.rep);
    require(dual.report.passed(), "dual conditions on " + c.name);
    require(check_representation(c.alg, dual.rep).passed(),
            "dual of adjoint not a representation on " + c.name);
    ++swept;
  }
  require(swept >= 5, "too few regular corpus algebras");

  // a valid representation whose dual is none: scaling maps break the first
  // condition, and the direct check of the dual fails at the same witnesses
  ThreeBihomLieAlgebra tw = scaled_twist();
  RepWithReport ad = adjoint_rep(tw);
  require(ad.report.passed(), "adjoint of the scaled twist");
  RepWithReport dual = dual_representation(tw, ad.rep);
  require(!dual.report.passed(), "scaled twist dual unexpectedly passes");
  require(dual.report.violations.front().axiom == "dual.1",
          "first failure is not the first dual condition");
  AxiomReport direct = check_representation(tw, dual.rep);
  require(!direct.passed(), "direct check of the broken dual passes");
  for (int k = 1; k <= 4; ++k) {
    std::string dk = "dual." + std::to_string(k);
    std::string rk = "rep." + std::to_string(k);
    require(witnesses_of(dual.report, dk) == witnesses_of(direct, rk),
            "witness mismatch between " + dk + " and " + rk);
  }
  return std::to_string(swept) + " corpus duals, broken dual matched witness-for-witness";
}

std::string criterion8() {
  int swept = 0;
  for (const Named& c : corpus_algebras) {
    if (!is_regular(c.alg)) continue;
    QuadraticAlgebra q = t_star_extension(c.alg, Cocycle(c.alg.n, c.alg.n));
    require(check_three_bihom_lie(q.algebra).passed(), "extension axioms on " + c.name);
    require(check_quadratic(q.algebra, q.form).passed(), "form axioms on " + c.name);
    ++swept;
  }

  // totally antisymmetric on three coordinates, dumped into one dual slot:
  // a valid cocycle without the symmetry the form needs
  ThreeBihomLieAlgebra ab = gen::abelian(4);
  Cocycle bad(4, 4);
  int s[3][3][3] = {};
  s[0][1][2] = s[1][2][0] = s[2][0][1] = 1;
  s[1][0][2] = s[0][2][1] = s[2][1][0] = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) bad.at(i, j, k, 0) = s[i][j][k];
  require(check_cocycle(ab, coadjoint_rep(ab).rep, bad).passed(),
          "asymmetric cocycle should satisfy the cocycle conditions");
  AxiomReport sym = theta_symmetry_report(ab, bad);
  require(!sym.passed(), "symmetry report passes on the asymmetric cocycle");
  require(sym.violations.front().axiom == "tstar.symmetry", "wrong axiom id");
  require(sym.violations.front().witness.size() == 4, "witness is not a 4-tuple");
  bool rejected = false;
  try {
    t_star_extension(ab, bad);
  } catch (const PreconditionFailed&) {
    rejected = true;
  }
  require(rejected, "extension accepted an asymmetric cocycle");

  QuadraticAlgebra q =
      t_star_extension(corpus_file("nilpotent4").as_three_bihom(), gen::epsilon_theta4());
  AxiomReport qr = check_quadratic(q.algebra, q.form);
  require(qr.axiom_passed("quadratic.invariance"), "invariance scan");
  require(qr.passed() && check_three_bihom_lie(q.algebra).passed(),
          "nonzero-cocycle extension axioms");
  return std::to_string(swept) + " hyperbolic extensions, asymmetric cocycle rejected";
}

std::string criterion9() {
  std::string detail;
  int swept = 0;
  for (const Named& c : corpus_algebras) {
    if (!is_regular(c.alg) || c.alg.n > 4) continue;
    bool solv = is_solvable(c.alg);
    bool nilp = is_nilpotent(c.alg);
    if (!solv && !nilp) continue;
    QuadraticAlgebra q = t_star_extension(c.alg, Cocycle(c.alg.n, c.alg.n));
    if (solv) require(is_solvable(q.algebra), "extension of " + c.name + " not solvable");
    if (nilp) require(is_nilpotent(q.algebra), "extension of " + c.name + " not nilpotent");
    size_t ds = derived_series(q.algebra, q.algebra.n + 1).size();
    size_t cs = descending_series(q.algebra, q.algebra.n + 1).size();
    if (!detail.empty()) detail += ", ";
    detail += c.name + " d" + std::to_string(ds) + "/c" + std::to_string(cs);
    ++swept;
  }
  require(swept >= 3, "too few solvable corpus algebras");

  QuadraticAlgebra q =
      t_star_extension(corpus_file("nilpotent4").as_three_bihom(), gen::epsilon_theta4());
  require(is_solvable(q.algebra) && is_nilpotent(q.algebra),
          "nonzero-cocycle extension lost solvability");
  return detail;
}

std::string criterion10() {
  int splits = 0;
  for (int it = 0; it < 3; ++it) {
    ThreeBihomLieAlgebra A = it == 0 ? corpus_file("nilpotent4").as_three_bihom()
                                     : corpus_file("euclid4").as_three_bihom();
    Cocycle theta = it == 0 ? gen::epsilon_theta4() : Cocycle(4, 4);
    if (it == 2) A = corpus_file("nilpotent4_signs").as_three_bihom();
    QuadraticAlgebra q = t_star_extension(A, theta);
    std::vector<Vec> ideal = units(q.algebra.n, A.n, A.n);
    require(ideal_bracket_vanishes(q.algebra, q.form, ideal),
            "dual-block bracket certificate");
    Reconstruction rec = reconstruct(q, ideal);
    require(rec.report.passed(), "reconstruction report");
    require(rec.report.axiom_passed("isometry.invertible") &&
                rec.report.axiom_passed("isometry.form"),
            "isometry sub-report");
    require(rec.base.bracket == A.bracket && rec.base.alpha == A.alpha &&
                rec.base.beta == A.beta,
            "recovered base differs from the original algebra");
    require(rec.theta == theta, "recovered cocycle differs");
    require(rec.extension.algebra.bracket == q.algebra.bracket,
            "rebuilt extension bracket differs");
    ++splits;
  }
  return std::to_string(splits) + " extensions split and rebuilt";
}

std::string criterion11() {
  // serialization round trips: complete corpus plus freshly generated files
  int files = 0;
  for (const std::string& p : corpus_paths) {
    round_trip_file(p);
    ++files;
  }
  require(files >= 10, "corpus shrank");

  std::string nil = corpus_path("nilpotent4");
  std::string eps = corpus_path("eps4");

  fs::path tw = work / "tw.alg";
  expect_cli("yau-twist " + nil + " --alpha diag:2,1,1,2 --beta diag:3,1,1,3 --out " +
                 tw.string(),
             0);
  fs::path ext = work / "ext.alg";
  expect_cli("tstar " + nil + " --theta " + eps + " --out " + ext.string(), 0);
  fs::path der = work / "der.mats";
  expect_cli("der-space " + nil + " --k 0 --l 0 --out " + der.string(), 0);
  fs::path coad = work / "coad.rep";
  expect_cli("coadjoint " + nil + " --out " + coad.string(), 0);
  fs::path rc = work / "rc";
  expect_cli("reconstruct " + ext.string() + " --ideal last:4 --out " + rc.string(), 0);
  for (const char* gen_file :
       {"tw.alg", "ext.alg", "der.mats", "coad.rep", "rc.base.alg", "rc.theta.alg",
        "rc.phi.alg"}) {
    round_trip_file((work / gen_file).string());
    ++files;
  }

  // exit codes against report content across the subcommand matrix
  for (const std::string& p : corpus_paths) {
    AlgebraFile f = corpus_by_stem.at(fs::path(p).stem().string());
    if (f.kind == FileKind::ThreeBihomLie) expect_cli("check " + p, 0);
  }
  auto out_arg = [&](const char* name) { return " --out " + (work / name).string(); };
  std::string eu = corpus_path("euclid4");
  expect_cli("check-assoc " + corpus_path("unital1"), 0);
  expect_cli("check-assoc --tensor-condition " + corpus_path("diag2"), 0);
  expect_cli("check-rep " + corpus_path("abelian2") + " " + corpus_path("free2"), 0);
  expect_cli("check-rep " + nil + " adjoint", 0);
  expect_cli("check-cocycle " + nil + " coadjoint " + eps, 0);
  expect_cli("series " + nil, 0);
  expect_cli("twist " + nil + " --alpha id --beta id" + out_arg("idtw.alg"), 0);
  expect_cli("power-twist " + tw.string() + " --k 2" + out_arg("pw.alg"), 0);
  expect_cli("tensor " + corpus_path("unital1") + " " + eu + out_arg("tens.alg"), 0);
  expect_cli("dsum " + nil + " " + corpus_path("abelian2") + out_arg("sum.alg"), 0);
  expect_cli("induce-binary " + eu + " --a e1" + out_arg("bin.alg"), 0);
  expect_cli("inner-der " + nil + " --u1 e1 --u2 e2 --k 0 --l 0" + out_arg("inn.alg"), 0);
  expect_cli("semidirect " + eu + " adjoint" + out_arg("sd.alg"), 0);
  expect_cli("textend " + nil + " coadjoint " + eps + out_arg("te.alg"), 0);
  fs::path zero_map = work / "zero.map";
  save_algebra_file(zero_map.string(), to_file_matrix(Mat(4, 4)));
  expect_cli("coboundary " + eu + " adjoint --f " + zero_map.string() + out_arg("cb.alg"),
             0);
  fs::path zc = work / "zero.theta";
  save_algebra_file(zc.string(), to_file_cocycle(Cocycle(4, 4), 4));
  expect_cli("sigma " + nil + " coadjoint " + zc.string() + " --f " + zero_map.string() +
                 out_arg("sg.alg"),
             0);
  expect_cli("dual-rep " + corpus_path("abelian2") + " " + corpus_path("free2") +
                 out_arg("dr.alg"),
             0);
  fs::path phi = work / "phi.map";
  save_algebra_file(phi.string(), to_file_matrix(Mat::identity(8)));
  expect_cli("isometry " + phi.string() + " " + ext.string() + " " + ext.string(), 0);

  // a construction whose preconditions fail on well-formed inputs exits 2
  ThreeBihomLieAlgebra ab4 = gen::abelian(4);
  Cocycle asym(4, 4);
  asym.at(0, 1, 2, 0) = 1;
  asym.at(1, 0, 2, 0) = -1;
  fs::path asym_path = work / "asym.theta";
  save_algebra_file(asym_path.string(), to_file_cocycle(asym, 4));
  expect_cli("tstar " + corpus_path("abelian4") + " --theta " + asym_path.string() +
                 out_arg("never.alg"),
             2);

  // failing checks exit 1 with a matching report
  gen::Rng rng(99);
  ThreeBihomLieAlgebra broken = gen::perturb(rng, corpus_file("nilpotent4").as_three_bihom());
  fs::path bad = work / "bad.alg";
  save_algebra_file(bad.string(), to_file(broken));
  RunResult r = expect_cli("check " + bad.string(), 1);
  require(contains(r.out, "violation"), "failing check printed no violation");

  // usage and parse problems exit 2 without a report
  expect_cli("check " + (work / "missing.alg").string(), 2);
  expect_cli("check " + corpus_path("free2"), 2);
  expect_cli("no-such-command", 2);
  fs::path garbled = work / "garbled.alg";
  std::ofstream(garbled) << "kind three_bihom_lie\ndim x\n";
  expect_cli("check " + garbled.string(), 2);

  return std::to_string(files) + " files round-tripped, " + std::to_string(cli_runs) +
         " cli runs consistent";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-binary> <corpus-dir>\n";
    return 64;
  }
  cli = argv[1];
  corpus_dir = argv[2];
  work = fs::temp_directory_path() / ("bihom_acceptance_" + std::to_string(getpid()));
  fs::create_directories(work);

  try {
    load_corpus();
  } catch (const std::exception& e) {
    std::cout << "corpus load failed: " << e.what() << "\n";
    return 64;
  }

  criterion(1, criterion1);
  criterion(2, criterion2);
  criterion(3, criterion3);
  criterion(4, criterion4);
  criterion(5, criterion5);
  criterion(6, criterion6);
  criterion(7, criterion7);
  criterion(8, criterion8);
  criterion(9, criterion9);
  criterion(10, criterion10);
  criterion(11, criterion11);

  std::error_code ec;
  fs::remove_all(work, ec);
  return failures;
}
