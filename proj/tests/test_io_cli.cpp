#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bihom/errors.hpp"
#include "bihom/io.hpp"
#include "generators.hpp"

using namespace bihom;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("bihom_cli_" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string corpus(const std::string& name) {
  return (fs::path(BIHOM_CORPUS_DIR) / name).string();
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path cap = work_dir() / ("capture_" + std::to_string(counter++) + ".txt");
  std::string cmd =
      std::string(BIHOM_CLI_PATH) + " " + args + " > " + cap.string() + " 2>&1";
  int st = std::system(cmd.c_str());
  RunResult r;
  if (st != -1 && WIFEXITED(st)) r.code = WEXITSTATUS(st);
  std::ifstream in(cap);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

AlgebraFile parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra_file(in);
}

}  // namespace

TEST_CASE("every corpus file round-trips through print and parse") {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(BIHOM_CORPUS_DIR)) {
    AlgebraFile f = load_algebra_file(entry.path().string());
    std::string s1 = print_algebra_file(f);
    AlgebraFile g = parse_text(s1);
    CHECK(g.kind == f.kind);
    CHECK(g.dim == f.dim);
    CHECK(g.mdim == f.mdim);
    CHECK(print_algebra_file(g) == s1);
    ++seen;
  }
  CHECK(seen >= 10);
}

TEST_CASE("programmatic objects survive the text form") {
  ThreeBihomLieAlgebra nil = gen::nilpotent4();
  AlgebraFile f = parse_text(print_algebra_file(to_file(nil)));
  ThreeBihomLieAlgebra back = f.as_three_bihom();
  CHECK(back.bracket == nil.bracket);
  CHECK(back.alpha == nil.alpha);
  CHECK(back.beta == nil.beta);

  Representation ad = adjoint_rep(gen::euclid4()).rep;
  Representation rad =
      parse_text(print_algebra_file(to_file(ad))).as_representation();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(rad.rho(i, j) == ad.rho(i, j));

  Cocycle eps = gen::epsilon_theta4();
  CHECK(parse_text(print_algebra_file(to_file_cocycle(eps, 4))).as_cocycle() == eps);

  QuadraticAlgebra q = t_star_extension(nil, eps);
  AlgebraFile qf = parse_text(print_algebra_file(to_file(q)));
  CHECK(qf.has_gram);
  CHECK(qf.as_quadratic().form.gram == q.form.gram);
  CHECK(qf.as_quadratic().algebra.bracket == q.algebra.bracket);

  BihomLieAlgebra bin = induced_binary(nil, unit_vec(4, 0));
  CHECK(parse_text(print_algebra_file(to_file(bin))).as_bihom().bracket == bin.bracket);

  Mat m(2, 3);
  m(0, 1) = rat(-7, 3);
  m(1, 2) = rat(5);
  AlgebraFile mf = parse_text(print_algebra_file(to_file_matrix(m)));
  REQUIRE(mf.matrices.size() == 1);
  CHECK(mf.matrices[0] == m);

  AlgebraFile lf =
      parse_text(print_algebra_file(to_file_matrix_list({Mat(2, 3), m}, 2, 3)));
  REQUIRE(lf.matrices.size() == 2);
  CHECK(lf.matrices[1] == m);
}

TEST_CASE("rationals normalize on parse") {
  AlgebraFile f = parse_text(
      "kind three_bihom_lie dim 1 alpha dense 1 beta dense 1 c 1 1 1 1 2/6");
  CHECK(f.tri.at(0, 0, 0, 0) == rat(1, 3));
  CHECK(contains(print_algebra_file(f), "1/3"));
}

TEST_CASE("malformed files raise parse errors") {
  CHECK_THROWS_AS(parse_text("dim 2"), ParseError);
  CHECK_THROWS_AS(
      parse_text("kind three_bihom_lie dim 2 alpha dense 1 0 0 1 "
                 "beta dense 1 0 0 1 c 3 1 1 1 1"),
      ParseError);
  CHECK_THROWS_AS(
      parse_text("kind three_bihom_lie dim 2 alpha dense 1 0 0 beta dense 1 0 0 1"),
      ParseError);
  CHECK_THROWS_AS(
      parse_text("kind representation dim 2 mdim 2 alpha_m dense 1 0 0 1 "
                 "beta_m dense 1 0 0 1 rho 2 1 1 1 5"),
      ParseError);
  CHECK_THROWS_AS(parse_text("kind three_bihomlie dim 2"), ParseError);
  CHECK_THROWS_AS(
      parse_text("kind three_bihom_lie dim 1 alpha dense 1 beta dense 1 frob 3"),
      ParseError);
  CHECK_THROWS_AS(
      parse_text("kind representation dim 1 mdim 1 alpha_m dense 1 beta_m dense 1 "
                 "gram dense 1"),
      ParseError);
  CHECK_THROWS_AS(parse_text("kind three_bihom_lie dim 2 alpha dense 1 0 0 1"),
                  ParseError);
  CHECK_THROWS_AS(parse_text("kind matrix rows 2 cols 2"), ParseError);
  CHECK_THROWS_AS(
      parse_text("kind three_bihom_lie dim 1 alpha dense 1 beta dense 1 c 1 1 1 1 x"),
      ParseError);
}

TEST_CASE("digest values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(digest_hex("") == "cbf29ce484222325");
  fs::path p = work_dir() / "digest_probe.txt";
  std::ofstream(p) << "abc";
  CHECK(file_digest(p.string()) == digest_hex("abc"));
}

TEST_CASE("cli check: pass, fail and error exits") {
  RunResult ok = run_cli("check " + corpus("nilpotent4.alg"));
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "axiom jacobi pass"));
  CHECK(contains(ok.out, "result pass"));
  CHECK(contains(ok.out, "# input: " + corpus("nilpotent4.alg") + " digest " +
                             file_digest(corpus("nilpotent4.alg"))));

  RunResult quad = run_cli("check " + corpus("euclid4.alg"));
  CHECK(quad.code == 0);
  CHECK(contains(quad.out, "axiom quadratic.invariance pass"));

  fs::path bad = work_dir() / "bad.alg";
  std::ofstream(bad) << "kind three_bihom_lie dim 2\n"
                     << "alpha dense 1 0 0 1\nbeta dense 1 0 0 1\nc 1 1 1 1 1\n";
  RunResult fail = run_cli("check " + bad.string());
  CHECK(fail.code == 1);
  CHECK(contains(fail.out, "result fail"));
  CHECK(contains(fail.out, "violation skew.12"));

  CHECK(run_cli("check " + (work_dir() / "missing.alg").string()).code == 2);
  CHECK(run_cli("check " + corpus("free2.rep")).code == 2);
  CHECK(run_cli("no-such-command").code == 2);

  CHECK(run_cli("check " + corpus("sl2.alg")).code == 0);
  CHECK(run_cli("check-assoc --tensor-condition " + corpus("diag2.alg")).code == 0);
  CHECK(run_cli("check-assoc " + corpus("unital1.alg")).code == 0);
  CHECK(run_cli("check-rep " + corpus("abelian2.alg") + " " + corpus("free2.rep")).code ==
        0);
  CHECK(run_cli("check-cocycle " + corpus("nilpotent4.alg") + " coadjoint " +
                corpus("eps4.theta"))
            .code == 0);
}

TEST_CASE("cli twist matches the precomputed instance") {
  fs::path out = work_dir() / "twisted.alg";
  RunResult r = run_cli("yau-twist " + corpus("nilpotent4.alg") +
                        " --alpha diag:2,1,1,2 --beta diag:3,1,1,3 --out " +
                        out.string());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "out " + out.string()));
  CHECK(contains(r.out, "result pass"));

  // expansion by hand: each constant picks up the diagonal weights of its
  // three inputs, so [e2,e3,e1] gains the 3 from beta and the others the 2s
  ThreeBihomLieAlgebra got = load_algebra_file(out.string()).as_three_bihom();
  TriTensor want(4, 4);
  want.at(0, 1, 2, 3) = rat(2);
  want.at(1, 0, 2, 3) = rat(-2);
  want.at(0, 2, 1, 3) = rat(-2);
  want.at(2, 0, 1, 3) = rat(2);
  want.at(1, 2, 0, 3) = rat(3);
  want.at(2, 1, 0, 3) = rat(-3);
  CHECK(got.bracket == want);
  CHECK(got.alpha == Mat::diagonal(Vec{rat(2), rat(1), rat(1), rat(2)}));
  CHECK(got.beta == Mat::diagonal(Vec{rat(3), rat(1), rat(1), rat(3)}));

  std::string text = slurp(out.string());
  CHECK(contains(text, "# command: yau-twist"));
  CHECK(contains(text, "# input: " + corpus("nilpotent4.alg") + " digest "));

  // general twist of the twisted algebra by its own maps == power twist
  fs::path t2 = work_dir() / "t2.alg";
  fs::path p2 = work_dir() / "p2.alg";
  CHECK(run_cli("twist " + out.string() + " --alpha diag:2,1,1,2 --beta diag:3,1,1,3 --out " +
                t2.string())
            .code == 0);
  CHECK(run_cli("power-twist " + out.string() + " --k 1 --out " + p2.string()).code == 0);
  ThreeBihomLieAlgebra a2 = load_algebra_file(t2.string()).as_three_bihom();
  ThreeBihomLieAlgebra b2 = load_algebra_file(p2.string()).as_three_bihom();
  CHECK(a2.bracket == b2.bracket);
  CHECK(a2.alpha == b2.alpha);
  CHECK(a2.beta == b2.beta);
}

TEST_CASE("cli series output") {
  RunResult nil = run_cli("series " + corpus("nilpotent4.alg"));
  CHECK(nil.code == 0);
  CHECK(contains(nil.out, "derived-dims 4 1 0"));
  CHECK(contains(nil.out, "descending-dims 4 1 0"));
  CHECK(contains(nil.out, "solvable yes"));
  CHECK(contains(nil.out, "nilpotent yes"));

  RunResult eu = run_cli("series " + corpus("euclid4.alg"));
  CHECK(eu.code == 0);
  CHECK(contains(eu.out, "derived-dims 4 4"));
  CHECK(contains(eu.out, "solvable no"));
}

TEST_CASE("cli extension and reconstruction round trip") {
  fs::path ext = work_dir() / "ext.alg";
  RunResult r1 = run_cli("tstar " + corpus("nilpotent4.alg") + " --theta " +
                         corpus("eps4.theta") + " --out " + ext.string());
  CHECK(r1.code == 0);
  CHECK(contains(r1.out, "result pass"));

  std::string prefix = (work_dir() / "rec").string();
  RunResult r2 =
      run_cli("reconstruct " + ext.string() + " --ideal last:4 --out " + prefix);
  CHECK(r2.code == 0);
  CHECK(contains(r2.out, "result pass"));

  ThreeBihomLieAlgebra base =
      load_algebra_file(prefix + ".base.alg").as_three_bihom();
  ThreeBihomLieAlgebra nil =
      load_algebra_file(corpus("nilpotent4.alg")).as_three_bihom();
  CHECK(base.bracket == nil.bracket);
  CHECK(base.alpha == nil.alpha);
  Cocycle theta = load_algebra_file(prefix + ".theta.alg").as_cocycle();
  CHECK(theta == load_algebra_file(corpus("eps4.theta")).as_cocycle());
  Mat phi = load_algebra_file(prefix + ".phi.alg").matrices.at(0);
  CHECK(phi == Mat::identity(8));

  RunResult iso = run_cli("isometry " + prefix + ".phi.alg " + ext.string() + " " +
                          ext.string());
  CHECK(iso.code == 0);
}

TEST_CASE("cli derivation commands") {
  fs::path ds = work_dir() / "ders.alg";
  RunResult r1 = run_cli("der-space " + corpus("nilpotent4.alg") + " --out " + ds.string());
  CHECK(r1.code == 0);
  CHECK(contains(r1.out, "space-dim 12"));
  CHECK(int(load_algebra_file(ds.string()).matrices.size()) == 12);

  fs::path in = work_dir() / "inner.alg";
  RunResult r2 = run_cli("inner-der " + corpus("nilpotent4.alg") +
                         " --u1 e1 --u2 e2 --out " + in.string());
  CHECK(r2.code == 0);
  Mat d = load_algebra_file(in.string()).matrices.at(0);
  Mat want(4, 4);
  want(3, 2) = 1;
  CHECK(d == want);
}

TEST_CASE("cli representation commands") {
  fs::path coad = work_dir() / "coad.rep";
  RunResult r1 = run_cli("coadjoint " + corpus("euclid4.alg") + " --out " + coad.string());
  CHECK(r1.code == 0);
  Representation r = load_algebra_file(coad.string()).as_representation();
  CHECK(r.module_dim() == 4);
  CHECK(run_cli("check-rep " + corpus("euclid4.alg") + " " + coad.string()).code == 0);

  fs::path sd = work_dir() / "sd.alg";
  CHECK(run_cli("semidirect " + corpus("euclid4.alg") + " adjoint --out " + sd.string())
            .code == 0);
  CHECK(load_algebra_file(sd.string()).as_three_bihom().n == 8);

  fs::path te = work_dir() / "te.alg";
  CHECK(run_cli("textend " + corpus("nilpotent4.alg") + " coadjoint " +
                corpus("eps4.theta") + " --out " + te.string())
            .code == 0);

  fs::path dual = work_dir() / "dual.rep";
  CHECK(run_cli("dual-rep " + corpus("abelian2.alg") + " " + corpus("free2.rep") +
                " --out " + dual.string())
            .code == 0);
  Representation dr = load_algebra_file(dual.string()).as_representation();
  Representation fr = load_algebra_file(corpus("free2.rep")).as_representation();
  CHECK(dr.rho(0, 1) == -fr.rho(0, 1).transpose());
}

TEST_CASE("cli coboundary and sigma") {
  // zero map: a coboundary that is identically zero, sigma is the identity
  fs::path zf = work_dir() / "zero_map.alg";
  save_algebra_file(zf.string(), to_file_matrix(Mat(4, 4)));
  fs::path cb = work_dir() / "cb.theta";
  RunResult r1 = run_cli("coboundary " + corpus("euclid4.alg") + " adjoint --f " +
                         zf.string() + " --out " + cb.string());
  CHECK(r1.code == 0);
  CHECK(load_algebra_file(cb.string()).as_cocycle().is_zero());

  RunResult r2 = run_cli("sigma " + corpus("euclid4.alg") + " adjoint " + cb.string() +
                         " --f " + zf.string() + " --out " +
                         (work_dir() / "sigma.alg").string());
  CHECK(r2.code == 0);
  CHECK(load_algebra_file((work_dir() / "sigma.alg").string()).matrices.at(0) ==
        Mat::identity(8));
}
