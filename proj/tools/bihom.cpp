// Command-line front end: parse definition files, run checkers and
// constructions, emit reports and derived files with provenance headers.
//
// Exit codes: 0 all checked identities hold, 1 a checked identity fails,
// 2 parse or precondition error.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bihom/constructions.hpp"
#include "bihom/derivations.hpp"
#include "bihom/errors.hpp"
#include "bihom/io.hpp"
#include "bihom/quadratic.hpp"

using namespace bihom;

namespace {

std::string g_command_echo;

std::vector<std::string> provenance(const std::vector<std::string>& inputs) {
  std::vector<std::string> h;
  h.push_back("command: " + g_command_echo);
  for (const std::string& p : inputs) h.push_back("input: " + p + " digest " + file_digest(p));
  return h;
}

void echo_provenance(const std::vector<std::string>& inputs) {
  for (const std::string& line : provenance(inputs)) std::cout << "# " << line << "\n";
}

int finish(const AxiomReport& rep, std::chrono::steady_clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  print_report(std::cout, rep, ms);
  return rep.passed() ? 0 : 1;
}

// Matrix literals: id | diag:d1,d2,... | rows:a,b;c,d | file:path
Mat parse_matrix_arg(const std::string& s, int n) {
  if (s == "id") return Mat::identity(n);
  auto split = [](const std::string& str, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : str) {
      if (ch == sep) {
        parts.push_back(cur);
        cur.clear();
      } else
        cur.push_back(ch);
    }
    parts.push_back(cur);
    return parts;
  };
  if (s.rfind("diag:", 0) == 0) {
    Vec d;
    for (const std::string& p : split(s.substr(5), ',')) d.push_back(parse_rat(p));
    if (int(d.size()) != n)
      throw ParseError("diagonal literal has " + std::to_string(d.size()) +
                       " entries, expected " + std::to_string(n));
    return Mat::diagonal(d);
  }
  if (s.rfind("rows:", 0) == 0) {
    std::vector<Vec> rows;
    for (const std::string& r : split(s.substr(5), ';')) {
      Vec row;
      for (const std::string& p : split(r, ',')) row.push_back(parse_rat(p));
      rows.push_back(std::move(row));
    }
    Mat m = Mat::from_rows(rows);
    if (m.rows() != n || m.cols() != n)
      throw ParseError("rows literal is " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" +
                       std::to_string(n));
    return m;
  }
  if (s.rfind("file:", 0) == 0) {
    AlgebraFile f = load_algebra_file(s.substr(5));
    if (f.kind != FileKind::Matrix) throw ParseError("expected a matrix file in " + s);
    return f.matrices.at(0);
  }
  throw ParseError("bad matrix literal '" + s + "' (want id, diag:, rows: or file:)");
}

// Vector literals: e<i> | vec:a,b,c | file:path (one-column matrix)
Vec parse_vector_arg(const std::string& s, int n) {
  if (s.size() > 1 && s[0] == 'e') {
    bool digits = true;
    for (size_t i = 1; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) digits = false;
    if (digits) {
      int i = std::stoi(s.substr(1));
      if (i < 1 || i > n) throw ParseError("basis index out of range in '" + s + "'");
      return unit_vec(n, i - 1);
    }
  }
  if (s.rfind("vec:", 0) == 0) {
    Vec v;
    std::string cur;
    for (char ch : s.substr(4)) {
      if (ch == ',') {
        v.push_back(parse_rat(cur));
        cur.clear();
      } else
        cur.push_back(ch);
    }
    v.push_back(parse_rat(cur));
    if (int(v.size()) != n)
      throw ParseError("vector literal has " + std::to_string(v.size()) +
                       " entries, expected " + std::to_string(n));
    return v;
  }
  if (s.rfind("file:", 0) == 0) {
    AlgebraFile f = load_algebra_file(s.substr(5));
    if (f.kind != FileKind::Matrix || f.matrices.at(0).cols() != 1)
      throw ParseError("expected a one-column matrix file in " + s);
    return f.matrices.at(0).col(0);
  }
  throw ParseError("bad vector literal '" + s + "' (want e<i>, vec: or file:)");
}

// Subspace selectors: first:k | last:k | file:path (rows are basis vectors)
std::vector<Vec> parse_span_arg(const std::string& s, int n) {
  auto tail_count = [&](const std::string& t) {
    int k = std::stoi(t);
    if (k < 0 || k > n) throw ParseError("selector count out of range in '" + s + "'");
    return k;
  };
  if (s.rfind("first:", 0) == 0) {
    int k = tail_count(s.substr(6));
    std::vector<Vec> out;
    for (int i = 0; i < k; ++i) out.push_back(unit_vec(n, i));
    return out;
  }
  if (s.rfind("last:", 0) == 0) {
    int k = tail_count(s.substr(5));
    std::vector<Vec> out;
    for (int i = n - k; i < n; ++i) out.push_back(unit_vec(n, i));
    return out;
  }
  if (s.rfind("file:", 0) == 0) {
    AlgebraFile f = load_algebra_file(s.substr(5));
    if (f.kind != FileKind::Matrix || f.matrices.at(0).cols() != n)
      throw ParseError("expected a matrix file with " + std::to_string(n) +
                       " columns in " + s);
    std::vector<Vec> out;
    for (int i = 0; i < f.matrices.at(0).rows(); ++i) out.push_back(f.matrices.at(0).row(i));
    return out;
  }
  throw ParseError("bad span selector '" + s + "' (want first:k, last:k or file:)");
}

// Representation argument: a file path, or the literals adjoint / coadjoint
// built from the algebra.
Representation resolve_rep(const std::string& arg, const ThreeBihomLieAlgebra& a) {
  if (arg == "adjoint") return adjoint_rep(a).rep;
  if (arg == "coadjoint") return coadjoint_rep(a).rep;
  return load_algebra_file(arg).as_representation();
}

std::string default_out(const std::string& input, const std::string& suffix) {
  size_t dot = input.rfind('.');
  size_t slash = input.find_last_of('/');
  std::string stem = (dot == std::string::npos ||
                      (slash != std::string::npos && dot < slash))
                         ? input
                         : input.substr(0, dot);
  return stem + "." + suffix + ".alg";
}

std::string series_dims(const std::vector<std::vector<Vec>>& members) {
  std::string out;
  for (const auto& m : members) {
    if (!out.empty()) out += " ";
    out += std::to_string(m.size());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  {
    std::ostringstream echo;
    for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
    g_command_echo = echo.str();
  }

  CLI::App app{"Exact checker and construction tool for ternary bracket algebras"};
  app.require_subcommand(1);
  int exit_code = 0;
  auto start = std::chrono::steady_clock::now();

  // ---- check ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("check", "Run the axiom scan for a definition file");
    auto file = std::make_shared<std::string>();
    cmd->add_option("file", *file, "definition file")->required();
    cmd->callback([=, &exit_code, &start] {
      AlgebraFile f = load_algebra_file(*file);
      echo_provenance({*file});
      AxiomReport rep;
      switch (f.kind) {
        case FileKind::ThreeBihomLie: {
          ThreeBihomLieAlgebra a = f.as_three_bihom();
          rep = check_three_bihom_lie(a);
          if (f.has_gram) rep.merge(check_quadratic(a, f.as_form()));
          break;
        }
        case FileKind::BihomLie:
          rep = check_bihom_lie(f.as_bihom());
          break;
        case FileKind::TotallyAssoc:
          rep = check_totally_assoc(f.as_assoc());
          break;
        default:
          throw ParseError("check expects an algebra file, got kind " + kind_name(f.kind));
      }
      exit_code = finish(rep, start);
    });
  }

  // ---- check-assoc ----------------------------------------------------
  {
    auto* cmd = app.add_subcommand("check-assoc", "Axioms of a ternary associative product");
    auto file = std::make_shared<std::string>();
    auto tc = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "totally_assoc file")->required();
    cmd->add_flag("--tensor-condition", *tc, "also check the tensor-factor symmetry");
    cmd->callback([=, &exit_code, &start] {
      TotallyBihomAssocAlgebra a = load_algebra_file(*file).as_assoc();
      echo_provenance({*file});
      AxiomReport rep = check_totally_assoc(a);
      if (*tc) rep.merge(check_tensor_condition(a));
      exit_code = finish(rep, start);
    });
  }

  // ---- check-rep ------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("check-rep", "Representation conditions over an algebra");
    auto alg = std::make_shared<std::string>();
    auto rep_arg = std::make_shared<std::string>();
    cmd->add_option("algebra", *alg, "three_bihom_lie file")->required();
    cmd->add_option("rep", *rep_arg, "representation file, or adjoint / coadjoint")
        ->required();
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*alg).as_three_bihom();
      Representation r = resolve_rep(*rep_arg, a);
      echo_provenance({*alg});
      exit_code = finish(check_representation(a, r), start);
    });
  }

  // ---- check-cocycle --------------------------------------------------
  {
    auto* cmd = app.add_subcommand("check-cocycle", "Cocycle conditions over (algebra, rep)");
    auto alg = std::make_shared<std::string>();
    auto rep_arg = std::make_shared<std::string>();
    auto coc = std::make_shared<std::string>();
    cmd->add_option("algebra", *alg)->required();
    cmd->add_option("rep", *rep_arg, "representation file, or adjoint / coadjoint")
        ->required();
    cmd->add_option("cocycle", *coc)->required();
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*alg).as_three_bihom();
      Representation r = resolve_rep(*rep_arg, a);
      Cocycle th = load_algebra_file(*coc).as_cocycle();
      echo_provenance({*alg, *coc});
      exit_code = finish(check_cocycle(a, r, th), start);
    });
  }

  // ---- twist family ---------------------------------------------------
  auto add_twist = [&](const char* name, const char* help, bool yau) {
    auto* cmd = app.add_subcommand(name, help);
    auto file = std::make_shared<std::string>();
    auto sa = std::make_shared<std::string>();
    auto sb = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("file", *file)->required();
    cmd->add_option("--alpha", *sa, "twisting map (id, diag:, rows:, file:)")->required();
    cmd->add_option("--beta", *sb, "twisting map")->required();
    cmd->add_option("--out", *out, "output path");
    std::string suffix = name;
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*file).as_three_bihom();
      Mat ma = parse_matrix_arg(*sa, a.n), mb = parse_matrix_arg(*sb, a.n);
      ThreeBihomLieAlgebra t = yau ? yau_twist(a, ma, mb) : twist(a, ma, mb);
      std::string path = out->empty() ? default_out(*file, suffix) : *out;
      save_algebra_file(path, to_file(t), provenance({*file}));
      echo_provenance({*file});
      std::cout << "out " << path << "\n";
      exit_code = finish(check_three_bihom_lie(t), start);
    });
  };
  add_twist("twist", "Compose the structure with extra commuting multiplicative maps", false);
  add_twist("yau-twist", "Build a twisted structure from an untwisted bracket", true);

  {
    auto* cmd = app.add_subcommand("power-twist", "Twist by powers of the structure maps");
    auto file = std::make_shared<std::string>();
    auto k = std::make_shared<int>(1);
    auto out = std::make_shared<std::string>();
    cmd->add_option("file", *file)->required();
    cmd->add_option("--k", *k, "power (default 1)");
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*file).as_three_bihom();
      ThreeBihomLieAlgebra t = power_twist(a, *k);
      std::string path = out->empty() ? default_out(*file, "power-twist") : *out;
      save_algebra_file(path, to_file(t), provenance({*file}));
      echo_provenance({*file});
      std::cout << "out " << path << "\n";
      exit_code = finish(check_three_bihom_lie(t), start);
    });
  }

  // ---- tensor / dsum --------------------------------------------------
  {
    auto* cmd = app.add_subcommand("tensor", "Tensor a ternary associative factor with an algebra");
    auto fa = std::make_shared<std::string>();
    auto fb = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("assoc", *fa, "totally_assoc file")->required();
    cmd->add_option("algebra", *fb, "three_bihom_lie file")->required();
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      TotallyBihomAssocAlgebra t = load_algebra_file(*fa).as_assoc();
      ThreeBihomLieAlgebra a = load_algebra_file(*fb).as_three_bihom();
      ThreeBihomLieAlgebra prod = tensor_product(t, a);
      std::string path = out->empty() ? default_out(*fb, "tensor") : *out;
      save_algebra_file(path, to_file(prod), provenance({*fa, *fb}));
      echo_provenance({*fa, *fb});
      std::cout << "out " << path << "\n";
      exit_code = finish(check_three_bihom_lie(prod), start);
    });
  }
  {
    auto* cmd = app.add_subcommand("dsum", "Direct sum of two algebras");
    auto fa = std::make_shared<std::string>();
    auto fb = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("first", *fa)->required();
    cmd->add_option("second", *fb)->required();
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*fa).as_three_bihom();
      ThreeBihomLieAlgebra b = load_algebra_file(*fb).as_three_bihom();
      ThreeBihomLieAlgebra s = direct_sum(a, b);
      std::string path = out->empty() ? default_out(*fa, "dsum") : *out;
      save_algebra_file(path, to_file(s), provenance({*fa, *fb}));
      echo_provenance({*fa, *fb});
      std::cout << "out " << path << "\n";
      exit_code = finish(check_three_bihom_lie(s), start);
    });
  }

  // ---- induce-binary --------------------------------------------------
  {
    auto* cmd = app.add_subcommand("induce-binary",
                                   "Binary bracket [x,y] = [a,x,y] at a fixed point a");
    auto file = std::make_shared<std::string>();
    auto av = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("file", *file)->required();
    cmd->add_option("--a", *av, "fixed point (e<i>, vec: or file:)")->required();
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*file).as_three_bihom();
      Vec v = parse_vector_arg(*av, a.n);
      BihomLieAlgebra b = induced_binary(a, v);
      std::string path = out->empty() ? default_out(*file, "binary") : *out;
      save_algebra_file(path, to_file(b), provenance({*file}));
      echo_provenance({*file});
      std::cout << "out " << path << "\n";
      exit_code = finish(check_bihom_lie(b), start);
    });
  }

  // ---- derivations ----------------------------------------------------
  {
    auto* cmd = app.add_subcommand("der-space", "Basis of the twisted derivation space");
    auto file = std::make_shared<std::string>();
    auto k = std::make_shared<int>(0);
    auto l = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("file", *file)->required();
    cmd->add_option("--k", *k, "alpha exponent (default 0)");
    cmd->add_option("--l", *l, "beta exponent (default 0)");
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*file).as_three_bihom();
      DerivationSpace d = derivation_space(a, *k, *l);
      std::string path = out->empty() ? default_out(*file, "derspace") : *out;
      save_algebra_file(path, to_file_matrix_list(d.basis, a.n, a.n), provenance({*file}));
      echo_provenance({*file});
      std::cout << "out " << path << "\n";
      std::cout << "space-dim " << d.dim() << "\n";
      AxiomReport rep;
      rep.axioms = {"derivation.commute.alpha", "derivation.commute.beta",
                    "derivation.leibniz"};
      for (const Mat& m : d.basis) {
        AxiomReport sub = is_derivation(m, a, *k, *l);
        rep.violations.insert(rep.violations.end(), sub.violations.begin(),
                              sub.violations.end());
      }
      exit_code = finish(rep, start);
    });
  }
  {
    auto* cmd = app.add_subcommand("inner-der",
                                   "Inner derivation w -> [u1, u2, a^k b^l w]");
    auto file = std::make_shared<std::string>();
    auto u1 = std::make_shared<std::string>();
    auto u2 = std::make_shared<std::string>();
    auto k = std::make_shared<int>(0);
    auto l = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("file", *file)->required();
    cmd->add_option("--u1", *u1, "fixed point")->required();
    cmd->add_option("--u2", *u2, "fixed point")->required();
    cmd->add_option("--k", *k);
    cmd->add_option("--l", *l);
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*file).as_three_bihom();
      Mat d = inner_derivation(a, parse_vector_arg(*u1, a.n), parse_vector_arg(*u2, a.n),
                               *k, *l);
      std::string path = out->empty() ? default_out(*file, "innerder") : *out;
      save_algebra_file(path, to_file_matrix(d), provenance({*file}));
      echo_provenance({*file});
      std::cout << "out " << path << "\n";
      exit_code = finish(is_derivation(d, a, *k, *l + 1), start);
    });
  }

  // ---- representation constructions -----------------------------------
  {
    auto* cmd = app.add_subcommand("semidirect", "Semidirect product algebra on L + M");
    auto alg = std::make_shared<std::string>();
    auto rep_arg = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("algebra", *alg)->required();
    cmd->add_option("rep", *rep_arg)->required();
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*alg).as_three_bihom();
      Representation r = resolve_rep(*rep_arg, a);
      ThreeBihomLieAlgebra s = semidirect_product(a, r);
      std::string path = out->empty() ? default_out(*alg, "semidirect") : *out;
      save_algebra_file(path, to_file(s), provenance({*alg}));
      echo_provenance({*alg});
      std::cout << "out " << path << "\n";
      exit_code = finish(check_three_bihom_lie(s), start);
    });
  }
  {
    auto* cmd = app.add_subcommand("textend", "Extension of the semidirect bracket by a cocycle");
    auto alg = std::make_shared<std::string>();
    auto rep_arg = std::make_shared<std::string>();
    auto coc = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("algebra", *alg)->required();
    cmd->add_option("rep", *rep_arg)->required();
    cmd->add_option("cocycle", *coc)->required();
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*alg).as_three_bihom();
      Representation r = resolve_rep(*rep_arg, a);
      Cocycle th = load_algebra_file(*coc).as_cocycle();
      ThreeBihomLieAlgebra e = t_theta_extension(a, r, th);
      std::string path = out->empty() ? default_out(*alg, "textend") : *out;
      save_algebra_file(path, to_file(e), provenance({*alg, *coc}));
      echo_provenance({*alg, *coc});
      std::cout << "out " << path << "\n";
      exit_code = finish(check_three_bihom_lie(e), start);
    });
  }
  {
    auto* cmd = app.add_subcommand("coboundary",
                                   "Cocycle induced by a module-valued linear map");
    auto alg = std::make_shared<std::string>();
    auto rep_arg = std::make_shared<std::string>();
    auto fm = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("algebra", *alg)->required();
    cmd->add_option("rep", *rep_arg)->required();
    cmd->add_option("--f", *fm, "matrix file with the map L -> M")->required();
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*alg).as_three_bihom();
      Representation r = resolve_rep(*rep_arg, a);
      AlgebraFile ff = load_algebra_file(*fm);
      if (ff.kind != FileKind::Matrix) throw ParseError("--f expects a matrix file");
      Cocycle th = coboundary_cocycle(a, r, ff.matrices.at(0));
      std::string path = out->empty() ? default_out(*alg, "coboundary") : *out;
      save_algebra_file(path, to_file_cocycle(th, r.module_dim()),
                        provenance({*alg, *fm}));
      echo_provenance({*alg, *fm});
      std::cout << "out " << path << "\n";
      exit_code = finish(check_cocycle(a, r, th), start);
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "sigma", "Isomorphism between extensions differing by a coboundary");
    auto alg = std::make_shared<std::string>();
    auto rep_arg = std::make_shared<std::string>();
    auto coc = std::make_shared<std::string>();
    auto fm = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("algebra", *alg)->required();
    cmd->add_option("rep", *rep_arg)->required();
    cmd->add_option("cocycle", *coc)->required();
    cmd->add_option("--f", *fm, "matrix file with the map L -> M")->required();
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*alg).as_three_bihom();
      Representation r = resolve_rep(*rep_arg, a);
      Cocycle th = load_algebra_file(*coc).as_cocycle();
      AlgebraFile ff = load_algebra_file(*fm);
      if (ff.kind != FileKind::Matrix) throw ParseError("--f expects a matrix file");
      MapWithReport iso = extension_isomorphism(a, r, th, ff.matrices.at(0));
      std::string path = out->empty() ? default_out(*alg, "sigma") : *out;
      save_algebra_file(path, to_file_matrix(iso.map), provenance({*alg, *coc, *fm}));
      echo_provenance({*alg, *coc, *fm});
      std::cout << "out " << path << "\n";
      exit_code = finish(iso.report, start);
    });
  }

  // ---- duals ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("dual-rep", "Dual representation on M*");
    auto alg = std::make_shared<std::string>();
    auto rep_arg = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("algebra", *alg)->required();
    cmd->add_option("rep", *rep_arg)->required();
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*alg).as_three_bihom();
      Representation r = resolve_rep(*rep_arg, a);
      RepWithReport d = dual_representation(a, r);
      std::string path = out->empty() ? default_out(*alg, "dual") : *out;
      save_algebra_file(path, to_file(d.rep), provenance({*alg}));
      echo_provenance({*alg});
      std::cout << "out " << path << "\n";
      exit_code = finish(d.report, start);
    });
  }
  {
    auto* cmd = app.add_subcommand("coadjoint", "Dual of the adjoint representation");
    auto alg = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("algebra", *alg)->required();
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*alg).as_three_bihom();
      RepWithReport d = coadjoint_rep(a);
      std::string path = out->empty() ? default_out(*alg, "coadjoint") : *out;
      save_algebra_file(path, to_file(d.rep), provenance({*alg}));
      echo_provenance({*alg});
      std::cout << "out " << path << "\n";
      exit_code = finish(d.report, start);
    });
  }

  // ---- series ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("series", "Derived and descending series dimensions");
    auto alg = std::make_shared<std::string>();
    auto steps = std::make_shared<int>(-1);
    cmd->add_option("algebra", *alg)->required();
    cmd->add_option("--max-steps", *steps, "bracket steps (default dim+1)");
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*alg).as_three_bihom();
      int ms = *steps < 0 ? a.n + 1 : *steps;
      echo_provenance({*alg});
      auto der = derived_series(a, ms);
      auto des = descending_series(a, ms);
      std::cout << "derived-dims " << series_dims(der) << "\n";
      std::cout << "descending-dims " << series_dims(des) << "\n";
      std::cout << "solvable " << (der.back().empty() ? "yes" : "no") << "\n";
      std::cout << "nilpotent " << (des.back().empty() ? "yes" : "no") << "\n";
      exit_code = finish(AxiomReport{}, start);
    });
  }

  // ---- tstar ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "tstar", "Extension by the coadjoint module with the hyperbolic form");
    auto alg = std::make_shared<std::string>();
    auto coc = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("algebra", *alg)->required();
    cmd->add_option("--theta", *coc, "dual-valued cocycle file (default zero)");
    cmd->add_option("--out", *out);
    cmd->callback([=, &exit_code, &start] {
      ThreeBihomLieAlgebra a = load_algebra_file(*alg).as_three_bihom();
      Cocycle th = coc->empty() ? Cocycle(a.n, a.n) : load_algebra_file(*coc).as_cocycle();
      QuadraticAlgebra q = t_star_extension(a, th);
      std::string path = out->empty() ? default_out(*alg, "tstar") : *out;
      std::vector<std::string> inputs{*alg};
      if (!coc->empty()) inputs.push_back(*coc);
      save_algebra_file(path, to_file(q), provenance(inputs));
      echo_provenance(inputs);
      std::cout << "out " << path << "\n";
      AxiomReport rep = check_three_bihom_lie(q.algebra);
      rep.merge(check_quadratic(q.algebra, q.form));
      exit_code = finish(rep, start);
    });
  }

  // ---- reconstruct ----------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "reconstruct", "Split a quadratic algebra along an isotropic ideal");
    auto alg = std::make_shared<std::string>();
    auto ideal = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("algebra", *alg, "three_bihom_lie file with a gram block")->required();
    cmd->add_option("--ideal", *ideal, "first:k, last:k or file:")->required();
    cmd->add_option("--out", *out, "output prefix (default input stem)");
    cmd->callback([=, &exit_code, &start] {
      AlgebraFile f = load_algebra_file(*alg);
      QuadraticAlgebra q = f.as_quadratic();
      std::vector<Vec> span = parse_span_arg(*ideal, q.algebra.n);
      Reconstruction rec = reconstruct(q, span);
      std::string stem = out->empty() ? default_out(*alg, "X") : *out + ".X.alg";
      auto with = [&](const std::string& tag) {
        std::string p = stem;
        p.replace(p.rfind("X.alg"), 5, tag + ".alg");
        return p;
      };
      auto header = provenance({*alg});
      save_algebra_file(with("base"), to_file(rec.base), header);
      save_algebra_file(with("theta"), to_file_cocycle(rec.theta, rec.base.n), header);
      save_algebra_file(with("phi"), to_file_matrix(rec.phi), header);
      echo_provenance({*alg});
      std::cout << "out " << with("base") << "\n";
      std::cout << "out " << with("theta") << "\n";
      std::cout << "out " << with("phi") << "\n";
      exit_code = finish(rec.report, start);
    });
  }

  // ---- isometry -------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("isometry", "Check a map between quadratic algebras");
    auto phi = std::make_shared<std::string>();
    auto q1f = std::make_shared<std::string>();
    auto q2f = std::make_shared<std::string>();
    cmd->add_option("phi", *phi, "matrix file")->required();
    cmd->add_option("from", *q1f, "three_bihom_lie file with gram")->required();
    cmd->add_option("to", *q2f, "three_bihom_lie file with gram")->required();
    cmd->callback([=, &exit_code, &start] {
      AlgebraFile pf = load_algebra_file(*phi);
      if (pf.kind != FileKind::Matrix) throw ParseError("phi must be a matrix file");
      QuadraticAlgebra q1 = load_algebra_file(*q1f).as_quadratic();
      QuadraticAlgebra q2 = load_algebra_file(*q2f).as_quadratic();
      echo_provenance({*phi, *q1f, *q2f});
      exit_code = finish(is_isometry(pf.matrices.at(0), q1, q2), start);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
