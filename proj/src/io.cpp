#include "bihom/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "bihom/errors.hpp"

namespace bihom {

std::string kind_name(FileKind k) {
  switch (k) {
    case FileKind::ThreeBihomLie: return "three_bihom_lie";
    case FileKind::BihomLie: return "bihom_lie";
    case FileKind::TotallyAssoc: return "totally_assoc";
    case FileKind::Representation: return "representation";
    case FileKind::Cocycle: return "cocycle";
    case FileKind::BilinearForm: return "bilinear_form";
    case FileKind::Matrix: return "matrix";
    case FileKind::MatrixList: return "matrix_list";
  }
  throw Error("unknown file kind");
}

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back({tok, no});
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  bool done() const { return pos_ >= toks_.size(); }
  int line() const { return done() ? last_line() : toks_[pos_].line; }

  const std::string& next(const char* what) {
    if (done()) fail(last_line(), std::string("unexpected end of file, expected ") + what);
    return toks_[pos_++].text;
  }

  int next_int(const char* what) {
    int ln = line();
    const std::string& t = next(what);
    try {
      size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      fail(ln, std::string("expected integer ") + what + ", got '" + t + "'");
    }
  }

  Rat next_rat(const char* what) {
    int ln = line();
    const std::string& t = next(what);
    try {
      return parse_rat(t);
    } catch (const ParseError&) {
      fail(ln, std::string("expected rational ") + what + ", got '" + t + "'");
    }
  }

 private:
  int last_line() const { return toks_.empty() ? 1 : toks_.back().line; }
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

FileKind kind_from(const std::string& s, int line) {
  for (FileKind k :
       {FileKind::ThreeBihomLie, FileKind::BihomLie, FileKind::TotallyAssoc,
        FileKind::Representation, FileKind::Cocycle, FileKind::BilinearForm,
        FileKind::Matrix, FileKind::MatrixList})
    if (kind_name(k) == s) return k;
  fail(line, "unknown kind '" + s + "'");
}

Mat read_dense(Cursor& c, int rows, int cols, const char* what) {
  int ln = c.line();
  if (c.next(what) != "dense") fail(ln, std::string(what) + " block must be 'dense'");
  if (rows <= 0 || cols <= 0) fail(ln, std::string("dimension not set before ") + what);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = c.next_rat(what);
  return m;
}

int read_index(Cursor& c, int bound, const char* what) {
  int ln = c.line();
  int v = c.next_int(what);
  if (v < 1 || v > bound)
    fail(ln, std::string(what) + " index " + std::to_string(v) + " out of range 1.." +
                 std::to_string(bound));
  return v - 1;
}

}  // namespace

AlgebraFile parse_algebra_file(std::istream& in) {
  Cursor c(tokenize(in));
  AlgebraFile f;
  int kind_line = c.line();
  if (c.next("kind") != "kind") fail(kind_line, "file must start with a kind line");
  f.kind = kind_from(c.next("kind name"), kind_line);

  bool tri_sized = false, bi_sized = false, rho_sized = false;
  int declared_count = -1;
  auto need_dims = [&](int line) {
    if (f.dim <= 0) fail(line, "dim must be declared first");
    if ((f.kind == FileKind::Representation || f.kind == FileKind::Cocycle) && f.mdim <= 0)
      fail(line, "mdim must be declared first");
  };
  auto size_tensors = [&] {
    if (f.kind == FileKind::ThreeBihomLie || f.kind == FileKind::TotallyAssoc) {
      f.tri = TriTensor(f.dim, f.dim);
      tri_sized = true;
    } else if (f.kind == FileKind::Cocycle) {
      f.tri = TriTensor(f.dim, f.mdim);
      tri_sized = true;
    } else if (f.kind == FileKind::BihomLie) {
      f.bi = BiTensor(f.dim, f.dim);
      bi_sized = true;
    } else if (f.kind == FileKind::Representation) {
      f.rho.assign(size_t(f.dim) * f.dim, Mat(f.mdim, f.mdim));
      rho_sized = true;
    }
  };

  while (!c.done()) {
    int ln = c.line();
    std::string key = c.next("directive");
    if (key == "dim" || key == "rows") {
      f.dim = c.next_int(key.c_str());
      if (f.dim <= 0) fail(ln, key + " must be positive");
    } else if (key == "mdim" || key == "cols") {
      f.mdim = c.next_int(key.c_str());
      if (f.mdim <= 0) fail(ln, key + " must be positive");
    } else if (key == "count") {
      declared_count = c.next_int("count");
      if (declared_count < 0) fail(ln, "count must be non-negative");
    } else if (key == "alpha" || key == "alpha_m") {
      need_dims(ln);
      int d = f.kind == FileKind::Representation ? f.mdim : f.dim;
      f.alpha = read_dense(c, d, d, key.c_str());
    } else if (key == "beta" || key == "beta_m") {
      need_dims(ln);
      int d = f.kind == FileKind::Representation ? f.mdim : f.dim;
      f.beta = read_dense(c, d, d, key.c_str());
    } else if (key == "gram" || key == "g") {
      need_dims(ln);
      if (f.kind != FileKind::BilinearForm && f.kind != FileKind::ThreeBihomLie)
        fail(ln, "gram block not allowed for kind " + kind_name(f.kind));
      f.gram = read_dense(c, f.dim, f.dim, "gram");
      f.has_gram = true;
    } else if (key == "entries") {
      if (f.kind != FileKind::Matrix && f.kind != FileKind::MatrixList)
        fail(ln, "entries block only allowed for matrix kinds");
      if (f.dim <= 0 || f.mdim <= 0) fail(ln, "rows and cols must be declared first");
      f.matrices.push_back(read_dense(c, f.dim, f.mdim, "entries"));
    } else if (key == "c") {
      need_dims(ln);
      if (f.kind == FileKind::ThreeBihomLie || f.kind == FileKind::TotallyAssoc) {
        if (!tri_sized) size_tensors();
        int i = read_index(c, f.dim, "c");
        int j = read_index(c, f.dim, "c");
        int k = read_index(c, f.dim, "c");
        int l = read_index(c, f.dim, "c");
        f.tri.at(i, j, k, l) = c.next_rat("c value");
      } else if (f.kind == FileKind::BihomLie) {
        if (!bi_sized) size_tensors();
        int i = read_index(c, f.dim, "c");
        int j = read_index(c, f.dim, "c");
        int l = read_index(c, f.dim, "c");
        f.bi.at(i, j, l) = c.next_rat("c value");
      } else {
        fail(ln, "c records not allowed for kind " + kind_name(f.kind));
      }
    } else if (key == "rho") {
      if (f.kind != FileKind::Representation)
        fail(ln, "rho records only allowed for representations");
      need_dims(ln);
      if (!rho_sized) size_tensors();
      int i = read_index(c, f.dim, "rho");
      int j = read_index(c, f.dim, "rho");
      if (i >= j) fail(ln, "rho records must have first index < second");
      int r = read_index(c, f.mdim, "rho");
      int col = read_index(c, f.mdim, "rho");
      f.rho[size_t(i) * f.dim + j](r, col) = c.next_rat("rho value");
    } else if (key == "theta") {
      if (f.kind != FileKind::Cocycle) fail(ln, "theta records only allowed for cocycles");
      need_dims(ln);
      if (!tri_sized) size_tensors();
      int i = read_index(c, f.dim, "theta");
      int j = read_index(c, f.dim, "theta");
      int k = read_index(c, f.dim, "theta");
      int r = read_index(c, f.mdim, "theta");
      f.tri.at(i, j, k, r) = c.next_rat("theta value");
    } else {
      fail(ln, "unknown directive '" + key + "'");
    }
  }

  if (f.dim <= 0) fail(c.line(), "file declares no dimension");
  if (!tri_sized && !bi_sized && !rho_sized) size_tensors();
  if (f.kind == FileKind::Representation) {
    for (int i = 0; i < f.dim; ++i)
      for (int j = i + 1; j < f.dim; ++j)
        f.rho[size_t(j) * f.dim + i] = -f.rho[size_t(i) * f.dim + j];
  }

  auto require_map = [&](const Mat& m, const char* what) {
    if (m.rows() == 0) fail(c.line(), std::string("missing ") + what + " block");
  };
  switch (f.kind) {
    case FileKind::ThreeBihomLie:
    case FileKind::BihomLie:
    case FileKind::TotallyAssoc:
      require_map(f.alpha, "alpha");
      require_map(f.beta, "beta");
      break;
    case FileKind::Representation:
      require_map(f.alpha, "alpha_m");
      require_map(f.beta, "beta_m");
      break;
    case FileKind::BilinearForm:
      if (!f.has_gram) fail(c.line(), "missing gram block");
      break;
    case FileKind::Matrix:
      if (f.matrices.size() != 1) fail(c.line(), "matrix file needs exactly one entries block");
      break;
    case FileKind::MatrixList:
      if (declared_count >= 0 && int(f.matrices.size()) != declared_count)
        fail(c.line(), "count does not match the number of entries blocks");
      break;
    case FileKind::Cocycle:
      break;
  }
  return f;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return parse_algebra_file(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + std::string(e.what()).substr(std::string("parse error: ").size()));
  }
}

ThreeBihomLieAlgebra AlgebraFile::as_three_bihom() const {
  if (kind != FileKind::ThreeBihomLie)
    throw ParseError("expected a three_bihom_lie file, got " + kind_name(kind));
  return ThreeBihomLieAlgebra(dim, tri, alpha, beta);
}

BihomLieAlgebra AlgebraFile::as_bihom() const {
  if (kind != FileKind::BihomLie)
    throw ParseError("expected a bihom_lie file, got " + kind_name(kind));
  return BihomLieAlgebra(dim, bi, alpha, beta);
}

TotallyBihomAssocAlgebra AlgebraFile::as_assoc() const {
  if (kind != FileKind::TotallyAssoc)
    throw ParseError("expected a totally_assoc file, got " + kind_name(kind));
  return TotallyBihomAssocAlgebra(dim, tri, alpha, beta);
}

Representation AlgebraFile::as_representation() const {
  if (kind != FileKind::Representation)
    throw ParseError("expected a representation file, got " + kind_name(kind));
  return Representation(dim, mdim, rho, alpha, beta);
}

Cocycle AlgebraFile::as_cocycle() const {
  if (kind != FileKind::Cocycle)
    throw ParseError("expected a cocycle file, got " + kind_name(kind));
  return tri;
}

BilinearForm AlgebraFile::as_form() const {
  if (kind == FileKind::BilinearForm || (kind == FileKind::ThreeBihomLie && has_gram))
    return BilinearForm{gram};
  throw ParseError("expected a bilinear_form file or a gram block, got " + kind_name(kind));
}

QuadraticAlgebra AlgebraFile::as_quadratic() const {
  if (kind != FileKind::ThreeBihomLie)
    throw ParseError("expected a three_bihom_lie file, got " + kind_name(kind));
  if (!has_gram) throw ParseError("three_bihom_lie file carries no gram block");
  return QuadraticAlgebra{as_three_bihom(), BilinearForm{gram}};
}

namespace {

void emit_dense(std::ostream& out, const std::string& name, const Mat& m) {
  out << name << " dense\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << rat_str(m(i, j));
    out << "\n";
  }
}

}  // namespace

std::string print_algebra_file(const AlgebraFile& f, const std::vector<std::string>& header) {
  std::ostringstream out;
  for (const std::string& h : header) out << "# " << h << "\n";
  out << "kind " << kind_name(f.kind) << "\n";
  switch (f.kind) {
    case FileKind::ThreeBihomLie:
    case FileKind::TotallyAssoc:
      out << "dim " << f.dim << "\n";
      emit_dense(out, "alpha", f.alpha);
      emit_dense(out, "beta", f.beta);
      for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j)
          for (int k = 0; k < f.dim; ++k)
            for (int l = 0; l < f.dim; ++l)
              if (f.tri.at(i, j, k, l) != 0)
                out << "c " << i + 1 << " " << j + 1 << " " << k + 1 << " " << l + 1
                    << " " << rat_str(f.tri.at(i, j, k, l)) << "\n";
      if (f.has_gram) emit_dense(out, "gram", f.gram);
      break;
    case FileKind::BihomLie:
      out << "dim " << f.dim << "\n";
      emit_dense(out, "alpha", f.alpha);
      emit_dense(out, "beta", f.beta);
      for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j)
          for (int l = 0; l < f.dim; ++l)
            if (f.bi.at(i, j, l) != 0)
              out << "c " << i + 1 << " " << j + 1 << " " << l + 1 << " "
                  << rat_str(f.bi.at(i, j, l)) << "\n";
      break;
    case FileKind::Representation:
      out << "dim " << f.dim << "\n";
      out << "mdim " << f.mdim << "\n";
      emit_dense(out, "alpha_m", f.alpha);
      emit_dense(out, "beta_m", f.beta);
      for (int i = 0; i < f.dim; ++i)
        for (int j = i + 1; j < f.dim; ++j) {
          const Mat& r = f.rho[size_t(i) * f.dim + j];
          for (int a = 0; a < f.mdim; ++a)
            for (int b = 0; b < f.mdim; ++b)
              if (r(a, b) != 0)
                out << "rho " << i + 1 << " " << j + 1 << " " << a + 1 << " " << b + 1
                    << " " << rat_str(r(a, b)) << "\n";
        }
      break;
    case FileKind::Cocycle:
      out << "dim " << f.dim << "\n";
      out << "mdim " << f.mdim << "\n";
      for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j)
          for (int k = 0; k < f.dim; ++k)
            for (int r = 0; r < f.mdim; ++r)
              if (f.tri.at(i, j, k, r) != 0)
                out << "theta " << i + 1 << " " << j + 1 << " " << k + 1 << " " << r + 1
                    << " " << rat_str(f.tri.at(i, j, k, r)) << "\n";
      break;
    case FileKind::BilinearForm:
      out << "dim " << f.dim << "\n";
      emit_dense(out, "gram", f.gram);
      break;
    case FileKind::Matrix:
      out << "rows " << f.dim << "\n";
      out << "cols " << f.mdim << "\n";
      emit_dense(out, "entries", f.matrices.at(0));
      break;
    case FileKind::MatrixList:
      out << "count " << f.matrices.size() << "\n";
      out << "rows " << f.dim << "\n";
      out << "cols " << f.mdim << "\n";
      for (const Mat& m : f.matrices) emit_dense(out, "entries", m);
      break;
  }
  return out.str();
}

void save_algebra_file(const std::string& path, const AlgebraFile& f,
                       const std::vector<std::string>& header) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << print_algebra_file(f, header);
}

AlgebraFile to_file(const ThreeBihomLieAlgebra& a) {
  AlgebraFile f;
  f.kind = FileKind::ThreeBihomLie;
  f.dim = a.n;
  f.tri = a.bracket;
  f.alpha = a.alpha;
  f.beta = a.beta;
  return f;
}

AlgebraFile to_file(const BihomLieAlgebra& a) {
  AlgebraFile f;
  f.kind = FileKind::BihomLie;
  f.dim = a.n;
  f.bi = a.bracket;
  f.alpha = a.alpha;
  f.beta = a.beta;
  return f;
}

AlgebraFile to_file(const TotallyBihomAssocAlgebra& a) {
  AlgebraFile f;
  f.kind = FileKind::TotallyAssoc;
  f.dim = a.n;
  f.tri = a.product;
  f.alpha = a.alpha;
  f.beta = a.beta;
  return f;
}

AlgebraFile to_file(const Representation& r) {
  AlgebraFile f;
  f.kind = FileKind::Representation;
  f.dim = r.algebra_dim();
  f.mdim = r.module_dim();
  f.rho.reserve(size_t(f.dim) * f.dim);
  for (int i = 0; i < f.dim; ++i)
    for (int j = 0; j < f.dim; ++j) f.rho.push_back(r.rho(i, j));
  f.alpha = r.alpha_m();
  f.beta = r.beta_m();
  return f;
}

AlgebraFile to_file_cocycle(const Cocycle& theta, int module_dim) {
  AlgebraFile f;
  f.kind = FileKind::Cocycle;
  f.dim = theta.dim_in();
  f.mdim = module_dim;
  if (theta.dim_out() != module_dim) throw DimensionMismatch("cocycle module dimension");
  f.tri = theta;
  return f;
}

AlgebraFile to_file(const BilinearForm& form) {
  AlgebraFile f;
  f.kind = FileKind::BilinearForm;
  f.dim = form.gram.rows();
  f.gram = form.gram;
  f.has_gram = true;
  return f;
}

AlgebraFile to_file(const QuadraticAlgebra& q) {
  AlgebraFile f = to_file(q.algebra);
  f.gram = q.form.gram;
  f.has_gram = true;
  return f;
}

AlgebraFile to_file_matrix(const Mat& m) {
  AlgebraFile f;
  f.kind = FileKind::Matrix;
  f.dim = m.rows();
  f.mdim = m.cols();
  f.matrices.push_back(m);
  return f;
}

AlgebraFile to_file_matrix_list(const std::vector<Mat>& ms, int rows, int cols) {
  AlgebraFile f;
  f.kind = FileKind::MatrixList;
  f.dim = rows;
  f.mdim = cols;
  f.matrices = ms;
  return f;
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const std::string& bytes) {
  static const char* hex = "0123456789abcdef";
  uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return digest_hex(buf.str());
}

namespace {

void emit_violation(std::ostream& out, const char* tag, const Violation& v) {
  out << tag << " " << v.axiom << " witness";
  for (int w : v.witness) out << " " << w;
  out << " lhs";
  for (const Rat& x : v.lhs) out << " " << rat_str(x);
  out << " rhs";
  for (const Rat& x : v.rhs) out << " " << rat_str(x);
  out << "\n";
}

}  // namespace

void print_report(std::ostream& out, const AxiomReport& rep, long long elapsed_ms) {
  for (const std::string& id : rep.axioms)
    out << "axiom " << id << " " << (rep.axiom_passed(id) ? "pass" : "fail") << "\n";
  for (const Violation& v : rep.violations) emit_violation(out, "violation", v);
  for (const Violation& v : rep.notes) emit_violation(out, "note", v);
  out << "result " << (rep.passed() ? "pass" : "fail") << "\n";
  out << "time-ms " << elapsed_ms << "\n";
}

}  // namespace bihom
