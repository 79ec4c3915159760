#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "bihom/quadratic.hpp"

namespace bihom {

/// File kinds understood by the text format. The first six carry algebraic
/// objects; matrix and matrix_list carry raw linear maps (derivation spaces,
/// isomorphisms) so every command output is round-trippable.
enum class FileKind {
  ThreeBihomLie,
  BihomLie,
  TotallyAssoc,
  Representation,
  Cocycle,
  BilinearForm,
  Matrix,
  MatrixList,
};

std::string kind_name(FileKind k);

/// Parsed form of one definition file. Which fields are meaningful depends on
/// kind; the typed accessors validate and convert.
///
/// Format: '#' starts a comment; tokens are whitespace-separated. A file is
///   kind <name>
///   dim <n>            (mdim <m> for representation/cocycle,
///                       rows/cols/count for matrix kinds)
///   alpha dense <n*n rationals, row-major>     (beta, alpha_m, beta_m, gram)
///   c i j k l <value>  ternary structure records, 1-based, zero omitted
///   c i j l <value>    binary records (bihom_lie)
///   rho i j r c <value>   representation records, i < j (the j,i half is
///                         implied by skewness)
///   theta i j k r <value> cocycle records
///   entries dense <rows*cols rationals>         (matrix, matrix_list)
/// Rationals are exact "p" or "p/q" strings. A three_bihom_lie file may carry
/// an optional gram block, making it a quadratic algebra in one file.
struct AlgebraFile {
  FileKind kind = FileKind::ThreeBihomLie;
  int dim = 0;   // algebra dimension, or matrix rows
  int mdim = 0;  // module dimension, or matrix cols
  TriTensor tri;
  BiTensor bi;
  std::vector<Mat> rho;
  Mat alpha, beta;  // structure maps, or module maps for a representation
  Mat gram;
  bool has_gram = false;
  std::vector<Mat> matrices;

  ThreeBihomLieAlgebra as_three_bihom() const;
  BihomLieAlgebra as_bihom() const;
  TotallyBihomAssocAlgebra as_assoc() const;
  Representation as_representation() const;
  Cocycle as_cocycle() const;
  BilinearForm as_form() const;
  QuadraticAlgebra as_quadratic() const;  // three_bihom_lie + gram block
};

AlgebraFile parse_algebra_file(std::istream& in);
/// Reads and parses; ParseError messages carry the path and line number.
AlgebraFile load_algebra_file(const std::string& path);

/// Deterministic text form; `header` lines (if any) are emitted first as
/// '#' comments. parse(print(f)) == f entrywise.
std::string print_algebra_file(const AlgebraFile& f,
                               const std::vector<std::string>& header = {});
void save_algebra_file(const std::string& path, const AlgebraFile& f,
                       const std::vector<std::string>& header = {});

AlgebraFile to_file(const ThreeBihomLieAlgebra& a);
AlgebraFile to_file(const BihomLieAlgebra& a);
AlgebraFile to_file(const TotallyBihomAssocAlgebra& a);
AlgebraFile to_file(const Representation& r);
AlgebraFile to_file_cocycle(const Cocycle& theta, int module_dim);
AlgebraFile to_file(const BilinearForm& f);
AlgebraFile to_file(const QuadraticAlgebra& q);
AlgebraFile to_file_matrix(const Mat& m);
AlgebraFile to_file_matrix_list(const std::vector<Mat>& ms, int rows, int cols);

/// FNV-1a 64-bit digest of a byte string, as 16 hex characters. Used in
/// provenance headers of derived files.
uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const std::string& bytes);
/// Digest of a file's current contents.
std::string file_digest(const std::string& path);

/// Structured text report: one "axiom <id> pass|fail" line per axiom in
/// report order, then violation and note records with witness/lhs/rhs, a
/// final "result pass|fail" line and "time-ms <t>".
void print_report(std::ostream& out, const AxiomReport& rep, long long elapsed_ms);

}  // namespace bihom
