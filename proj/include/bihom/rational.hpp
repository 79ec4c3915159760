#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bihom/errors.hpp"

namespace bihom {

/// Exact rational scalar. All arithmetic in the library is over Q; no
/// floating point anywhere. Values are kept in canonical form (gcd-reduced,
/// positive denominator), which GMP preserves under arithmetic as long as
/// the operands are canonical, so every construction path below
/// canonicalizes.
using Rat = mpq_class;

using Vec = std::vector<Rat>;

/// Build a canonical rational from integer numerator/denominator.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw Error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parse "p", "-p" or "p/q" with arbitrary-precision parts.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    Rat r(s, 10);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

/// Render canonically: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace bihom
