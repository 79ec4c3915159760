#pragma once

#include <string>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

/// One failed identity instance: which axiom, at which basis tuple (1-based
/// indices, empty for global matrix identities), and both evaluated sides
/// (vectors, or row-major flattened matrices for map identities).
struct Violation {
  std::string axiom;
  std::vector<int> witness;
  Vec lhs, rhs;
};

/// Outcome of a checker. Violations are recorded in deterministic order:
/// axiom blocks in the order listed in `axioms`, witnesses lexicographically
/// within each block. `notes` holds informational evaluations (known printed
/// variants of an identity) that never affect `passed()`.
struct AxiomReport {
  std::vector<std::string> axioms;
  std::vector<Violation> violations;
  std::vector<Violation> notes;

  bool passed() const { return violations.empty(); }

  bool axiom_passed(const std::string& id) const {
    for (const Violation& v : violations)
      if (v.axiom == id) return false;
    return true;
  }

  void add(const std::string& axiom, std::vector<int> witness, Vec lhs, Vec rhs) {
    violations.push_back({axiom, std::move(witness), std::move(lhs), std::move(rhs)});
  }

  void add_note(const std::string& axiom, std::vector<int> witness, Vec lhs, Vec rhs) {
    notes.push_back({axiom, std::move(witness), std::move(lhs), std::move(rhs)});
  }

  /// Append another report's axiom list and records (used by compound ops).
  void merge(const AxiomReport& o) {
    axioms.insert(axioms.end(), o.axioms.begin(), o.axioms.end());
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

}  // namespace bihom
