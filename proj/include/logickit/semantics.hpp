#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logickit/formula.hpp"

namespace logickit::prop {

// One row of truth values over an ordered atom list.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::vector<std::string> atoms, std::vector<bool> values);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<bool>& values() const { return values_; }
  bool value(const std::string& atom) const;      // throws UncoveredAtom
  bool covers(const std::string& atom) const;
  std::string str() const;                        // "(P=T, Q=F)"

 private:
  std::vector<std::string> atoms_;
  std::vector<bool> values_;
};

// All 2^n assignments in the paper's canonical order: the first atom is T for
// the whole first half, row r gives atom j the value T iff bit (n-1-j) of r
// is zero.
std::vector<Assignment> canonical_assignments(
    const std::vector<std::string>& atoms);

bool eval(Formula f, const Assignment& a);

struct TruthTable {
  std::vector<std::string> atoms;    // union of column atoms, first occurrence
  std::vector<Formula> columns;
  std::vector<std::vector<bool>> atom_rows;
  std::vector<std::vector<bool>> column_rows;

  std::string render() const;        // the bit-exact text format
};

TruthTable truth_table(const std::vector<Formula>& fs);

enum class Classification { Valid, Contradiction, Contingent };

struct ClassifyResult {
  Classification kind;
  std::optional<Assignment> true_witness;   // present when some row is T
  std::optional<Assignment> false_witness;  // present when some row is F
};

ClassifyResult classify(Formula f);

// A ≡ B iff ⊨ A <-> B.
bool equivalent(Formula a, Formula b);

// Union of the formulas' atoms in first-occurrence order.
std::vector<std::string> atom_union(const std::vector<Formula>& fs);

}  // namespace logickit::prop
