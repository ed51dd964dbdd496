#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logickit/pd_formula.hpp"

namespace logickit::pd {

struct TermOccurrence {
  std::string name;
  bool is_var;
  std::size_t position;       // index over term slots, left to right
  bool bound;                 // constants are always bound-tagged
  int quantifier;             // 1-based binder index, 0 when none applies
};

struct QuantifierInfo {
  int index;                  // 1-based, left-to-right
  std::string var;
  bool universal;
  std::string scope;          // printed scope
};

struct OccurrenceReport {
  std::vector<TermOccurrence> occurrences;
  std::vector<QuantifierInfo> quantifiers;
  std::set<std::string> free_variables;   // variables free in the formula
  std::set<std::string> bound_variables;  // variables with a bound occurrence
};

// Level-by-level free/bound marking; quantifier positions count as bound
// occurrences of their own variable.
OccurrenceReport occurrences(PdFormula f);

std::set<std::string> free_variables(PdFormula f);

bool is_sentence(PdFormula f);

// Identical trees after erasing bound-variable names, with the same free
// occurrences.
bool congruent(PdFormula a, PdFormula b);

// The free substitution operator S^x_lam: lam replaces every free occurrence
// of x; bound occurrences are untouched. No capture check.
PdFormula subst_free(PdFormula f, const std::string& x, const Term& lam);

// v is free for x when substituting it leaves a free v at every former
// free-x position.
bool free_for(PdFormula f, const std::string& x, const std::string& v);

// Prefixes universal quantifiers over the free variables, base letters in
// the order w < x < y < z, subscripts ascending.
PdFormula universal_closure(PdFormula f);

// Prenex normal form: bound variables are renamed apart onto the base letter
// z where needed, consequent quantifiers pull through implications first, and
// a quantified antecedent turns the implication into its disjunctive form.
PdFormula prenex(PdFormula f);

}  // namespace logickit::pd
