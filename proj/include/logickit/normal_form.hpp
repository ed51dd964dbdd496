#pragma once

#include <string>
#include <vector>

#include "logickit/semantics.hpp"

namespace logickit::prop {

// True when f uses only &, | and ~, with every ~ directly on an atom.
bool is_negation_normal(Formula f);

// Equivalent form over {~, &, |} with negations pushed to the atoms.
// Rewrites, innermost first: <-> and -> elimination, De Morgan, double
// negation removal.
Formula reduce_nf(Formula f);

// Literal-flipped, conjunction/disjunction-swapped dual of a negation-normal
// formula; equivalent to ~f. Throws NotInNormalForm.
Formula denial(Formula f);

struct FundamentalConjunction {
  std::vector<std::pair<std::string, bool>> literals;  // (atom, polarity)
  Formula formula() const;  // right-nested conjunction
};

// The fundamental conjunction of one truth-table row.
FundamentalConjunction fundamental_conjunction(const Assignment& row);

// Full disjunctive normal form: the disjunction of the fundamental
// conjunctions of f's true rows, rows in canonical order, conjuncts in atom
// column order. Throws IsContradiction.
Formula fdnf(Formula f);

std::vector<FundamentalConjunction> fdnf_rows(Formula f);

}  // namespace logickit::prop
