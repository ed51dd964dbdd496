#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logickit/pd_syntax.hpp"

namespace logickit::model {

using pd::PdFormula;
using pd::Term;

// A finite structure: domain elements by id, constant interpretations, and
// one relation table per (predicate, arity).
struct Structure {
  std::vector<std::string> domain;
  std::map<std::string, std::string> constants;  // constant -> element id
  std::map<std::pair<std::string, std::size_t>, std::set<std::vector<std::size_t>>>
      relations;  // (name, arity) -> element index tuples

  std::size_t element_index(const std::string& id) const;  // DomainViolation
  void validate() const;
  std::string render() const;  // structure-v1 JSON
};

Structure load_structure(std::string_view json_text);

struct ModelVerdict {
  bool holds;
  // per-quantifier witness (for a holding exists) or refuter (for a failing
  // forall) elements along the deciding path
  std::vector<std::pair<std::string, std::string>> trace;  // (var, element)
};

// The recursive structure valuation; open formulas are universally closed
// first. Throws UnknownSymbol when f uses an uninterpreted predicate or
// constant, ArityMismatch on arity clashes.
ModelVerdict models(const Structure& m, PdFormula f);

inline constexpr std::uint64_t kDefaultInterpretationCap = 1u << 20;

struct ValidityReport {
  // index k holds the verdict for domain size k+1; nullopt when the
  // interpretation count passed the cap
  std::vector<std::optional<bool>> n_valid;
  std::optional<Structure> countermodel;  // first failing interpretation
};

// Checks n-validity for every domain size up to the bound by enumerating all
// interpretations of f's predicates and constants in a fixed order.
ValidityReport valid_over(PdFormula f, std::size_t max_domain,
                          std::uint64_t cap = kDefaultInterpretationCap);

enum class FolConsequenceStatus { NoCounterexampleUpToBound, Invalid };

struct FolConsequenceResult {
  FolConsequenceStatus status;
  std::optional<Structure> countermodel;
  std::size_t bound;
};

// Searches all structures with domain size <= max_domain for one modeling
// every premise and failing b. A clean sweep is NOT a validity proof.
FolConsequenceResult fol_consequence(const std::vector<PdFormula>& premises,
                                     PdFormula b, std::size_t max_domain,
                                     std::uint64_t cap = kDefaultInterpretationCap);

enum class FolSatStatus { Satisfiable, NoModelUpToBound };

struct FolSatResult {
  FolSatStatus status;
  std::optional<Structure> model;
  std::size_t bound;
};

FolSatResult fol_satisfiable(const std::vector<PdFormula>& premises,
                             std::size_t max_domain,
                             std::uint64_t cap = kDefaultInterpretationCap);

}  // namespace logickit::model
