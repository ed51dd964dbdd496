#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logickit/syntax.hpp"

namespace logickit::ops {

using prop::Formula;

// A finite, subformula-closed formula universe standing in for the power set
// of the full language.
class FormulaUniverse {
 public:
  // All formulas over the atoms built from the connectives up to the size
  // bound (the construction level of that bound).
  static FormulaUniverse over(const std::vector<std::string>& atoms,
                              const std::set<prop::Conn>& connectives,
                              unsigned size_bound);
  // Explicit list; throws NotInUniverse unless closed under subformulas.
  static FormulaUniverse from_list(std::vector<Formula> formulas);

  const std::vector<Formula>& formulas() const { return formulas_; }
  std::size_t size() const { return formulas_.size(); }
  std::optional<std::size_t> index_of(Formula f) const;

  // Subsets are bit vectors over the universe order.
  using Subset = std::vector<bool>;
  Subset subset_of(const std::vector<Formula>& fs) const;  // NotInUniverse
  std::vector<Formula> members(const Subset& s) const;

  struct MpEdge {
    std::size_t antecedent;
    std::size_t implication;
    std::size_t conclusion;
    std::size_t implication_size;
  };
  const std::vector<MpEdge>& mp_edges() const { return edges_; }
  const std::vector<bool>& axiom_points() const { return axioms_; }

 private:
  std::vector<Formula> formulas_;
  std::map<Formula, std::size_t> index_;
  std::vector<MpEdge> edges_;
  std::vector<bool> axioms_;
  void build_index();
  void build_closure_tables();
};

// Least fixpoint within the universe of gamma plus the conjunction-calculus
// axiom instances, closed under modus ponens restricted to the universe.
FormulaUniverse::Subset closure_s(const FormulaUniverse& u,
                                  const FormulaUniverse::Subset& gamma);

// As closure_s, but an MP firing requires size(A -> B) <= n.
FormulaUniverse::Subset closure_sn(const FormulaUniverse& u,
                                   const FormulaUniverse::Subset& gamma,
                                   std::size_t n);

std::vector<Formula> closure_s(const FormulaUniverse& u,
                               const std::vector<Formula>& gamma);
std::vector<Formula> closure_sn(const FormulaUniverse& u,
                                const std::vector<Formula>& gamma,
                                std::size_t n);

// The conjunction-calculus axiom instances that lie inside the universe:
// (1) (A&(B&C))->((A&B)&C), (2) ((A&B)&C)->(A&(B&C)), (3) (A&B)->A,
// (4) (A&B)->B.
FormulaUniverse::Subset axiom_instances(const FormulaUniverse& u);

using Operator =
    std::function<FormulaUniverse::Subset(const FormulaUniverse::Subset&)>;

struct AxiomViolation {
  std::string axiom;                 // which law failed
  FormulaUniverse::Subset sample;    // the offending input
  std::optional<FormulaUniverse::Subset> other;  // second input, when binary
};

struct OperatorReport {
  bool all_pass;
  std::vector<AxiomViolation> violations;
  std::size_t checks_run = 0;
};

// Verifies extensivity, idempotence, finite character, monotonicity, the
// inclusion law A <= C(B) iff C(A) <= C(B), and the union laws
// C(A u B) = C(A u C(B)) = C(C(A) u C(B)) over the samples (singletons are
// the unary inputs; ordered pairs feed the binary laws).
OperatorReport check_operator_axioms(const FormulaUniverse& u,
                                     const Operator& op,
                                     const std::vector<FormulaUniverse::Subset>& samples);

struct IdempotentReport {
  bool fixed_points_match;  // {C(X)} equals {Y : Y = C(Y)} over the samples
  bool injective_on_samples;
  bool identity_on_samples;
  // two distinct inputs with the same image, when they exist
  std::optional<std::pair<FormulaUniverse::Subset, FormulaUniverse::Subset>>
      non_injectivity_witness;
};

IdempotentReport idempotent_theorems(
    const FormulaUniverse& u, const Operator& op,
    const std::vector<FormulaUniverse::Subset>& samples);

// Singletons, the empty set, the full universe, plus deterministic pairs.
std::vector<FormulaUniverse::Subset> default_samples(const FormulaUniverse& u,
                                                     std::size_t pair_budget);

}  // namespace logickit::ops
