#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logickit/proof.hpp"
#include "logickit/structure.hpp"

namespace logickit::pdproof {

using pd::PdFormula;
using pd::Term;

enum class PdReasonKind {
  Premise, AxiomP1, AxiomP2, AxiomP3, AxiomP4, AxiomP5, MP, HS, Gen, Lemma
};

using PdInstantiation = std::map<std::string, PdFormula>;

struct PdJustification {
  PdReasonKind kind;
  std::vector<PdFormula> parts;     // axiom instantiating formulas
  std::string var;                  // P4, P5 and Gen variable
  std::optional<Term> lambda;       // P5 substituted term
  int i = 0, j = 0;                 // step references
  std::string lemma;
  PdInstantiation inst;

  static PdJustification premise() { return {PdReasonKind::Premise, {}, "", {}, 0, 0, "", {}}; }
  static PdJustification p1(PdFormula a, PdFormula b) {
    return {PdReasonKind::AxiomP1, {a, b}, "", {}, 0, 0, "", {}};
  }
  static PdJustification p2(PdFormula a, PdFormula b, PdFormula c) {
    return {PdReasonKind::AxiomP2, {a, b, c}, "", {}, 0, 0, "", {}};
  }
  static PdJustification p3(PdFormula a, PdFormula b) {
    return {PdReasonKind::AxiomP3, {a, b}, "", {}, 0, 0, "", {}};
  }
  static PdJustification p4(PdFormula a, PdFormula b, std::string x) {
    return {PdReasonKind::AxiomP4, {a, b}, std::move(x), {}, 0, 0, "", {}};
  }
  static PdJustification p5(PdFormula a, std::string x, Term lambda) {
    return {PdReasonKind::AxiomP5, {a}, std::move(x), std::move(lambda),
            0, 0, "", {}};
  }
  static PdJustification mp(int i, int j) {
    return {PdReasonKind::MP, {}, "", {}, i, j, "", {}};
  }
  static PdJustification hs(int i, int j) {
    return {PdReasonKind::HS, {}, "", {}, i, j, "", {}};
  }
  static PdJustification gen(int i, std::string x) {
    return {PdReasonKind::Gen, {}, std::move(x), {}, i, 0, "", {}};
  }
  static PdJustification lemma_ref(std::string name, PdInstantiation inst) {
    return {PdReasonKind::Lemma, {}, "", {}, 0, 0, std::move(name),
            std::move(inst)};
  }
};

struct PdStep {
  PdFormula formula;
  PdJustification why;
};

// Hilbert proofs over Pd': P1-P5, modus ponens and generalization, plus the
// lifted propositional lemma library.
struct PdProof {
  std::vector<PdFormula> premises;
  std::vector<PdStep> steps;

  PdFormula conclusion() const { return steps.back().formula; }
};

enum class PdRejectReason {
  None,
  NotPremise,
  BadAxiomInstance,
  BadMpShape,
  BadHsShape,
  BadGenShape,
  ForwardReference,
  UnknownLemma,
  BadLemmaInstance,
  SideConditionViolation,
  NotInPdPrime,
  EmptyProof,
};

std::string pd_reject_reason_name(PdRejectReason r);

struct PdCheckResult {
  bool accepted;
  int step = 0;
  PdRejectReason reason = PdRejectReason::None;
  std::vector<std::size_t> used_premises;
};

// Validates every step, including the P4 not-free and P5 free-for side
// conditions.
PdCheckResult check_pd_proof(const PdProof& p);

// Instantiates a propositional formula's atoms with predicate formulas.
PdFormula lift_formula(prop::Formula f, const PdInstantiation& inst);

// Splices lemma references and HS macros into primitive steps.
PdProof pd_expand_lemmas(const PdProof& p);

// The restricted Deduction Theorem: rejects with
// GeneralizationOnFreeVariable when some Gen step generalizes a variable
// free in the discharged premise; otherwise Gen steps acquire the
// Gen/P4/MP treatment.
PdProof pd_deduction_transform(const PdProof& p, PdFormula a);

struct SpotcheckEntry {
  bool premises_hold;   // structure skipped when false
  bool all_steps_hold;
  int failing_step = 0;
};

struct SpotcheckReport {
  std::vector<SpotcheckEntry> per_structure;
  bool clean;  // no structure modeling the premises refuted any step
};

// For each structure modeling all premises, every step (universally closed)
// must hold; a failure would expose a checker defect.
SpotcheckReport pd_soundness_spotcheck(const PdProof& p,
                                       const std::vector<model::Structure>& structures);

// Script lines extend the propositional format with reasons
// P4[A;B;x], P5[A;x;lam] and GEN(i,x).
std::string write_pd_proof_script(const PdProof& p);
PdProof read_pd_proof_script(std::string_view text);

}  // namespace logickit::pdproof
