#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logickit/semantics.hpp"
#include "logickit/syntax.hpp"

namespace logickit::proof {

using prop::Assignment;
using prop::Formula;

enum class ReasonKind { Premise, AxiomP1, AxiomP2, AxiomP3, MP, HS, Lemma };

// Lemma instantiation: metavariable atom name -> formula.
using Instantiation = std::map<std::string, Formula>;

struct Justification {
  ReasonKind kind;
  std::vector<Formula> parts;  // axiom instantiating formulas
  int i = 0, j = 0;            // 1-based step references for MP and HS
  std::string lemma;
  Instantiation inst;

  static Justification premise() { return {ReasonKind::Premise, {}, 0, 0, "", {}}; }
  static Justification p1(Formula a, Formula b) {
    return {ReasonKind::AxiomP1, {a, b}, 0, 0, "", {}};
  }
  static Justification p2(Formula a, Formula b, Formula c) {
    return {ReasonKind::AxiomP2, {a, b, c}, 0, 0, "", {}};
  }
  static Justification p3(Formula a, Formula b) {
    return {ReasonKind::AxiomP3, {a, b}, 0, 0, "", {}};
  }
  static Justification mp(int i, int j) {
    return {ReasonKind::MP, {}, i, j, "", {}};
  }
  static Justification hs(int i, int j) {
    return {ReasonKind::HS, {}, i, j, "", {}};
  }
  static Justification lemma_ref(std::string name, Instantiation inst) {
    return {ReasonKind::Lemma, {}, 0, 0, std::move(name), std::move(inst)};
  }
};

struct Step {
  Formula formula;
  Justification why;
};

// A formal proof: numbered steps over {~, ->}, each justified as a premise
// occurrence, an axiom instance, modus ponens, the hypothetical-syllogism
// macro, or a named lemma reference.
struct Proof {
  std::vector<Formula> premises;
  std::vector<Step> steps;

  Formula conclusion() const { return steps.back().formula; }
};

enum class RejectReason {
  None,
  NotPremise,
  BadAxiomInstance,
  BadMpShape,
  BadHsShape,
  ForwardReference,
  UnknownLemma,
  BadLemmaInstance,
  NotInLPrime,
  EmptyProof,
};

std::string reject_reason_name(RejectReason r);

struct CheckResult {
  bool accepted;
  int step = 0;  // 1-based step at fault when rejected
  RejectReason reason = RejectReason::None;
  std::vector<std::size_t> used_premises;  // indices into premises
};

// Named primitive proof templates over the metavariable atoms A, B, C. Every
// template, instantiated with fresh atoms, checks with empty premises.
class LemmaLibrary {
 public:
  // The built-in library: id, dneg-elim, dneg-intro, exfalso, contrapose,
  // peirce, b-to-mp, neg-imp, dneg-ante, absurd, raa, case-split.
  static const LemmaLibrary& builtin();

  bool contains(const std::string& name) const;
  const Proof& proof_template(const std::string& name) const;  // throws UnknownLemma
  std::vector<std::string> names() const;

  void add(const std::string& name, Proof p);

 private:
  std::map<std::string, Proof> templates_;
};

CheckResult check_proof(const Proof& p,
                        const LemmaLibrary& lib = LemmaLibrary::builtin());

// Splices every lemma reference and HS macro into primitive steps and
// renumbers; the conclusion is unchanged and the result checks.
Proof expand_lemmas(const Proof& p,
                    const LemmaLibrary& lib = LemmaLibrary::builtin());

// The Deduction Theorem as a proof rewriter: from an accepted, lemma-free
// demonstration of G u {a} |- B builds a demonstration of G |- a -> B. A
// discharged-premise occurrence becomes a single `id` lemma step, matching
// the worked 13-step listing. Throws InputRejected.
Proof deduction_transform(const Proof& p, Formula a,
                          const LemmaLibrary& lib = LemmaLibrary::builtin());

// Row-indexed derivability: a demonstration of A'_1, ..., A'_n |- f' where
// X' is X when the row gives it T and ~X otherwise. f must be over {~, ->}.
Proof deducibility_proof(Formula f, const Assignment& row);

inline constexpr std::size_t kDefaultSynthesisAtomCap = 6;
inline constexpr std::size_t kStepCountWarningThreshold = 100'000;

struct SynthesisResult {
  Proof proof;                  // primitive, premise-free, ends in to_lprime(f)
  std::size_t merged_rows = 0;
  bool oversized = false;       // step count passed the soft warning threshold
};

// Proof synthesis for tautologies: builds the 2^k deducibility rows,
// discharges the literals, then merges sibling branches with the case-split
// lemma. Throws NotATautology or CapExceeded.
SynthesisResult synthesize_proof(Formula f,
                                 std::size_t atom_cap = kDefaultSynthesisAtomCap);

struct SoundnessResult {
  bool accepted;
  int step = 0;  // first step that is not a valid consequence of the premises
};

// Checks premises |= step for every step by the table method; the executable
// reading of writing |= to the left of each line.
SoundnessResult verify_soundness(const Proof& p);

// Line format: "<n>. <formula> ; <reason>", preceded by one
// "premise: <formula>" line per premise.
std::string write_proof_script(const Proof& p);
Proof read_proof_script(std::string_view text);

}  // namespace logickit::proof
