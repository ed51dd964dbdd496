#include "logickit/pd_proof.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace logickit::pdproof {

using pd::PdConn;

namespace {

PdFormula neg(PdFormula f) { return PdFormula::negation(f); }
PdFormula imp(PdFormula a, PdFormula b) { return PdFormula::implies(a, b); }

PdFormula p1_instance(PdFormula a, PdFormula b) { return imp(a, imp(b, a)); }
PdFormula p2_instance(PdFormula a, PdFormula b, PdFormula c) {
  return imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c)));
}
PdFormula p3_instance(PdFormula a, PdFormula b) {
  return imp(imp(neg(a), neg(b)), imp(b, a));
}
PdFormula p4_instance(PdFormula a, PdFormula b, const std::string& x) {
  return imp(PdFormula::forall(x, imp(a, b)), imp(a, PdFormula::forall(x, b)));
}
PdFormula p5_instance(PdFormula a, const std::string& x, const Term& lambda) {
  return imp(PdFormula::forall(x, a), pd::subst_free(a, x, lambda));
}

std::optional<std::pair<int, int>> resolve_mp(PdFormula fi, PdFormula fj,
                                              int i, int j, PdFormula target) {
  if (fj.conn() == PdConn::Implies && fj == imp(fi, target))
    return std::make_pair(i, j);
  if (fi.conn() == PdConn::Implies && fi == imp(fj, target))
    return std::make_pair(j, i);
  return std::nullopt;
}

std::optional<std::pair<int, int>> resolve_hs(PdFormula fi, PdFormula fj,
                                              int i, int j, PdFormula target) {
  if (fi.conn() != PdConn::Implies || fj.conn() != PdConn::Implies)
    return std::nullopt;
  if (fi.right() == fj.left() && target == imp(fi.left(), fj.right()))
    return std::make_pair(i, j);
  if (fj.right() == fi.left() && target == imp(fj.left(), fi.right()))
    return std::make_pair(j, i);
  return std::nullopt;
}

}  // namespace

std::string pd_reject_reason_name(PdRejectReason r) {
  switch (r) {
    case PdRejectReason::None: return "None";
    case PdRejectReason::NotPremise: return "NotPremise";
    case PdRejectReason::BadAxiomInstance: return "BadAxiomInstance";
    case PdRejectReason::BadMpShape: return "BadMpShape";
    case PdRejectReason::BadHsShape: return "BadHsShape";
    case PdRejectReason::BadGenShape: return "BadGenShape";
    case PdRejectReason::ForwardReference: return "ForwardReference";
    case PdRejectReason::UnknownLemma: return "UnknownLemma";
    case PdRejectReason::BadLemmaInstance: return "BadLemmaInstance";
    case PdRejectReason::SideConditionViolation: return "SideConditionViolation";
    case PdRejectReason::NotInPdPrime: return "NotInPdPrime";
    case PdRejectReason::EmptyProof: return "EmptyProof";
  }
  return "?";
}

PdFormula lift_formula(prop::Formula f, const PdInstantiation& inst) {
  using prop::Conn;
  switch (f.conn()) {
    case Conn::Atom: {
      auto it = inst.find(f.atom_name());
      if (it == inst.end()) throw MissingImage(f.atom_name());
      return it->second;
    }
    case Conn::Not:
      return neg(lift_formula(f.child(), inst));
    case Conn::And:
      return PdFormula::conj(lift_formula(f.left(), inst),
                             lift_formula(f.right(), inst));
    case Conn::Or:
      return PdFormula::disj(lift_formula(f.left(), inst),
                             lift_formula(f.right(), inst));
    case Conn::Implies:
      return imp(lift_formula(f.left(), inst), lift_formula(f.right(), inst));
    case Conn::Iff:
      return PdFormula::iff(lift_formula(f.left(), inst),
                            lift_formula(f.right(), inst));
  }
  throw Error("unreachable connective");
}

PdCheckResult check_pd_proof(const PdProof& p) {
  PdCheckResult res;
  res.accepted = false;
  if (p.steps.empty()) {
    res.reason = PdRejectReason::EmptyProof;
    return res;
  }
  for (const auto& g : p.premises)
    if (!pd::in_pd_prime(g)) {
      res.reason = PdRejectReason::NotInPdPrime;
      return res;
    }
  const auto& lib = proof::LemmaLibrary::builtin();
  std::unordered_set<std::size_t> used;
  for (std::size_t k = 1; k <= p.steps.size(); ++k) {
    const PdStep& step = p.steps[k - 1];
    PdFormula f = step.formula;
    auto reject = [&](PdRejectReason why) {
      res.step = static_cast<int>(k);
      res.reason = why;
      return res;
    };
    if (!pd::in_pd_prime(f)) return reject(PdRejectReason::NotInPdPrime);
    const PdJustification& why = step.why;
    auto check_refs = [&](int count) {
      if (why.i < 1 || why.i >= static_cast<int>(k)) return false;
      if (count > 1 && (why.j < 1 || why.j >= static_cast<int>(k)))
        return false;
      return true;
    };
    switch (why.kind) {
      case PdReasonKind::Premise: {
        bool found = false;
        for (std::size_t t = 0; t < p.premises.size(); ++t)
          if (p.premises[t] == f) {
            used.insert(t);
            found = true;
            break;
          }
        if (!found) return reject(PdRejectReason::NotPremise);
        break;
      }
      case PdReasonKind::AxiomP1:
        if (why.parts.size() != 2 ||
            f != p1_instance(why.parts[0], why.parts[1]))
          return reject(PdRejectReason::BadAxiomInstance);
        break;
      case PdReasonKind::AxiomP2:
        if (why.parts.size() != 3 ||
            f != p2_instance(why.parts[0], why.parts[1], why.parts[2]))
          return reject(PdRejectReason::BadAxiomInstance);
        break;
      case PdReasonKind::AxiomP3:
        if (why.parts.size() != 2 ||
            f != p3_instance(why.parts[0], why.parts[1]))
          return reject(PdRejectReason::BadAxiomInstance);
        break;
      case PdReasonKind::AxiomP4: {
        if (why.parts.size() != 2 ||
            f != p4_instance(why.parts[0], why.parts[1], why.var))
          return reject(PdRejectReason::BadAxiomInstance);
        // P4 requires that x not be free in A
        if (pd::free_variables(why.parts[0]).count(why.var))
          return reject(PdRejectReason::SideConditionViolation);
        break;
      }
      case PdReasonKind::AxiomP5: {
        if (why.parts.size() != 1 || !why.lambda.has_value() ||
            f != p5_instance(why.parts[0], why.var, *why.lambda))
          return reject(PdRejectReason::BadAxiomInstance);
        // a substituted variable must be free for x; constants are exempt
        if (why.lambda->is_var() &&
            !pd::free_for(why.parts[0], why.var, why.lambda->name))
          return reject(PdRejectReason::SideConditionViolation);
        break;
      }
      case PdReasonKind::MP: {
        if (!check_refs(2)) return reject(PdRejectReason::ForwardReference);
        if (!resolve_mp(p.steps[why.i - 1].formula, p.steps[why.j - 1].formula,
                        why.i, why.j, f))
          return reject(PdRejectReason::BadMpShape);
        break;
      }
      case PdReasonKind::HS: {
        if (!check_refs(2)) return reject(PdRejectReason::ForwardReference);
        if (!resolve_hs(p.steps[why.i - 1].formula, p.steps[why.j - 1].formula,
                        why.i, why.j, f))
          return reject(PdRejectReason::BadHsShape);
        break;
      }
      case PdReasonKind::Gen: {
        if (!check_refs(1)) return reject(PdRejectReason::ForwardReference);
        if (f != PdFormula::forall(why.var, p.steps[why.i - 1].formula))
          return reject(PdRejectReason::BadGenShape);
        break;
      }
      case PdReasonKind::Lemma: {
        if (!lib.contains(why.lemma))
          return reject(PdRejectReason::UnknownLemma);
        const proof::Proof& t = lib.proof_template(why.lemma);
        for (const auto& meta : t.conclusion().atoms())
          if (!why.inst.count(meta))
            return reject(PdRejectReason::BadLemmaInstance);
        for (const auto& [meta, g] : why.inst)
          if (!pd::in_pd_prime(g)) return reject(PdRejectReason::NotInPdPrime);
        if (f != lift_formula(t.conclusion(), why.inst))
          return reject(PdRejectReason::BadLemmaInstance);
        break;
      }
    }
  }
  res.accepted = true;
  res.used_premises.assign(used.begin(), used.end());
  std::sort(res.used_premises.begin(), res.used_premises.end());
  return res;
}

// ---------------------------------------------------------------------------
// Expansion

namespace {

void append_step(PdProof& out, PdFormula f, PdJustification why) {
  out.steps.push_back(PdStep{f, std::move(why)});
}

// Lifts a primitive propositional proof template into Pd' steps.
PdProof lift_template(const proof::Proof& t, const PdInstantiation& inst) {
  PdProof out;
  for (const auto& s : t.steps) {
    PdJustification why = PdJustification::premise();
    switch (s.why.kind) {
      case proof::ReasonKind::AxiomP1:
        why = PdJustification::p1(lift_formula(s.why.parts[0], inst),
                                  lift_formula(s.why.parts[1], inst));
        break;
      case proof::ReasonKind::AxiomP2:
        why = PdJustification::p2(lift_formula(s.why.parts[0], inst),
                                  lift_formula(s.why.parts[1], inst),
                                  lift_formula(s.why.parts[2], inst));
        break;
      case proof::ReasonKind::AxiomP3:
        why = PdJustification::p3(lift_formula(s.why.parts[0], inst),
                                  lift_formula(s.why.parts[1], inst));
        break;
      case proof::ReasonKind::MP:
        why = PdJustification::mp(s.why.i, s.why.j);
        break;
      default:
        throw Error("unexpected step kind in a primitive template");
    }
    append_step(out, lift_formula(s.formula, inst), std::move(why));
  }
  return out;
}

int splice(PdProof& out, const PdProof& block) {
  int offset = static_cast<int>(out.steps.size());
  for (const auto& s : block.steps) {
    PdJustification why = s.why;
    if (why.kind == PdReasonKind::MP || why.kind == PdReasonKind::HS) {
      why.i += offset;
      why.j += offset;
    } else if (why.kind == PdReasonKind::Gen) {
      why.i += offset;
    }
    append_step(out, s.formula, std::move(why));
  }
  return static_cast<int>(out.steps.size());
}

}  // namespace

PdProof pd_expand_lemmas(const PdProof& p) {
  const auto& lib = proof::LemmaLibrary::builtin();
  PdProof out;
  out.premises = p.premises;
  std::vector<int> map(p.steps.size() + 1, 0);
  for (std::size_t k = 1; k <= p.steps.size(); ++k) {
    const PdStep& step = p.steps[k - 1];
    PdJustification why = step.why;
    switch (why.kind) {
      case PdReasonKind::MP: {
        why.i = map[why.i];
        why.j = map[why.j];
        append_step(out, step.formula, why);
        map[k] = static_cast<int>(out.steps.size());
        break;
      }
      case PdReasonKind::Gen: {
        why.i = map[why.i];
        append_step(out, step.formula, why);
        map[k] = static_cast<int>(out.steps.size());
        break;
      }
      case PdReasonKind::HS: {
        PdFormula fi = p.steps[why.i - 1].formula;
        PdFormula fj = p.steps[why.j - 1].formula;
        auto roles = resolve_hs(fi, fj, why.i, why.j, step.formula);
        if (!roles) throw InputRejected("HS step does not chain");
        int ab = map[roles->first];
        int bc = map[roles->second];
        PdFormula a = p.steps[roles->first - 1].formula.left();
        PdFormula b = p.steps[roles->first - 1].formula.right();
        PdFormula c = p.steps[roles->second - 1].formula.right();
        append_step(out, p1_instance(imp(b, c), a),
                    PdJustification::p1(imp(b, c), a));
        int s1 = static_cast<int>(out.steps.size());
        append_step(out, imp(a, imp(b, c)), PdJustification::mp(bc, s1));
        int s2 = static_cast<int>(out.steps.size());
        append_step(out, p2_instance(a, b, c), PdJustification::p2(a, b, c));
        int s3 = static_cast<int>(out.steps.size());
        append_step(out, imp(imp(a, b), imp(a, c)),
                    PdJustification::mp(s2, s3));
        int s4 = static_cast<int>(out.steps.size());
        append_step(out, imp(a, c), PdJustification::mp(ab, s4));
        map[k] = static_cast<int>(out.steps.size());
        break;
      }
      case PdReasonKind::Lemma: {
        proof::Proof prim = proof::expand_lemmas(
            lib.proof_template(why.lemma), lib);
        map[k] = splice(out, lift_template(prim, why.inst));
        break;
      }
      default:
        append_step(out, step.formula, why);
        map[k] = static_cast<int>(out.steps.size());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Restricted Deduction Theorem

PdProof pd_deduction_transform(const PdProof& p, PdFormula a) {
  auto chk = check_pd_proof(p);
  if (!chk.accepted)
    throw InputRejected("input fails at step " + std::to_string(chk.step) +
                        " (" + pd_reject_reason_name(chk.reason) + ")");
  for (const auto& s : p.steps)
    if (s.why.kind == PdReasonKind::Lemma || s.why.kind == PdReasonKind::HS)
      throw InputRejected("transform requires a lemma-free proof; expand first");

  // the Thm 3.7.2 restriction: no Gen on a variable free in the discharged
  // premise
  auto free_in_a = pd::free_variables(a);
  for (std::size_t k = 0; k < p.steps.size(); ++k)
    if (p.steps[k].why.kind == PdReasonKind::Gen &&
        free_in_a.count(p.steps[k].why.var))
      throw GeneralizationOnFreeVariable(static_cast<int>(k) + 1,
                                         p.steps[k].why.var);

  PdProof out;
  for (const auto& g : p.premises)
    if (g != a) out.premises.push_back(g);

  std::vector<int> map(p.steps.size() + 1, 0);
  for (std::size_t k = 1; k <= p.steps.size(); ++k) {
    const PdStep& step = p.steps[k - 1];
    PdFormula f = step.formula;
    if (step.why.kind == PdReasonKind::MP) {
      PdFormula fi = p.steps[step.why.i - 1].formula;
      PdFormula fj = p.steps[step.why.j - 1].formula;
      auto roles = resolve_mp(fi, fj, step.why.i, step.why.j, f);
      if (!roles) throw InputRejected("unresolvable MP step");
      PdFormula bg = p.steps[roles->first - 1].formula;
      append_step(out, p2_instance(a, bg, f), PdJustification::p2(a, bg, f));
      int s_p2 = static_cast<int>(out.steps.size());
      append_step(out, imp(imp(a, bg), imp(a, f)),
                  PdJustification::mp(map[roles->second], s_p2));
      int s_mid = static_cast<int>(out.steps.size());
      append_step(out, imp(a, f), PdJustification::mp(map[roles->first], s_mid));
      map[k] = static_cast<int>(out.steps.size());
      continue;
    }
    if (step.why.kind == PdReasonKind::Gen) {
      // the original concluded forall y B from B; the new proof carries
      // a -> B, so generalize that and distribute with P4
      PdFormula b = p.steps[step.why.i - 1].formula;
      const std::string& y = step.why.var;
      append_step(out, PdFormula::forall(y, imp(a, b)),
                  PdJustification::gen(map[step.why.i], y));
      int s_gen = static_cast<int>(out.steps.size());
      append_step(out, p4_instance(a, b, y), PdJustification::p4(a, b, y));
      int s_p4 = static_cast<int>(out.steps.size());
      append_step(out, imp(a, PdFormula::forall(y, b)),
                  PdJustification::mp(s_gen, s_p4));
      map[k] = static_cast<int>(out.steps.size());
      continue;
    }
    if (f == a) {
      append_step(out, imp(a, a),
                  PdJustification::lemma_ref("id", {{"A", a}}));
      map[k] = static_cast<int>(out.steps.size());
      continue;
    }
    append_step(out, f, step.why);
    int kept = static_cast<int>(out.steps.size());
    append_step(out, p1_instance(f, a), PdJustification::p1(f, a));
    int s_p1 = static_cast<int>(out.steps.size());
    append_step(out, imp(a, f), PdJustification::mp(kept, s_p1));
    map[k] = static_cast<int>(out.steps.size());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Soundness spot checks

SpotcheckReport pd_soundness_spotcheck(
    const PdProof& p, const std::vector<model::Structure>& structures) {
  SpotcheckReport report;
  report.clean = true;
  for (const auto& m : structures) {
    SpotcheckEntry entry;
    entry.premises_hold = true;
    entry.all_steps_hold = true;
    for (const auto& g : p.premises)
      if (!model::models(m, g).holds) {
        entry.premises_hold = false;  // vacuous; skip this structure
        break;
      }
    if (entry.premises_hold) {
      for (std::size_t k = 0; k < p.steps.size(); ++k) {
        if (!model::models(m, p.steps[k].formula).holds) {
          entry.all_steps_hold = false;
          entry.failing_step = static_cast<int>(k) + 1;
          report.clean = false;
          break;
        }
      }
    }
    report.per_structure.push_back(entry);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Script format

namespace {

std::string reason_text(const PdJustification& why) {
  using pd::print_pd;
  switch (why.kind) {
    case PdReasonKind::Premise:
      return "premise";
    case PdReasonKind::AxiomP1:
      return "P1[" + print_pd(why.parts[0]) + ";" + print_pd(why.parts[1]) +
             "]";
    case PdReasonKind::AxiomP2:
      return "P2[" + print_pd(why.parts[0]) + ";" + print_pd(why.parts[1]) +
             ";" + print_pd(why.parts[2]) + "]";
    case PdReasonKind::AxiomP3:
      return "P3[" + print_pd(why.parts[0]) + ";" + print_pd(why.parts[1]) +
             "]";
    case PdReasonKind::AxiomP4:
      return "P4[" + print_pd(why.parts[0]) + ";" + print_pd(why.parts[1]) +
             ";" + why.var + "]";
    case PdReasonKind::AxiomP5:
      return "P5[" + print_pd(why.parts[0]) + ";" + why.var + ";" +
             why.lambda->name + "]";
    case PdReasonKind::MP:
      return "MP(" + std::to_string(why.i) + "," + std::to_string(why.j) + ")";
    case PdReasonKind::HS:
      return "HS(" + std::to_string(why.i) + "," + std::to_string(why.j) + ")";
    case PdReasonKind::Gen:
      return "GEN(" + std::to_string(why.i) + "," + why.var + ")";
    case PdReasonKind::Lemma: {
      std::string out = "LEMMA " + why.lemma + "[";
      bool first = true;
      for (const auto& [meta, g] : why.inst) {
        if (!first) out += ",";
        out += meta + ":=" + print_pd(g);
        first = false;
      }
      return out + "]";
    }
  }
  return "?";
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_on(const std::string& payload, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : payload) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

PdJustification parse_reason(const std::string& text, std::size_t lineno) {
  std::string t = trim(text);
  if (t == "premise") return PdJustification::premise();
  auto axiom_payload = [&](std::size_t header) {
    if (t.back() != ']') throw ParseError(lineno, "missing ']' in reason");
    return split_on(t.substr(header, t.size() - header - 1), ';');
  };
  if (t.rfind("P1[", 0) == 0) {
    auto parts = axiom_payload(3);
    if (parts.size() != 2) throw ParseError(lineno, "P1 takes two formulas");
    return PdJustification::p1(pd::parse_pd(parts[0]), pd::parse_pd(parts[1]));
  }
  if (t.rfind("P2[", 0) == 0) {
    auto parts = axiom_payload(3);
    if (parts.size() != 3) throw ParseError(lineno, "P2 takes three formulas");
    return PdJustification::p2(pd::parse_pd(parts[0]), pd::parse_pd(parts[1]),
                               pd::parse_pd(parts[2]));
  }
  if (t.rfind("P3[", 0) == 0) {
    auto parts = axiom_payload(3);
    if (parts.size() != 2) throw ParseError(lineno, "P3 takes two formulas");
    return PdJustification::p3(pd::parse_pd(parts[0]), pd::parse_pd(parts[1]));
  }
  if (t.rfind("P4[", 0) == 0) {
    auto parts = axiom_payload(3);
    if (parts.size() != 3) throw ParseError(lineno, "P4 takes A;B;x");
    return PdJustification::p4(pd::parse_pd(parts[0]), pd::parse_pd(parts[1]),
                               trim(parts[2]));
  }
  if (t.rfind("P5[", 0) == 0) {
    auto parts = axiom_payload(3);
    if (parts.size() != 3) throw ParseError(lineno, "P5 takes A;x;lam");
    std::string lam = trim(parts[2]);
    Term lambda = pd::is_variable_name(lam) ? Term::var(lam)
                                            : Term::constant(lam);
    return PdJustification::p5(pd::parse_pd(parts[0]), trim(parts[1]), lambda);
  }
  if (t.rfind("MP(", 0) == 0 || t.rfind("HS(", 0) == 0) {
    if (t.back() != ')') throw ParseError(lineno, "missing ')' in reason");
    auto parts = split_on(t.substr(3, t.size() - 4), ',');
    if (parts.size() != 2)
      throw ParseError(lineno, "expected two step references");
    int i = std::stoi(trim(parts[0]));
    int j = std::stoi(trim(parts[1]));
    return t[0] == 'M' ? PdJustification::mp(i, j) : PdJustification::hs(i, j);
  }
  if (t.rfind("GEN(", 0) == 0) {
    if (t.back() != ')') throw ParseError(lineno, "missing ')' in reason");
    auto parts = split_on(t.substr(4, t.size() - 5), ',');
    if (parts.size() != 2) throw ParseError(lineno, "GEN takes (i,x)");
    return PdJustification::gen(std::stoi(trim(parts[0])), trim(parts[1]));
  }
  if (t.rfind("LEMMA ", 0) == 0) {
    std::size_t open = t.find('[');
    if (open == std::string::npos || t.back() != ']')
      throw ParseError(lineno, "malformed lemma reference");
    std::string name = trim(t.substr(6, open - 6));
    PdInstantiation inst;
    for (const auto& binding :
         split_on(t.substr(open + 1, t.size() - open - 2), ',')) {
      if (trim(binding).empty()) continue;
      std::size_t sep = binding.find(":=");
      if (sep == std::string::npos)
        throw ParseError(lineno, "lemma binding needs ':='");
      inst[trim(binding.substr(0, sep))] = pd::parse_pd(binding.substr(sep + 2));
    }
    return PdJustification::lemma_ref(name, std::move(inst));
  }
  throw ParseError(lineno, "unknown reason '" + t + "'");
}

}  // namespace

std::string write_pd_proof_script(const PdProof& p) {
  std::string out;
  for (const auto& g : p.premises)
    out += "premise: " + pd::print_pd(g) + "\n";
  for (std::size_t k = 0; k < p.steps.size(); ++k)
    out += std::to_string(k + 1) + ". " + pd::print_pd(p.steps[k].formula) +
           " ; " + reason_text(p.steps[k].why) + "\n";
  return out;
}

PdProof read_pd_proof_script(std::string_view text) {
  PdProof p;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("premise:", 0) == 0) {
      if (!p.steps.empty())
        throw ParseError(lineno, "premises must precede the steps");
      p.premises.push_back(pd::parse_pd(t.substr(8)));
      continue;
    }
    std::size_t dot = t.find('.');
    if (dot == std::string::npos)
      throw ParseError(lineno, "expected '<n>. <formula> ; <reason>'");
    int num = std::stoi(t.substr(0, dot));
    if (num != static_cast<int>(p.steps.size()) + 1)
      throw ParseError(lineno, "steps must be numbered consecutively");
    std::size_t semi = t.find(';', dot);
    if (semi == std::string::npos)
      throw ParseError(lineno, "missing ';' before the reason");
    PdFormula f = pd::parse_pd(t.substr(dot + 1, semi - dot - 1));
    p.steps.push_back(PdStep{f, parse_reason(t.substr(semi + 1), lineno)});
  }
  return p;
}

}  // namespace logickit::pdproof
