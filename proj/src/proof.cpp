#include "logickit/proof.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace logickit::proof {

using prop::Conn;
using prop::detail::Node;

namespace {

Formula neg(Formula a) { return Formula::negation(a); }
Formula imp(Formula a, Formula b) { return Formula::implies(a, b); }

Formula p1_instance(Formula a, Formula b) { return imp(a, imp(b, a)); }
Formula p2_instance(Formula a, Formula b, Formula c) {
  return imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c)));
}
Formula p3_instance(Formula a, Formula b) {
  return imp(imp(neg(a), neg(b)), imp(b, a));
}

// Resolves which cited step is the antecedent and which the implication; the
// citation order is not fixed. Returns {antecedent, implication} or nullopt.
std::optional<std::pair<int, int>> resolve_mp(Formula fi, Formula fj, int i,
                                              int j, Formula target) {
  if (fj.conn() == Conn::Implies && fj == imp(fi, target))
    return std::make_pair(i, j);
  if (fi.conn() == Conn::Implies && fi == imp(fj, target))
    return std::make_pair(j, i);
  return std::nullopt;
}

// For HS the two steps must chain: one is A->B, the other B->C.
std::optional<std::pair<int, int>> resolve_hs(Formula fi, Formula fj, int i,
                                              int j, Formula target) {
  if (fi.conn() != Conn::Implies || fj.conn() != Conn::Implies)
    return std::nullopt;
  if (fi.right() == fj.left() && target == imp(fi.left(), fj.right()))
    return std::make_pair(i, j);
  if (fj.right() == fi.left() && target == imp(fj.left(), fi.right()))
    return std::make_pair(j, i);
  return std::nullopt;
}

Formula instantiate(Formula f, const Instantiation& inst) {
  prop::AtomSubstitution s;
  for (const auto& [k, v] : inst) s.emplace(k, v);
  return prop::substitute_atoms(f, s);
}

}  // namespace

std::string reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::None: return "None";
    case RejectReason::NotPremise: return "NotPremise";
    case RejectReason::BadAxiomInstance: return "BadAxiomInstance";
    case RejectReason::BadMpShape: return "BadMpShape";
    case RejectReason::BadHsShape: return "BadHsShape";
    case RejectReason::ForwardReference: return "ForwardReference";
    case RejectReason::UnknownLemma: return "UnknownLemma";
    case RejectReason::BadLemmaInstance: return "BadLemmaInstance";
    case RejectReason::NotInLPrime: return "NotInLPrime";
    case RejectReason::EmptyProof: return "EmptyProof";
  }
  return "?";
}

CheckResult check_proof(const Proof& p, const LemmaLibrary& lib) {
  CheckResult res;
  res.accepted = false;
  if (p.steps.empty()) {
    res.reason = RejectReason::EmptyProof;
    return res;
  }
  for (const auto& g : p.premises) {
    if (!prop::in_lprime(g)) {
      res.reason = RejectReason::NotInLPrime;
      return res;
    }
  }
  std::unordered_set<std::size_t> used;
  for (std::size_t k = 1; k <= p.steps.size(); ++k) {
    const Step& step = p.steps[k - 1];
    Formula f = step.formula;
    auto reject = [&](RejectReason why) {
      res.step = static_cast<int>(k);
      res.reason = why;
      return res;
    };
    if (!prop::in_lprime(f)) return reject(RejectReason::NotInLPrime);
    const Justification& why = step.why;
    switch (why.kind) {
      case ReasonKind::Premise: {
        bool found = false;
        for (std::size_t t = 0; t < p.premises.size(); ++t)
          if (p.premises[t] == f) {
            used.insert(t);
            found = true;
            break;
          }
        if (!found) return reject(RejectReason::NotPremise);
        break;
      }
      case ReasonKind::AxiomP1:
        if (why.parts.size() != 2 ||
            f != p1_instance(why.parts[0], why.parts[1]))
          return reject(RejectReason::BadAxiomInstance);
        break;
      case ReasonKind::AxiomP2:
        if (why.parts.size() != 3 ||
            f != p2_instance(why.parts[0], why.parts[1], why.parts[2]))
          return reject(RejectReason::BadAxiomInstance);
        break;
      case ReasonKind::AxiomP3:
        if (why.parts.size() != 2 ||
            f != p3_instance(why.parts[0], why.parts[1]))
          return reject(RejectReason::BadAxiomInstance);
        break;
      case ReasonKind::MP: {
        if (why.i < 1 || why.j < 1 || why.i >= static_cast<int>(k) ||
            why.j >= static_cast<int>(k))
          return reject(RejectReason::ForwardReference);
        Formula fi = p.steps[why.i - 1].formula;
        Formula fj = p.steps[why.j - 1].formula;
        if (!resolve_mp(fi, fj, why.i, why.j, f))
          return reject(RejectReason::BadMpShape);
        break;
      }
      case ReasonKind::HS: {
        if (why.i < 1 || why.j < 1 || why.i >= static_cast<int>(k) ||
            why.j >= static_cast<int>(k))
          return reject(RejectReason::ForwardReference);
        Formula fi = p.steps[why.i - 1].formula;
        Formula fj = p.steps[why.j - 1].formula;
        if (!resolve_hs(fi, fj, why.i, why.j, f))
          return reject(RejectReason::BadHsShape);
        break;
      }
      case ReasonKind::Lemma: {
        if (!lib.contains(why.lemma)) return reject(RejectReason::UnknownLemma);
        const Proof& t = lib.proof_template(why.lemma);
        for (const auto& meta : t.conclusion().atoms())
          if (!why.inst.count(meta))
            return reject(RejectReason::BadLemmaInstance);
        for (const auto& [meta, g] : why.inst)
          if (!prop::in_lprime(g)) return reject(RejectReason::NotInLPrime);
        if (f != instantiate(t.conclusion(), why.inst))
          return reject(RejectReason::BadLemmaInstance);
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
// Lemma expansion

namespace {

void append_step(Proof& out, Formula f, Justification why) {
  out.steps.push_back(Step{f, std::move(why)});
}

// Splices `block` (premise-free, primitive) at the end of `out`, offsetting
// internal references. Returns the 1-based index of its final step.
int splice(Proof& out, const Proof& block) {
  int offset = static_cast<int>(out.steps.size());
  for (const auto& s : block.steps) {
    Justification why = s.why;
    if (why.kind == ReasonKind::MP || why.kind == ReasonKind::HS) {
      why.i += offset;
      why.j += offset;
    }
    append_step(out, s.formula, std::move(why));
  }
  return static_cast<int>(out.steps.size());
}

Proof instantiate_proof(const Proof& t, const Instantiation& inst) {
  Proof out;
  for (const auto& s : t.steps) {
    Justification why = s.why;
    for (auto& part : why.parts) part = instantiate(part, inst);
    for (auto& [meta, g] : why.inst) g = instantiate(g, inst);
    append_step(out, instantiate(s.formula, inst), std::move(why));
  }
  return out;
}

}  // namespace

Proof expand_lemmas(const Proof& p, const LemmaLibrary& lib) {
  Proof out;
  out.premises = p.premises;
  std::vector<int> map(p.steps.size() + 1, 0);
  for (std::size_t k = 1; k <= p.steps.size(); ++k) {
    const Step& step = p.steps[k - 1];
    Justification why = step.why;
    switch (why.kind) {
      case ReasonKind::Premise:
      case ReasonKind::AxiomP1:
      case ReasonKind::AxiomP2:
      case ReasonKind::AxiomP3:
        append_step(out, step.formula, why);
        map[k] = static_cast<int>(out.steps.size());
        break;
      case ReasonKind::MP: {
        int oi = why.i, oj = why.j;
        why.i = map[oi];
        why.j = map[oj];
        append_step(out, step.formula, why);
        map[k] = static_cast<int>(out.steps.size());
        break;
      }
      case ReasonKind::HS: {
        // the five-step insertion of the hypothetical-syllogism metatheorem
        Formula fi = p.steps[why.i - 1].formula;
        Formula fj = p.steps[why.j - 1].formula;
        auto roles = resolve_hs(fi, fj, why.i, why.j, step.formula);
        if (!roles) throw InputRejected("HS step does not chain");
        int ab = map[roles->first];   // A -> B
        int bc = map[roles->second];  // B -> C
        Formula a = p.steps[roles->first - 1].formula.left();
        Formula b = p.steps[roles->first - 1].formula.right();
        Formula c = p.steps[roles->second - 1].formula.right();
        append_step(out, p1_instance(imp(b, c), a),
                    Justification::p1(imp(b, c), a));
        int s1 = static_cast<int>(out.steps.size());
        append_step(out, imp(a, imp(b, c)), Justification::mp(bc, s1));
        int s2 = static_cast<int>(out.steps.size());
        append_step(out, p2_instance(a, b, c), Justification::p2(a, b, c));
        int s3 = static_cast<int>(out.steps.size());
        append_step(out, imp(imp(a, b), imp(a, c)), Justification::mp(s2, s3));
        int s4 = static_cast<int>(out.steps.size());
        append_step(out, imp(a, c), Justification::mp(ab, s4));
        map[k] = static_cast<int>(out.steps.size());
        break;
      }
      case ReasonKind::Lemma: {
        Proof block = instantiate_proof(
            expand_lemmas(lib.proof_template(why.lemma), lib), why.inst);
        map[k] = splice(out, block);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deduction Theorem

Proof deduction_transform(const Proof& p, Formula a, const LemmaLibrary& lib) {
  auto chk = check_proof(p, lib);
  if (!chk.accepted)
    throw InputRejected("input fails at step " + std::to_string(chk.step) +
                        " (" + reject_reason_name(chk.reason) + ")");
  for (const auto& s : p.steps)
    if (s.why.kind == ReasonKind::Lemma || s.why.kind == ReasonKind::HS)
      throw InputRejected("transform requires a lemma-free proof; expand first");

  Proof out;
  for (const auto& g : p.premises)
    if (g != a) out.premises.push_back(g);

  std::vector<int> map(p.steps.size() + 1, 0);
  for (std::size_t k = 1; k <= p.steps.size(); ++k) {
    const Step& step = p.steps[k - 1];
    Formula f = step.formula;
    if (step.why.kind == ReasonKind::MP) {
      Formula fi = p.steps[step.why.i - 1].formula;
      Formula fj = p.steps[step.why.j - 1].formula;
      auto roles = resolve_mp(fi, fj, step.why.i, step.why.j, f);
      if (!roles) throw InputRejected("unresolvable MP step");
      int g_idx = roles->first;   // antecedent B_g
      int h_idx = roles->second;  // implication B_g -> B_j
      Formula bg = p.steps[g_idx - 1].formula;
      append_step(out, p2_instance(a, bg, f), Justification::p2(a, bg, f));
      int s_p2 = static_cast<int>(out.steps.size());
      append_step(out, imp(imp(a, bg), imp(a, f)),
                  Justification::mp(map[h_idx], s_p2));
      int s_mid = static_cast<int>(out.steps.size());
      append_step(out, imp(a, f), Justification::mp(map[g_idx], s_mid));
      (void)s_mid;
      map[k] = static_cast<int>(out.steps.size());
      continue;
    }
    if (f == a) {
      // the discharged formula itself: one reference to |- A -> A
      append_step(out, imp(a, a), Justification::lemma_ref("id", {{"A", a}}));
      map[k] = static_cast<int>(out.steps.size());
      continue;
    }
    // premise or axiom step: keep it, then wrap with P1 and MP
    append_step(out, f, step.why);
    int kept = static_cast<int>(out.steps.size());
    append_step(out, p1_instance(f, a), Justification::p1(f, a));
    int s_p1 = static_cast<int>(out.steps.size());
    append_step(out, imp(a, f), Justification::mp(kept, s_p1));
    map[k] = static_cast<int>(out.steps.size());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lemma library

void LemmaLibrary::add(const std::string& name, Proof p) {
  templates_[name] = std::move(p);
}

bool LemmaLibrary::contains(const std::string& name) const {
  return templates_.count(name) > 0;
}

const Proof& LemmaLibrary::proof_template(const std::string& name) const {
  auto it = templates_.find(name);
  if (it == templates_.end()) throw UnknownLemma(name);
  return it->second;
}

std::vector<std::string> LemmaLibrary::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : templates_) out.push_back(k);
  return out;
}

namespace {

// expand, then discharge: the metatheorem is defined on primitive steps
Proof transform_clean(const Proof& p, Formula a, const LemmaLibrary& lib) {
  return deduction_transform(expand_lemmas(p, lib), a, lib);
}

LemmaLibrary build_builtin() {
  LemmaLibrary lib;
  Formula A = Formula::atom("A");
  Formula B = Formula::atom("B");

  {  // id: |- A -> A, the five-step proof
    Proof p;
    append_step(p, p2_instance(A, imp(A, A), A),
                Justification::p2(A, imp(A, A), A));
    append_step(p, imp(A, imp(imp(A, A), A)), Justification::p1(A, imp(A, A)));
    append_step(p, imp(imp(A, imp(A, A)), imp(A, A)), Justification::mp(1, 2));
    append_step(p, imp(A, imp(A, A)), Justification::p1(A, A));
    append_step(p, imp(A, A), Justification::mp(3, 4));
    lib.add("id", std::move(p));
  }

  {  // dneg-elim: |- (~(~A)) -> A, the worked 13-step proof
    Formula n1 = neg(A), n2 = neg(neg(A)), n3 = neg(neg(neg(A))),
            n4 = neg(neg(neg(neg(A))));
    Proof p;
    append_step(p, imp(n2, imp(n4, n2)), Justification::p1(n2, n4));
    append_step(p, imp(imp(n4, n2), imp(n1, n3)), Justification::p3(n3, n1));
    append_step(p, imp(n2, imp(n1, n3)), Justification::hs(1, 2));
    append_step(p, imp(imp(n1, n3), imp(n2, A)), Justification::p3(A, n2));
    append_step(p, imp(n2, imp(n2, A)), Justification::hs(3, 4));
    append_step(p, p2_instance(n2, n2, A), Justification::p2(n2, n2, A));
    append_step(p, imp(imp(n2, n2), imp(n2, A)), Justification::mp(5, 6));
    append_step(p, p2_instance(n2, imp(n2, n2), n2),
                Justification::p2(n2, imp(n2, n2), n2));
    append_step(p, imp(n2, imp(imp(n2, n2), n2)),
                Justification::p1(n2, imp(n2, n2)));
    append_step(p, imp(imp(n2, imp(n2, n2)), imp(n2, n2)),
                Justification::mp(8, 9));
    append_step(p, imp(n2, imp(n2, n2)), Justification::p1(n2, n2));
    append_step(p, imp(n2, n2), Justification::mp(10, 11));
    append_step(p, imp(n2, A), Justification::mp(7, 12));
    lib.add("dneg-elim", std::move(p));
  }

  {  // dneg-intro: |- A -> (~(~A))
    Formula n1 = neg(A), n2 = neg(neg(A)), n3 = neg(neg(neg(A)));
    Proof p;
    append_step(p, imp(imp(n3, n1), imp(A, n2)), Justification::p3(n2, A));
    append_step(p, imp(n3, n1),
                Justification::lemma_ref("dneg-elim", {{"A", n1}}));
    append_step(p, imp(A, n2), Justification::mp(2, 1));
    lib.add("dneg-intro", std::move(p));
  }

  {  // exfalso: |- (~B) -> (B -> A)
    Proof p;
    append_step(p, imp(neg(B), imp(neg(A), neg(B))),
                Justification::p1(neg(B), neg(A)));
    append_step(p, imp(imp(neg(A), neg(B)), imp(B, A)),
                Justification::p3(A, B));
    append_step(p, imp(neg(B), imp(B, A)), Justification::hs(1, 2));
    lib.add("exfalso", std::move(p));
  }

  {  // b-to-mp: |- A -> ((A -> B) -> B), discharging A -> B then A
    Proof demo;
    demo.premises = {A, imp(A, B)};
    append_step(demo, A, Justification::premise());
    append_step(demo, imp(A, B), Justification::premise());
    append_step(demo, B, Justification::mp(1, 2));
    Proof once = transform_clean(demo, imp(A, B), lib);
    lib.add("b-to-mp", transform_clean(once, A, lib));
  }

  {  // contrapose: |- (B -> A) -> ((~A) -> (~B))
    Proof demo;
    demo.premises = {imp(B, A)};
    append_step(demo, imp(B, A), Justification::premise());
    append_step(demo, imp(neg(neg(B)), B),
                Justification::lemma_ref("dneg-elim", {{"A", B}}));
    append_step(demo, imp(neg(neg(B)), A), Justification::hs(1, 2));
    append_step(demo, imp(A, neg(neg(A))),
                Justification::lemma_ref("dneg-intro", {{"A", A}}));
    append_step(demo, imp(neg(neg(B)), neg(neg(A))), Justification::hs(3, 4));
    append_step(demo, imp(imp(neg(neg(B)), neg(neg(A))), imp(neg(A), neg(B))),
                Justification::p3(neg(B), neg(A)));
    append_step(demo, imp(neg(A), neg(B)), Justification::mp(5, 6));
    lib.add("contrapose", transform_clean(demo, imp(B, A), lib));
  }

  {  // peirce: |- ((A -> B) -> A) -> A, the worked 12-step demonstration
    Formula na = neg(A);
    Formula naa = imp(na, A);
    Formula nnaa = neg(naa);
    Proof demo;
    demo.premises = {imp(imp(A, B), A)};
    append_step(demo, imp(imp(A, B), A), Justification::premise());
    append_step(demo, imp(na, imp(A, B)),
                Justification::lemma_ref("exfalso", {{"A", B}, {"B", A}}));
    append_step(demo, imp(na, A), Justification::hs(2, 1));
    append_step(demo, imp(na, imp(neg(nnaa), na)),
                Justification::p1(na, neg(nnaa)));
    append_step(demo, imp(imp(neg(nnaa), na), imp(A, nnaa)),
                Justification::p3(nnaa, A));
    append_step(demo, imp(na, imp(A, nnaa)), Justification::hs(4, 5));
    append_step(demo, p2_instance(na, A, nnaa), Justification::p2(na, A, nnaa));
    append_step(demo, imp(imp(na, A), imp(na, nnaa)), Justification::mp(6, 7));
    append_step(demo, imp(na, nnaa), Justification::mp(3, 8));
    append_step(demo, imp(imp(na, nnaa), imp(naa, A)),
                Justification::p3(A, naa));
    append_step(demo, imp(naa, A), Justification::mp(9, 10));
    append_step(demo, A, Justification::mp(3, 11));
    lib.add("peirce", transform_clean(demo, imp(imp(A, B), A), lib));
  }

  {  // neg-imp: |- A -> ((~B) -> (~(A -> B)))
    Proof p;
    append_step(p, imp(A, imp(imp(A, B), B)),
                Justification::lemma_ref("b-to-mp", {{"A", A}, {"B", B}}));
    append_step(p, imp(imp(imp(A, B), B), imp(neg(B), neg(imp(A, B)))),
                Justification::lemma_ref("contrapose",
                                         {{"A", B}, {"B", imp(A, B)}}));
    append_step(p, imp(A, imp(neg(B), neg(imp(A, B)))),
                Justification::hs(1, 2));
    lib.add("neg-imp", std::move(p));
  }

  {  // dneg-ante: |- (A -> B) -> ((~(~A)) -> B)
    Proof demo;
    demo.premises = {imp(A, B)};
    append_step(demo, imp(A, B), Justification::premise());
    append_step(demo, imp(neg(neg(A)), A),
                Justification::lemma_ref("dneg-elim", {{"A", A}}));
    append_step(demo, imp(neg(neg(A)), B), Justification::hs(2, 1));
    lib.add("dneg-ante", transform_clean(demo, imp(A, B), lib));
  }

  {  // absurd: |- ((~A) -> A) -> ((~A) -> B)
    Formula na = neg(A);
    Proof demo;
    demo.premises = {imp(na, A), na};
    append_step(demo, imp(na, A), Justification::premise());
    append_step(demo, na, Justification::premise());
    append_step(demo, A, Justification::mp(2, 1));
    append_step(demo, imp(na, imp(A, B)),
                Justification::lemma_ref("exfalso", {{"A", B}, {"B", A}}));
    append_step(demo, imp(A, B), Justification::mp(2, 4));
    append_step(demo, B, Justification::mp(3, 5));
    Proof once = transform_clean(demo, na, lib);
    lib.add("absurd", transform_clean(once, imp(na, A), lib));
  }

  {  // raa: |- ((~A) -> A) -> A, the worked 12-step demonstration
    Formula na = neg(A);
    Formula aa = imp(A, A);
    Proof demo;
    demo.premises = {imp(na, A)};
    append_step(demo, imp(na, imp(aa, na)), Justification::p1(na, aa));
    append_step(demo, imp(imp(neg(neg(aa)), na), imp(A, neg(aa))),
                Justification::p3(neg(aa), A));
    append_step(demo, imp(imp(aa, na), imp(neg(neg(aa)), na)),
                Justification::lemma_ref("dneg-ante", {{"A", aa}, {"B", na}}));
    append_step(demo, imp(imp(aa, na), imp(A, neg(aa))),
                Justification::hs(3, 2));
    append_step(demo, imp(na, imp(A, neg(aa))), Justification::hs(1, 4));
    append_step(demo, imp(imp(na, A), imp(na, neg(aa))),
                Justification::lemma_ref("absurd", {{"A", A}, {"B", neg(aa)}}));
    append_step(demo, imp(na, A), Justification::premise());
    append_step(demo, imp(na, neg(aa)), Justification::mp(7, 6));
    append_step(demo, imp(imp(na, neg(aa)), imp(aa, A)),
                Justification::p3(A, aa));
    append_step(demo, imp(aa, A), Justification::mp(8, 9));
    append_step(demo, aa, Justification::lemma_ref("id", {{"A", A}}));
    append_step(demo, A, Justification::mp(11, 10));
    lib.add("raa", transform_clean(demo, imp(na, A), lib));
  }

  {  // case-split: |- (A -> B) -> (((~A) -> B) -> B), the worked 9 steps
    Formula na = neg(A), nb = neg(B);
    Proof demo;
    demo.premises = {imp(A, B), imp(na, B)};
    append_step(demo, imp(A, B), Justification::premise());
    append_step(demo, imp(na, B), Justification::premise());
    append_step(demo, imp(B, neg(nb)),
                Justification::lemma_ref("dneg-intro", {{"A", B}}));
    append_step(demo, imp(na, neg(nb)), Justification::hs(2, 3));
    append_step(demo, imp(imp(na, neg(nb)), imp(nb, A)),
                Justification::p3(A, nb));
    append_step(demo, imp(nb, A), Justification::mp(4, 5));
    append_step(demo, imp(nb, B), Justification::hs(6, 1));
    append_step(demo, imp(imp(nb, B), B),
                Justification::lemma_ref("raa", {{"A", B}}));
    append_step(demo, B, Justification::mp(7, 8));
    Proof once = transform_clean(demo, imp(na, B), lib);
    lib.add("case-split", transform_clean(once, imp(A, B), lib));
  }

  // Every template must check with empty premises.
  for (const auto& name : lib.names()) {
    auto chk = check_proof(lib.proof_template(name), lib);
    if (!chk.accepted)
      throw Error("lemma template " + name + " fails at step " +
                  std::to_string(chk.step) + ": " +
                  reject_reason_name(chk.reason));
    if (!lib.proof_template(name).premises.empty())
      throw Error("lemma template " + name + " still has premises");
  }
  return lib;
}

}  // namespace

const LemmaLibrary& LemmaLibrary::builtin() {
  static const LemmaLibrary lib = build_builtin();
  return lib;
}

// ---------------------------------------------------------------------------
// Deducibility relations

Proof deducibility_proof(Formula f, const Assignment& row) {
  if (!prop::in_lprime(f)) throw NotInLPrime(prop::print_atomic(f));
  for (const auto& atom : f.atoms())
    if (!row.covers(atom)) throw UncoveredAtom(atom);

  Proof out;
  std::unordered_map<std::string, int> premise_step;
  std::unordered_map<const Node*, int> done;

  for (std::size_t i = 0; i < row.atoms().size(); ++i) {
    Formula atom = Formula::atom(row.atoms()[i]);
    out.premises.push_back(row.values()[i] ? atom : neg(atom));
  }

  // returns the step index concluding g' (g when true under the row, ~g else)
  std::function<int(Formula)> build = [&](Formula g) -> int {
    auto hit = done.find(g.raw());
    if (hit != done.end()) return hit->second;
    int result;
    if (g.is_atom()) {
      auto pit = premise_step.find(g.atom_name());
      if (pit != premise_step.end()) {
        result = pit->second;
      } else {
        bool v = row.value(g.atom_name());
        append_step(out, v ? g : neg(g), Justification::premise());
        result = static_cast<int>(out.steps.size());
        premise_step.emplace(g.atom_name(), result);
      }
    } else if (g.conn() == Conn::Not) {
      Formula b = g.child();
      if (prop::eval(b, row)) {
        // v(~B) = F, so the primed form is ~(~B), via dneg-intro
        int i = build(b);
        append_step(out, imp(b, neg(neg(b))),
                    Justification::lemma_ref("dneg-intro", {{"A", b}}));
        int lm = static_cast<int>(out.steps.size());
        append_step(out, neg(neg(b)), Justification::mp(i, lm));
        result = static_cast<int>(out.steps.size());
      } else {
        result = build(b);  // B' = ~B already is (~B)'
      }
    } else {
      Formula b = g.left(), c = g.right();
      bool vb = prop::eval(b, row), vc = prop::eval(c, row);
      if (vc) {
        int i = build(c);
        append_step(out, p1_instance(c, b), Justification::p1(c, b));
        int ax = static_cast<int>(out.steps.size());
        append_step(out, imp(b, c), Justification::mp(i, ax));
        result = static_cast<int>(out.steps.size());
      } else if (!vb) {
        int i = build(b);  // concludes ~B
        append_step(out, imp(neg(b), imp(b, c)),
                    Justification::lemma_ref("exfalso", {{"A", c}, {"B", b}}));
        int lm = static_cast<int>(out.steps.size());
        append_step(out, imp(b, c), Justification::mp(i, lm));
        result = static_cast<int>(out.steps.size());
      } else {
        // v(B)=T, v(C)=F: conclude ~(B -> C) via neg-imp and two MPs
        int i = build(b);
        int j = build(c);  // concludes ~C
        append_step(out, imp(b, imp(neg(c), neg(imp(b, c)))),
                    Justification::lemma_ref("neg-imp", {{"A", b}, {"B", c}}));
        int lm = static_cast<int>(out.steps.size());
        append_step(out, imp(neg(c), neg(imp(b, c))), Justification::mp(i, lm));
        int mid = static_cast<int>(out.steps.size());
        append_step(out, neg(imp(b, c)), Justification::mp(j, mid));
        result = static_cast<int>(out.steps.size());
      }
    }
    done.emplace(g.raw(), result);
    return result;
  };
  build(f);
  return out;
}

// ---------------------------------------------------------------------------
// Completeness synthesis

namespace {

// |- P -> X and |- (~P) -> X merge into |- X via the case-split lemma.
Proof merge_branches(const Proof& true_branch, const Proof& false_branch,
                     Formula atom) {
  Formula x = true_branch.conclusion().right();
  Proof out;
  int t_end = splice(out, true_branch);
  int f_end = splice(out, false_branch);
  append_step(out, imp(imp(atom, x), imp(imp(neg(atom), x), x)),
              Justification::lemma_ref("case-split", {{"A", atom}, {"B", x}}));
  int cs = static_cast<int>(out.steps.size());
  append_step(out, imp(imp(neg(atom), x), x), Justification::mp(t_end, cs));
  int mid = static_cast<int>(out.steps.size());
  append_step(out, x, Justification::mp(f_end, mid));
  return out;
}

}  // namespace

SynthesisResult synthesize_proof(Formula f, std::size_t atom_cap) {
  const LemmaLibrary& lib = LemmaLibrary::builtin();
  Formula g = prop::to_lprime(f);
  if (prop::classify(g).kind != prop::Classification::Valid)
    throw NotATautology(prop::print_atomic(f));
  std::vector<std::string> atoms = g.atoms();
  if (atoms.size() > atom_cap)
    throw CapExceeded(std::to_string(atoms.size()) + " atoms, cap " +
                      std::to_string(atom_cap));

  auto rows = prop::canonical_assignments(atoms);
  std::vector<Proof> branches;
  branches.reserve(rows.size());
  for (const auto& row : rows) {
    Proof p = deducibility_proof(g, row);
    // discharge the literals innermost-first so the branch form reads
    // P'_1 -> (P'_2 -> ( ... -> A))
    for (std::size_t idx = atoms.size(); idx-- > 0;) {
      Formula atom = Formula::atom(atoms[idx]);
      Formula lit = row.value(atoms[idx]) ? atom : neg(atom);
      p = deduction_transform(expand_lemmas(p, lib), lit, lib);
    }
    branches.push_back(std::move(p));
  }

  SynthesisResult result;
  result.merged_rows = rows.size();
  for (std::size_t stage = 0; stage < atoms.size(); ++stage) {
    Formula atom = Formula::atom(atoms[stage]);
    std::size_t half = branches.size() / 2;
    std::vector<Proof> next;
    next.reserve(half);
    for (std::size_t r = 0; r < half; ++r)
      next.push_back(merge_branches(branches[r], branches[r + half], atom));
    branches = std::move(next);
  }
  if (branches.size() != 1) throw Error("merge stages did not converge");

  result.proof = expand_lemmas(branches.front(), lib);
  result.oversized = result.proof.steps.size() > kStepCountWarningThreshold;
  return result;
}

// ---------------------------------------------------------------------------
// Soundness

SoundnessResult verify_soundness(const Proof& p) {
  for (const auto& s : p.steps)
    if (s.why.kind == ReasonKind::Lemma || s.why.kind == ReasonKind::HS)
      throw InputRejected("soundness check requires a lemma-free proof");

  std::vector<Formula> everything = p.premises;
  for (const auto& s : p.steps) everything.push_back(s.formula);
  std::vector<std::string> atoms = prop::atom_union(everything);
  if (atoms.size() > 24)
    throw CapExceeded("too many atoms for the table strategy");

  SoundnessResult res{true, 0};
  for (const auto& row : prop::canonical_assignments(atoms)) {
    // per-row memo shared across the steps; their subtrees overlap heavily
    std::unordered_map<const Node*, bool> memo;
    std::function<bool(Formula)> value = [&](Formula h) -> bool {
      auto it = memo.find(h.raw());
      if (it != memo.end()) return it->second;
      bool v;
      switch (h.conn()) {
        case Conn::Atom: v = row.value(h.atom_name()); break;
        case Conn::Not: v = !value(h.child()); break;
        case Conn::Implies: v = !value(h.left()) || value(h.right()); break;
        default: throw NotInLPrime(prop::print_atomic(h));
      }
      memo.emplace(h.raw(), v);
      return v;
    };
    bool premises_hold = true;
    for (const auto& g : p.premises)
      if (!value(g)) {
        premises_hold = false;
        break;
      }
    if (!premises_hold) continue;
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
      if (!value(p.steps[k].formula)) {
        int at = static_cast<int>(k) + 1;
        if (res.accepted || at < res.step) res = {false, at};
        break;
      }
    }
    if (!res.accepted && res.step == 1) break;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Script format

namespace {

std::string reason_text(const Justification& why) {
  using prop::print_atomic;
  switch (why.kind) {
    case ReasonKind::Premise:
      return "premise";
    case ReasonKind::AxiomP1:
      return "P1[" + print_atomic(why.parts[0]) + ";" +
             print_atomic(why.parts[1]) + "]";
    case ReasonKind::AxiomP2:
      return "P2[" + print_atomic(why.parts[0]) + ";" +
             print_atomic(why.parts[1]) + ";" + print_atomic(why.parts[2]) +
             "]";
    case ReasonKind::AxiomP3:
      return "P3[" + print_atomic(why.parts[0]) + ";" +
             print_atomic(why.parts[1]) + "]";
    case ReasonKind::MP:
      return "MP(" + std::to_string(why.i) + "," + std::to_string(why.j) + ")";
    case ReasonKind::HS:
      return "HS(" + std::to_string(why.i) + "," + std::to_string(why.j) + ")";
    case ReasonKind::Lemma: {
      std::string out = "LEMMA " + why.lemma + "[";
      bool first = true;
      for (const auto& [meta, g] : why.inst) {
        if (!first) out += ",";
        out += meta + ":=" + print_atomic(g);
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

Justification parse_reason(const std::string& text, std::size_t lineno) {
  std::string t = trim(text);
  auto bracket_parts = [&](const std::string& payload) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : payload) {
      if (c == ';') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };
  if (t == "premise") return Justification::premise();
  if (t.rfind("P1[", 0) == 0 || t.rfind("P2[", 0) == 0 ||
      t.rfind("P3[", 0) == 0) {
    if (t.back() != ']') throw ParseError(lineno, "missing ']' in reason");
    auto parts = bracket_parts(t.substr(3, t.size() - 4));
    std::vector<Formula> fs;
    fs.reserve(parts.size());
    for (const auto& part : parts) fs.push_back(prop::parse(part));
    if (t[1] == '1' && fs.size() == 2) return Justification::p1(fs[0], fs[1]);
    if (t[1] == '2' && fs.size() == 3)
      return Justification::p2(fs[0], fs[1], fs[2]);
    if (t[1] == '3' && fs.size() == 2) return Justification::p3(fs[0], fs[1]);
    throw ParseError(lineno, "axiom arity mismatch in reason");
  }
  if (t.rfind("MP(", 0) == 0 || t.rfind("HS(", 0) == 0) {
    if (t.back() != ')') throw ParseError(lineno, "missing ')' in reason");
    std::string payload = t.substr(3, t.size() - 4);
    std::size_t comma = payload.find(',');
    if (comma == std::string::npos)
      throw ParseError(lineno, "expected two step references");
    int i = std::stoi(trim(payload.substr(0, comma)));
    int j = std::stoi(trim(payload.substr(comma + 1)));
    return t[0] == 'M' ? Justification::mp(i, j) : Justification::hs(i, j);
  }
  if (t.rfind("LEMMA ", 0) == 0) {
    std::size_t open = t.find('[');
    if (open == std::string::npos || t.back() != ']')
      throw ParseError(lineno, "malformed lemma reference");
    std::string name = trim(t.substr(6, open - 6));
    std::string payload = t.substr(open + 1, t.size() - open - 2);
    Instantiation inst;
    std::string cur;
    auto flush = [&]() {
      if (trim(cur).empty()) return;
      std::size_t sep = cur.find(":=");
      if (sep == std::string::npos)
        throw ParseError(lineno, "lemma binding needs ':='");
      inst[trim(cur.substr(0, sep))] = prop::parse(cur.substr(sep + 2));
      cur.clear();
    };
    for (char c : payload) {
      if (c == ',')
        flush();
      else
        cur += c;
    }
    flush();
    return Justification::lemma_ref(name, std::move(inst));
  }
  throw ParseError(lineno, "unknown reason '" + t + "'");
}

}  // namespace

std::string write_proof_script(const Proof& p) {
  std::string out;
  for (const auto& g : p.premises)
    out += "premise: " + prop::print_atomic(g) + "\n";
  for (std::size_t k = 0; k < p.steps.size(); ++k)
    out += std::to_string(k + 1) + ". " +
           prop::print_atomic(p.steps[k].formula) + " ; " +
           reason_text(p.steps[k].why) + "\n";
  return out;
}

Proof read_proof_script(std::string_view text) {
  Proof p;
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
      p.premises.push_back(prop::parse(t.substr(8)));
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
    Formula f = prop::parse(t.substr(dot + 1, semi - dot - 1));
    p.steps.push_back(Step{f, parse_reason(t.substr(semi + 1), lineno)});
  }
  return p;
}

}  // namespace logickit::proof
