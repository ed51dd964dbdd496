// Regenerates the proof-script golden files from their programmatic forms.
// Build and run by hand when the script format changes:
//   g++ -std=c++20 -Iinclude -Ivendor tests/golden_gen.cpp build/src/liblogickit.a
#include <fstream>
#include <iostream>

#include "logickit/proof.hpp"

using namespace logickit;
using namespace logickit::proof;
using prop::Formula;

namespace {

Formula neg(Formula f) { return Formula::negation(f); }
Formula imp(Formula a, Formula b) { return Formula::implies(a, b); }

void emit(const std::string& name, const Proof& p) {
  auto chk = check_proof(p);
  if (!chk.accepted) {
    std::cerr << name << " REJECTED at step " << chk.step << ": "
              << reject_reason_name(chk.reason) << "\n";
    std::exit(1);
  }
  std::ofstream out("tests/golden/" + name);
  out << write_proof_script(p);
  std::cout << "wrote " << name << " (" << p.steps.size() << " steps)\n";
}

}  // namespace

int main() {
  Formula A = Formula::atom("A");
  Formula B = Formula::atom("B");

  // Example 2.11.1 and 2.11.2 are the id and dneg-elim library templates.
  emit("example_2_11_1.proof", LemmaLibrary::builtin().proof_template("id"));
  emit("example_2_11_2.proof",
       LemmaLibrary::builtin().proof_template("dneg-elim"));

  {  // Example 2.12.1: ~~A |- A, eight steps per the answer key
    Formula n1 = neg(A), n2 = neg(neg(A)), n3 = neg(neg(neg(A))),
            n4 = neg(neg(neg(neg(A))));
    Proof p;
    p.premises = {n2};
    p.steps = {
        {n2, Justification::premise()},
        {imp(n2, imp(n4, n2)), Justification::p1(n2, n4)},
        {imp(n4, n2), Justification::mp(1, 2)},
        {imp(imp(n4, n2), imp(n1, n3)), Justification::p3(n3, n1)},
        {imp(n1, n3), Justification::mp(3, 4)},
        {imp(imp(n1, n3), imp(n2, A)), Justification::p3(A, n2)},
        {imp(n2, A), Justification::mp(5, 6)},
        {A, Justification::mp(1, 7)},
    };
    emit("example_2_12_1.proof", p);
  }

  {  // Example 2.13.1 (II): the transformed demonstration
    Formula a = Formula::atom("A"), b = Formula::atom("B"),
            c = Formula::atom("C");
    Proof in;
    in.premises = {imp(a, b), imp(b, c), a};
    in.steps = {
        {imp(a, b), Justification::premise()},
        {imp(b, c), Justification::premise()},
        {a, Justification::premise()},
        {b, Justification::mp(1, 3)},
        {c, Justification::mp(2, 4)},
    };
    emit("example_2_13_1_II.proof", deduction_transform(in, a));
  }

  {  // Exercise 2.13 #2A: B -> A |- (~A) -> (~B)
    Proof p;
    p.premises = {imp(B, A)};
    p.steps = {
        {imp(B, A), Justification::premise()},
        {imp(neg(neg(B)), B),
         Justification::lemma_ref("dneg-elim", {{"A", B}})},
        {imp(neg(neg(B)), A), Justification::hs(1, 2)},
        {imp(A, neg(neg(A))),
         Justification::lemma_ref("dneg-intro", {{"A", A}})},
        {imp(neg(neg(B)), neg(neg(A))), Justification::hs(3, 4)},
        {imp(imp(neg(neg(B)), neg(neg(A))), imp(neg(A), neg(B))),
         Justification::p3(neg(B), neg(A))},
        {imp(neg(A), neg(B)), Justification::mp(5, 6)},
    };
    emit("exercise_2_13_2A.proof", p);
  }

  {  // Exercise 2.13 #2B: (A -> B) -> A |- A
    Formula na = neg(A);
    Formula naa = imp(na, A);
    Formula nnaa = neg(naa);
    Proof p;
    p.premises = {imp(imp(A, B), A)};
    p.steps = {
        {imp(imp(A, B), A), Justification::premise()},
        {imp(na, imp(A, B)),
         Justification::lemma_ref("exfalso", {{"A", B}, {"B", A}})},
        {imp(na, A), Justification::hs(1, 2)},
        {imp(na, imp(neg(nnaa), na)), Justification::p1(na, neg(nnaa))},
        {imp(imp(neg(nnaa), na), imp(A, nnaa)), Justification::p3(nnaa, A)},
        {imp(na, imp(A, nnaa)), Justification::hs(4, 5)},
        {imp(imp(na, imp(A, nnaa)), imp(imp(na, A), imp(na, nnaa))),
         Justification::p2(na, A, nnaa)},
        {imp(imp(na, A), imp(na, nnaa)), Justification::mp(6, 7)},
        {imp(na, nnaa), Justification::mp(3, 8)},
        {imp(imp(na, nnaa), imp(naa, A)), Justification::p3(A, naa)},
        {imp(naa, A), Justification::mp(9, 10)},
        {A, Justification::mp(3, 11)},
    };
    emit("exercise_2_13_2B.proof", p);
  }
  return 0;
}
