#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "logickit/cli.hpp"

using logickit::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/logickit_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("classify prints the verdict with exit 0") {
  auto r = invoke({"classify", "P -> P"});
  CHECK(r.code == 0);
  CHECK(r.out == "valid\n");
}

TEST_CASE("parse errors exit 2") {
  auto r = invoke({"classify", ")P)"});
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("usage errors exit 2") {
  auto r = invoke({"no-such-command"});
  CHECK(r.code == 2);
}

TEST_CASE("sat over a premise file encodes the verdict in the exit code") {
  std::string path = write_temp("premises.txt",
                                "P <-> Q\nQ -> R\n(~R) | S\n(~P) -> S\n~S\n");
  auto r = invoke({"sat", "--file", path});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("unsatisfiable", 0) == 0);

  std::string sat_path = write_temp("premises_sat.txt", "P -> Q\nQ\n");
  auto s = invoke({"sat", "--file", sat_path});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("satisfiable", 0) == 0);
}

TEST_CASE("consequence with trace") {
  auto r = invoke({"--trace", "consequence", "--premise", "P -> Q",
                   "--premise", "(~P) -> Q", "Q"});
  CHECK(r.code == 0);
  CHECK(r.out.find("valid") != std::string::npos);
  CHECK(r.out.find("because goal-false") != std::string::npos);
}

TEST_CASE("json output for classify") {
  auto r = invoke({"--format", "json", "classify", "P -> Q"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"verdict\": \"contingent\"") != std::string::npos);
}

TEST_CASE("levels reproduces the conjunction counts") {
  auto r = invoke({"levels", "--atoms", "P,Q", "--conns", "&", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "2090918\n");
}

TEST_CASE("table renders the golden Example 2.4.2") {
  auto r = invoke({"table", "((~P)|R) -> (P<->R)"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "P | R | ((~P) | R) -> (P <-> R)\n"
        "T | T | T\n"
        "T | F | T\n"
        "F | T | F\n"
        "F | F | T\n");
}

TEST_CASE("synth output pipes into prove-check") {
  auto synth = invoke({"synth", "P -> (Q -> P)"});
  REQUIRE(synth.code == 0);
  std::string path = write_temp("synth.proof", synth.out);
  auto check = invoke({"prove-check", path});
  CHECK(check.code == 0);
  CHECK(check.out == "accepted\n");
}

TEST_CASE("synth refuses non-tautologies with exit 1") {
  auto r = invoke({"synth", "P -> Q"});
  CHECK(r.code == 1);
}

TEST_CASE("deduce applies the deduction theorem to a script") {
  std::string script =
      "premise: A -> B\n"
      "premise: B -> C\n"
      "premise: A\n"
      "1. A -> B ; premise\n"
      "2. B -> C ; premise\n"
      "3. A ; premise\n"
      "4. B ; MP(1,3)\n"
      "5. C ; MP(2,4)\n";
  std::string path = write_temp("demo.proof", script);
  auto r = invoke({"deduce", path, "--discharge", "A"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("13. A -> C ; MP(10,12)") != std::string::npos);
  std::string out_path = write_temp("demo_out.proof", r.out);
  CHECK(invoke({"prove-check", out_path}).code == 0);
}

TEST_CASE("fdnf, denial and nnf print formulas") {
  CHECK(invoke({"fdnf", "P <-> (Q | R)"}).out ==
        "(P & Q & R) | (P & Q & (~R)) | (P & (~Q) & R) | "
        "((~P) & (~Q) & (~R))\n");
  CHECK(invoke({"denial", "((~P) | (~Q)) & (R & (~S))"}).out ==
        "(P & Q) | ((~R) | S)\n");
  CHECK(invoke({"nnf", "~((~P)|(~Q)) -> R"}).out == "((~P) | (~Q)) | R\n");
}

TEST_CASE("pd-parse reports Pd' membership") {
  auto r = invoke({"pd-parse", "exists x (~(forall x P(x,y)))"});
  CHECK(r.code == 0);
  CHECK(r.out.find("not in Pd'") != std::string::npos);
  CHECK(invoke({"pd-parse", "forall x (exists c P(c))"}).code == 2);
}

TEST_CASE("congruent encodes the verdict in the exit code") {
  CHECK(invoke({"congruent", "forall x P(x)", "forall y P(y)"}).code == 0);
  CHECK(invoke({"congruent", "forall x P(x)", "forall y Q(y)"}).code == 1);
}

TEST_CASE("subst, closure-univ and prenex") {
  CHECK(invoke({"subst", "forall y (P(x,y) -> Q(y,x))", "x", "c"}).out ==
        "forall y (P(c,y) -> Q(y,c))\n");
  CHECK(invoke({"closure-univ", "P(x) -> (exists x P(x))"}).out ==
        "forall x (P(x) -> (exists x P(x)))\n");
  auto p = invoke({"prenex", "forall x P(x) -> forall x Q(x)"});
  CHECK(p.code == 0);
  CHECK(p.out == "forall z (exists x (Q(z) | (~P(x))))\n");
}

TEST_CASE("model checks a structure document") {
  std::string doc = R"({
    "domain": ["a", "b"],
    "constants": {"c": "a"},
    "relations": {"P/1": [["a"]], "Q/2": [["a","a"], ["a","b"]]}
  })";
  std::string path = write_temp("structure.json", doc);
  auto yes = invoke({"model", "--structure", path,
                     "(forall x (P(c) | Q(x,x))) -> (P(c) | (forall x Q(x,x)))"});
  CHECK(yes.code == 0);
  auto no = invoke({"model", "--structure", path,
                    "(forall x (P(c) | Q(x,x))) -> (P(c) & (forall x Q(x,x)))"});
  CHECK(no.code == 1);
}

TEST_CASE("countermodel search finds the Example 3.7.1 refutation") {
  auto r = invoke({"--max-domain", "2", "countermodel",
                   "P(x) -> (forall x P(x))"});
  CHECK(r.code == 1);
  CHECK(r.out.find("1-valid: yes") != std::string::npos);
  CHECK(r.out.find("2-valid: no") != std::string::npos);
  CHECK(r.out.find("structure-v1") != std::string::npos);
}

TEST_CASE("pd-consequence reports invalidity with a countermodel") {
  auto r = invoke({"--max-domain", "3", "pd-consequence", "--premise",
                   "forall x (P(x) -> Q(x))", "--premise",
                   "exists x (Q(x) & R(x))", "exists x (R(x) & (~Q(x)))"});
  CHECK(r.code == 1);
  CHECK(r.out.find("invalid") != std::string::npos);
}

TEST_CASE("pd-deduce refuses the Example 3.7.1 trap with exit 1") {
  std::string script =
      "premise: P(x)\n"
      "1. P(x) ; premise\n"
      "2. forall x P(x) ; GEN(1,x)\n";
  std::string path = write_temp("trap.proof", script);
  auto r = invoke({"pd-deduce", path, "--discharge", "P(x)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("generalizes variable x") != std::string::npos);
}

TEST_CASE("pd-prove-check accepts the renaming proof") {
  std::string script =
      "1. (forall x P(x)) -> P(y) ; P5[P(x);x;y]\n"
      "2. forall y ((forall x P(x)) -> P(y)) ; GEN(1,y)\n"
      "3. (forall y ((forall x P(x)) -> P(y))) -> ((forall x P(x)) -> "
      "(forall y P(y))) ; P4[forall x P(x);P(y);y]\n"
      "4. (forall x P(x)) -> (forall y P(y)) ; MP(2,3)\n";
  std::string path = write_temp("rename.proof", script);
  auto r = invoke({"pd-prove-check", path});
  CHECK(r.code == 0);
  CHECK(r.out == "accepted\n");
}

TEST_CASE("compile, simulate and circuit-equiv") {
  auto compiled = invoke({"compile", "(A & B) | ((~A) & (~B))"});
  REQUIRE(compiled.code == 0);
  std::string c_path = write_temp("c.netlist", compiled.out);
  auto compiled_d = invoke({"compile", "(A & B) | (~(A | B))"});
  std::string d_path = write_temp("d.netlist", compiled_d.out);
  CHECK(invoke({"circuit-equiv", c_path, d_path}).code == 0);

  auto ha = invoke({"simulate", "--half-adder", "--in", "A=1", "--in", "B=1"});
  CHECK(ha.code == 0);
  CHECK(ha.out.find("S = 0") != std::string::npos);
  CHECK(ha.out.find("C = 1") != std::string::npos);

  auto different = invoke({"compile", "A & B"});
  std::string e_path = write_temp("e.netlist", different.out);
  CHECK(invoke({"circuit-equiv", c_path, e_path}).code == 1);
}

TEST_CASE("closure lists the conjunction consequences") {
  auto r = invoke({"closure", "--premise", "P & Q", "--atoms", "P,Q",
                   "--conns", "~,&,->", "--size", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("P\n") != std::string::npos);
  CHECK(r.out.find("Q\n") != std::string::npos);
}

TEST_CASE("op-check passes on the small universe") {
  auto r = invoke({"op-check", "--atoms", "P,Q", "--conns", "~,&,->",
                   "--size", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("deducibility emits a checkable script") {
  auto r = invoke({"deducibility", "P -> (~Q)", "--row", "TT"});
  REQUIRE(r.code == 0);
  std::string path = write_temp("row.proof", r.out);
  CHECK(invoke({"prove-check", path}).code == 0);
  CHECK(r.out.find("premise: P") != std::string::npos);
  CHECK(r.out.find("premise: Q") != std::string::npos);
}

TEST_CASE("extend prints a negation-complete extension") {
  auto r = invoke({"extend", "--premise", "P -> Q", "--premise", "Q",
                   "--atoms", "P,Q", "--size", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("P -> Q") != std::string::npos);
  CHECK(r.out.find("assignment") != std::string::npos);
}
