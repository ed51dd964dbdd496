#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logickit/structure.hpp"

using namespace logickit;
using namespace logickit::model;
using pd::parse_pd;
using pd::PdFormula;
using pd::Term;

namespace {

// the Exercise 3.3 #3 structure: D = {a,b}, I(c) = a, P' = {a},
// Q' = {(a,a),(a,b)}
Structure exercise_3_3_structure() {
  return load_structure(R"({
    "version": "structure-v1",
    "domain": ["a", "b"],
    "constants": {"c": "a"},
    "relations": {"P/1": [["a"]], "Q/2": [["a","a"], ["a","b"]]}
  })");
}

Structure two_element(const std::set<std::vector<std::size_t>>& p_pairs) {
  Structure m;
  m.domain = {"a", "b"};
  m.relations[{"P", 2}] = p_pairs;
  return m;
}

PdFormula quantifier_expansion(const Structure& m, PdFormula f);

// the section's note: over a finite domain, forall becomes a conjunction and
// exists a disjunction over named elements
PdFormula quantifier_expansion(const Structure& m, PdFormula f) {
  using pd::PdConn;
  switch (f.conn()) {
    case PdConn::Pred:
      return f;
    case PdConn::Not:
      return PdFormula::negation(quantifier_expansion(m, f.child()));
    case PdConn::Forall:
    case PdConn::Exists: {
      PdFormula out;
      for (std::size_t d = 0; d < m.domain.size(); ++d) {
        PdFormula inst = quantifier_expansion(
            m, pd::subst_free(f.body(), f.quantifier_var(),
                              Term::constant("#" + std::to_string(d))));
        if (!out.valid())
          out = inst;
        else
          out = f.conn() == PdConn::Forall ? PdFormula::conj(out, inst)
                                           : PdFormula::disj(out, inst);
      }
      return out;
    }
    default:
      return PdFormula::make(f.conn(), quantifier_expansion(m, f.left()),
                             quantifier_expansion(m, f.right()));
  }
}

PdFormula random_sentence(std::mt19937_64& rng, int depth) {
  std::function<PdFormula(int, std::vector<std::string>)> gen =
      [&](int d, std::vector<std::string> scope) -> PdFormula {
    std::uniform_int_distribution<int> pick(0, d <= 0 ? 0 : 6);
    int choice = scope.empty() && d <= 0 ? 6 : pick(rng);
    auto term = [&]() {
      if (scope.empty() || rng() % 5 == 0) return Term::constant("c");
      return Term::var(scope[rng() % scope.size()]);
    };
    switch (choice) {
      case 0:
        return rng() % 2 ? PdFormula::pred("P", {term(), term()})
                         : PdFormula::pred("Q", {term()});
      case 1:
        return PdFormula::negation(gen(d - 1, scope));
      case 2:
        return PdFormula::conj(gen(d - 1, scope), gen(d - 1, scope));
      case 3:
        return PdFormula::disj(gen(d - 1, scope), gen(d - 1, scope));
      case 4:
        return PdFormula::implies(gen(d - 1, scope), gen(d - 1, scope));
      default: {
        static const char* names[] = {"x", "y", "z"};
        std::string v = names[rng() % 3];
        auto inner = scope;
        inner.push_back(v);
        PdFormula body = gen(d - 1, inner);
        return rng() % 2 ? PdFormula::forall(v, body)
                         : PdFormula::exists(v, body);
      }
    }
  };
  return gen(depth, {});
}

}  // namespace

TEST_CASE("structure loading and validation") {
  Structure m = exercise_3_3_structure();
  CHECK(m.domain.size() == 2);
  CHECK(m.constants.at("c") == "a");
  CHECK(m.relations.at({"P", 1}).size() == 1);
  CHECK(m.relations.at({"Q", 2}).size() == 2);
}

TEST_CASE("structure loading rejects bad documents") {
  CHECK_THROWS_AS(load_structure("not json"), SchemaError);
  CHECK_THROWS_AS(load_structure(R"({"domain": []})"), DomainViolation);
  CHECK_THROWS_AS(
      load_structure(R"({"domain": ["a"], "relations": {"P/2": [["a","a","a"]]}})"),
      ArityMismatch);
  CHECK_THROWS_AS(
      load_structure(R"({"domain": ["a"], "constants": {"c": "zz"}})"),
      DomainViolation);
  CHECK_THROWS_AS(
      load_structure(R"({"domain": ["a"], "version": "structure-v9"})"),
      SchemaError);
}

TEST_CASE("structure render round trip") {
  Structure m = exercise_3_3_structure();
  Structure back = load_structure(m.render());
  CHECK(back.domain == m.domain);
  CHECK(back.constants == m.constants);
  CHECK(back.relations == m.relations);
}

TEST_CASE("models goldens: Exercise 3.3 #3 (a)-(e)") {
  Structure m = exercise_3_3_structure();
  CHECK(models(m, parse_pd(
      "(forall x (P(c) | Q(x,x))) -> (P(c) | (forall x Q(x,x)))")).holds);
  CHECK(!models(m, parse_pd(
      "(forall x (P(c) | Q(x,x))) -> (P(c) & (forall x Q(x,x)))")).holds);
  CHECK(models(m, parse_pd(
      "(forall x (P(c) | Q(x,x))) -> (P(c) & (exists x Q(x,x)))")).holds);
  CHECK(models(m, parse_pd(
      "(forall x (P(c) & Q(x,x))) <-> (P(c) & (forall x Q(x,x)))")).holds);
  CHECK(!models(m, parse_pd(
      "(forall x (P(c) & Q(c,x))) <-> (P(c) & (forall x Q(x,x)))")).holds);
}

TEST_CASE("models golden: Example 3.3.4, both structures") {
  PdFormula s1 = parse_pd(
      "(exists y (forall x P(x,y))) -> (forall x (exists y P(x,y)))");
  PdFormula s2 = parse_pd(
      "(forall x (exists y P(x,y))) -> (exists y (forall x P(x,y)))");
  PdFormula s3 = parse_pd("forall x (exists x P(x,x))");

  Structure diag = two_element({{0, 0}, {1, 1}});
  CHECK(models(diag, s1).holds);
  CHECK(!models(diag, s2).holds);
  CHECK(models(diag, s3).holds);

  Structure swap = two_element({{0, 1}, {1, 0}});
  CHECK(models(swap, s1).holds);
  CHECK(!models(swap, s2).holds);
  CHECK(!models(swap, s3).holds);
}

TEST_CASE("models golden: Example 3.3.3 on a one-element domain") {
  Structure m;
  m.domain = {"a"};
  m.relations[{"P", 2}] = {{0, 0}};
  CHECK(models(m, parse_pd("(forall x (exists y P(x,y))) -> "
                           "(exists y (forall x P(x,y)))")).holds);
}

TEST_CASE("models demands interpreted symbols") {
  Structure m = exercise_3_3_structure();
  CHECK_THROWS_AS(models(m, parse_pd("R(c)")), UnknownSymbol);
  CHECK_THROWS_AS(models(m, parse_pd("P(d)")), UnknownSymbol);
  CHECK_THROWS_AS(models(m, parse_pd("P(c,c)")), UnknownSymbol);
}

TEST_CASE("open formulas are universally closed first") {
  Structure m = exercise_3_3_structure();
  // P(x) fails on element b, so the closure fails
  CHECK(!models(m, parse_pd("P(x)")).holds);
  CHECK(models(m, parse_pd("P(x) -> P(x)")).holds);
}

TEST_CASE("existential witnesses appear in the trace") {
  Structure m = exercise_3_3_structure();
  auto verdict = models(m, parse_pd("exists x P(x)"));
  REQUIRE(verdict.holds);
  REQUIRE(!verdict.trace.empty());
  CHECK(verdict.trace[0].second == "a");
}

TEST_CASE("quantifier elimination equivalence over small domains") {
  std::mt19937_64 rng(113);
  for (std::size_t n = 1; n <= 3; ++n) {
    Structure m;
    for (std::size_t i = 0; i < n; ++i)
      m.domain.push_back(std::string(1, static_cast<char>('a' + i)));
    m.constants["c"] = "a";
    m.relations[{"P", 2}] = {{0, 0}};
    if (n > 1) m.relations[{"P", 2}].insert({1, 0});
    m.relations[{"Q", 1}] = {{0}};
    for (int i = 0; i < 60; ++i) {
      PdFormula f = random_sentence(rng, 3);
      PdFormula expanded = quantifier_expansion(m, f);
      CHECK(models(m, f).holds == models(m, expanded).holds);
    }
  }
}

TEST_CASE("prenex preserves the verdict on every tested structure") {
  std::mt19937_64 rng(127);
  std::vector<Structure> structures;
  structures.push_back(two_element({{0, 0}, {1, 1}}));
  structures.push_back(two_element({{0, 1}}));
  structures.push_back(two_element({}));
  for (auto& m : structures) {
    m.constants["c"] = "a";
    m.relations[{"Q", 1}] = {{1}};
  }
  for (int i = 0; i < 80; ++i) {
    PdFormula f = random_sentence(rng, 3);
    PdFormula p = pd::prenex(f);
    for (const auto& m : structures)
      CHECK(models(m, f).holds == models(m, p).holds);
  }
}

TEST_CASE("quantifier laws of Thm 3.4.9 hold on all two-element structures") {
  std::vector<std::pair<const char*, const char*>> laws{
      {"exists x (exists y P(x,y))", "exists y (exists x P(x,y))"},
      {"forall x (forall y P(x,y))", "forall y (forall x P(x,y))"},
      {"~(exists x Q(x))", "forall x (~Q(x))"},
      {"~(forall x Q(x))", "exists x (~Q(x))"},
      {"exists x (Q(x) | R(x))", "(exists x Q(x)) | (exists x R(x))"},
      {"forall x (Q(x) & R(x))", "(forall x Q(x)) & (forall x R(x))"},
      {"forall x (S(c) | R(x))", "S(c) | (forall x R(x))"},
      {"exists x (S(c) & R(x))", "S(c) & (exists x R(x))"},
  };
  // every interpretation over a two-element domain
  for (std::uint64_t mask = 0; mask < (1u << 11); ++mask) {
    Structure m;
    m.domain = {"a", "b"};
    m.constants["c"] = (mask & 1) ? "a" : "b";
    std::set<std::vector<std::size_t>> p, q, r, s;
    for (int bit = 0; bit < 4; ++bit)
      if (mask & (2u << bit)) p.insert({std::size_t(bit / 2), std::size_t(bit % 2)});
    if (mask & (1u << 5)) q.insert({0});
    if (mask & (1u << 6)) q.insert({1});
    if (mask & (1u << 7)) r.insert({0});
    if (mask & (1u << 8)) r.insert({1});
    if (mask & (1u << 9)) s.insert({0});
    if (mask & (1u << 10)) s.insert({1});
    m.relations[{"P", 2}] = p;
    m.relations[{"Q", 1}] = q;
    m.relations[{"R", 1}] = r;
    m.relations[{"S", 1}] = s;
    for (const auto& [lhs, rhs] : laws)
      CHECK(models(m, parse_pd(lhs)).holds == models(m, parse_pd(rhs)).holds);
  }
}

TEST_CASE("congruent formulas receive identical verdicts") {
  std::mt19937_64 rng(131);
  Structure m = two_element({{0, 1}, {1, 1}});
  m.constants["c"] = "b";
  m.relations[{"Q", 1}] = {{0}};
  for (int i = 0; i < 60; ++i) {
    PdFormula f = random_sentence(rng, 3);
    PdFormula renamed = pd::prenex(f);  // prenex renames apart, stays congruent-equivalent
    // a cheap congruent variant: rename every bound variable via prenex twice
    CHECK(models(m, pd::prenex(renamed)).holds == models(m, renamed).holds);
  }
  // and a direct pair from the congruence goldens
  PdFormula a = parse_pd("forall x (exists y P(x,y))");
  PdFormula b = parse_pd("forall z (exists w P(z,w))");
  REQUIRE(pd::congruent(a, b));
  CHECK(models(m, a).holds == models(m, b).holds);
}

TEST_CASE("validity golden: Exercise 3.4 #1") {
  PdFormula f = parse_pd(
      "(forall x (exists y P(x,y))) -> (exists y (forall x P(x,y)))");
  auto report = valid_over(f, 2);
  REQUIRE(report.n_valid.size() == 2);
  CHECK(report.n_valid[0] == std::optional<bool>(true));   // 1-valid
  CHECK(report.n_valid[1] == std::optional<bool>(false));  // not 2-valid
  REQUIRE(report.countermodel.has_value());
  // the answer key's countermodel: D = {a,b}, P' = {(a,a),(b,b)}
  CHECK(report.countermodel->domain == std::vector<std::string>{"a", "b"});
  std::set<std::vector<std::size_t>> want{{0, 0}, {1, 1}};
  CHECK(report.countermodel->relations.at({"P", 2}) == want);
}

TEST_CASE("validity golden: Example 3.4.1 is valid at every tested size") {
  auto report = valid_over(parse_pd("P(x) -> (exists x P(x))"), 3);
  for (const auto& verdict : report.n_valid)
    CHECK(verdict == std::optional<bool>(true));
  CHECK(!report.countermodel.has_value());
}

TEST_CASE("validity goldens: Exercise 3.4 #5") {
  // (a) invalid with D={a}, Q'=D, P'=empty
  auto a = valid_over(parse_pd("Q(x) -> (forall x P(x))"), 2);
  CHECK(a.n_valid[0] == std::optional<bool>(false));
  REQUIRE(a.countermodel.has_value());
  CHECK(a.countermodel->domain.size() == 1);
  CHECK(a.countermodel->relations.at({"P", 1}).empty());
  CHECK(a.countermodel->relations.at({"Q", 1}).size() == 1);
  // (b) invalid with D={a,b}, P'={a}
  auto b = valid_over(parse_pd("(exists x P(x)) -> P(x)"), 2);
  CHECK(b.n_valid[0] == std::optional<bool>(true));
  CHECK(b.n_valid[1] == std::optional<bool>(false));
  REQUIRE(b.countermodel.has_value());
  std::set<std::vector<std::size_t>> want_b{{0}};
  CHECK(b.countermodel->relations.at({"P", 1}) == want_b);
  // (c) valid
  auto c = valid_over(parse_pd("(forall x (P(x) & Q(x))) -> "
                               "((forall x P(x)) & (forall x Q(x)))"),
                      3);
  for (const auto& verdict : c.n_valid)
    CHECK(verdict == std::optional<bool>(true));
  // (d) invalid with D={a,b}, P'={(a,b)}
  auto d = valid_over(parse_pd("(exists x (exists y P(x,y))) -> "
                               "(exists x P(x,x))"),
                      2);
  CHECK(d.n_valid[1] == std::optional<bool>(false));
  REQUIRE(d.countermodel.has_value());
  std::set<std::vector<std::size_t>> want_d{{0, 1}};
  CHECK(d.countermodel->relations.at({"P", 2}) == want_d);
  // (e) invalid with D={a,b}, Q'={a}
  auto e = valid_over(parse_pd("(exists x Q(x)) -> (forall x Q(x))"), 2);
  CHECK(e.n_valid[1] == std::optional<bool>(false));
  REQUIRE(e.countermodel.has_value());
  std::set<std::vector<std::size_t>> want_e{{0}};
  CHECK(e.countermodel->relations.at({"Q", 1}) == want_e);
}

TEST_CASE("the Example 3.7.1 refutation: P(x) -> forall x P(x)") {
  auto report = valid_over(parse_pd("P(x) -> (forall x P(x))"), 2);
  CHECK(report.n_valid[0] == std::optional<bool>(true));
  CHECK(report.n_valid[1] == std::optional<bool>(false));
  REQUIRE(report.countermodel.has_value());
  CHECK(report.countermodel->domain == std::vector<std::string>{"a", "b"});
  std::set<std::vector<std::size_t>> want{{0}};
  CHECK(report.countermodel->relations.at({"P", 1}) == want);
}

TEST_CASE("interpretation caps mark sizes unknown") {
  auto report = valid_over(parse_pd("P(x,y) | (~P(x,y))"), 2, 8);
  CHECK(report.n_valid[0] == std::optional<bool>(true));   // 2^1 = 2 fits
  CHECK(report.n_valid[1] == std::nullopt);                // 2^4 = 16 > 8
}

TEST_CASE("consequence goldens: Exercise 3.5 #1") {
  // (a) valid up to the bound
  auto a = fol_consequence(
      {parse_pd("forall x (Q(x) -> R(x))"), parse_pd("exists x Q(x)")},
      parse_pd("exists x R(x)"), 3);
  CHECK(a.status == FolConsequenceStatus::NoCounterexampleUpToBound);
  // (b) valid up to the bound
  auto b = fol_consequence({parse_pd("forall x (Q(x) -> R(x))"),
                            parse_pd("exists x (Q(x) & Z(x))")},
                           parse_pd("exists x (R(x) & Z(x))"), 3);
  CHECK(b.status == FolConsequenceStatus::NoCounterexampleUpToBound);
  // (c) invalid with D={a}, P'=empty, Q'=R'=D
  auto c = fol_consequence({parse_pd("forall x (P(x) -> (~Q(x)))"),
                            parse_pd("exists x (Q(x) & R(x))")},
                           parse_pd("exists x (R(x) & (~Q(x)))"), 3);
  REQUIRE(c.status == FolConsequenceStatus::Invalid);
  REQUIRE(c.countermodel.has_value());
  CHECK(c.countermodel->domain.size() == 1);
  CHECK(c.countermodel->relations.at({"P", 1}).empty());
  CHECK(c.countermodel->relations.at({"Q", 1}).size() == 1);
  CHECK(c.countermodel->relations.at({"R", 1}).size() == 1);
  // (d) invalid with the same countermodel shape
  auto d = fol_consequence({parse_pd("forall x (P(x) -> Q(x))"),
                            parse_pd("exists x (Q(x) & R(x))")},
                           parse_pd("exists x (R(x) & (~Q(x)))"), 3);
  REQUIRE(d.status == FolConsequenceStatus::Invalid);
  CHECK(d.countermodel->domain.size() == 1);
}

TEST_CASE("consequence golden: Example 3.5.2") {
  auto r = fol_consequence({parse_pd("exists x (P(x) -> Q(x))"),
                            parse_pd("forall x (W(x) -> P(x))")},
                           parse_pd("exists x (W(x) -> (~Q(x)))"), 3);
  REQUIRE(r.status == FolConsequenceStatus::Invalid);
  REQUIRE(r.countermodel.has_value());
  const Structure& m = *r.countermodel;
  CHECK(m.domain.size() == 1);
  // P' = Q' = W' = D
  CHECK(m.relations.at({"P", 1}).size() == 1);
  CHECK(m.relations.at({"Q", 1}).size() == 1);
  CHECK(m.relations.at({"W", 1}).size() == 1);
}

TEST_CASE("consequence golden: Example 3.5.3, one direction only") {
  // exists-forall entails forall-exists, the converse fails
  auto fwd = fol_consequence({parse_pd("exists y (forall x P(x,y))")},
                             parse_pd("forall x (exists y P(x,y))"), 3);
  CHECK(fwd.status == FolConsequenceStatus::NoCounterexampleUpToBound);
  auto bwd = fol_consequence({parse_pd("forall x (exists y P(x,y))")},
                             parse_pd("exists y (forall x P(x,y))"), 3);
  CHECK(bwd.status == FolConsequenceStatus::Invalid);
}

TEST_CASE("satisfaction goldens: Examples 3.5.4 through 3.5.7") {
  // 3.5.4: the empty relations witness consistency
  auto a = fol_satisfiable({parse_pd("forall x (P(x) -> (~Q(x)))"),
                            parse_pd("forall x (W(x) -> P(x))")},
                           2);
  REQUIRE(a.status == FolSatStatus::Satisfiable);
  CHECK(a.model->relations.at({"P", 1}).empty());
  CHECK(a.model->relations.at({"W", 1}).empty());
  // 3.5.5: adding forall x (~P(x)) stays consistent
  auto b = fol_satisfiable({parse_pd("forall x (P(x) -> (~Q(x)))"),
                            parse_pd("forall x (W(x) -> P(x))"),
                            parse_pd("forall x (~P(x))")},
                           2);
  CHECK(b.status == FolSatStatus::Satisfiable);
  // 3.5.6: needs P' = W' = D and empty Q'
  auto c = fol_satisfiable({parse_pd("forall x (P(x) & (~Q(x)))"),
                            parse_pd("forall x (W(x) & P(x))")},
                           2);
  REQUIRE(c.status == FolSatStatus::Satisfiable);
  CHECK(c.model->domain.size() == 1);
  CHECK(c.model->relations.at({"P", 1}).size() == 1);
  CHECK(c.model->relations.at({"Q", 1}).empty());
  CHECK(c.model->relations.at({"W", 1}).size() == 1);
  // 3.5.7: provably inconsistent, so no model at any bound
  auto d = fol_satisfiable({parse_pd("exists x (~P(x))"),
                            parse_pd("forall x (Q(x) -> P(x))"),
                            parse_pd("forall x Q(x)")},
                           3);
  CHECK(d.status == FolSatStatus::NoModelUpToBound);
}

TEST_CASE("countermodels re-verify by direct evaluation") {
  auto r = fol_consequence({parse_pd("forall x (P(x) -> Q(x))"),
                            parse_pd("exists x (Q(x) & R(x))")},
                           parse_pd("exists x (R(x) & (~Q(x)))"), 3);
  REQUIRE(r.countermodel.has_value());
  CHECK(models(*r.countermodel, parse_pd("forall x (P(x) -> Q(x))")).holds);
  CHECK(models(*r.countermodel, parse_pd("exists x (Q(x) & R(x))")).holds);
  CHECK(!models(*r.countermodel, parse_pd("exists x (R(x) & (~Q(x)))")).holds);
}
