#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "logickit/error.hpp"

namespace logickit::pd {

enum class TermKind : std::uint8_t { Var, Const };

// Variables are x, y, z, w with optional numeric subscripts; every other
// lowercase identifier is a constant.
struct Term {
  TermKind kind;
  std::string name;

  static Term var(std::string name) { return {TermKind::Var, std::move(name)}; }
  static Term constant(std::string name) {
    return {TermKind::Const, std::move(name)};
  }
  bool is_var() const { return kind == TermKind::Var; }
  bool operator==(const Term& o) const {
    return kind == o.kind && name == o.name;
  }
  bool operator!=(const Term& o) const { return !(*this == o); }
  bool operator<(const Term& o) const {
    if (kind != o.kind) return kind < o.kind;
    return name < o.name;
  }
};

bool is_variable_name(std::string_view name);

enum class PdConn : std::uint8_t {
  Pred, Not, And, Or, Implies, Iff, Forall, Exists
};

class PdFormula;

namespace detail {
struct PdNode {
  PdConn conn;
  const PdNode* left = nullptr;
  const PdNode* right = nullptr;
  std::string name;         // predicate name or quantifier variable
  std::vector<Term> args;   // predicates only
};
}  // namespace detail

// Immutable, interned predicate-logic formula.
class PdFormula {
 public:
  PdFormula() : node_(nullptr) {}

  static PdFormula pred(std::string_view name, std::vector<Term> args);
  static PdFormula negation(PdFormula f);
  static PdFormula conj(PdFormula l, PdFormula r);
  static PdFormula disj(PdFormula l, PdFormula r);
  static PdFormula implies(PdFormula l, PdFormula r);
  static PdFormula iff(PdFormula l, PdFormula r);
  static PdFormula forall(std::string_view var, PdFormula body);
  static PdFormula exists(std::string_view var, PdFormula body);
  static PdFormula make(PdConn c, PdFormula l, PdFormula r);

  bool valid() const { return node_ != nullptr; }
  PdConn conn() const { return node_->conn; }
  bool is_pred() const { return node_->conn == PdConn::Pred; }
  bool is_quantifier() const {
    return node_->conn == PdConn::Forall || node_->conn == PdConn::Exists;
  }
  const std::string& pred_name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }
  const std::string& quantifier_var() const { return node_->name; }
  PdFormula body() const { return PdFormula(node_->left); }
  PdFormula child() const { return PdFormula(node_->left); }
  PdFormula left() const { return PdFormula(node_->left); }
  PdFormula right() const { return PdFormula(node_->right); }

  bool operator==(const PdFormula& o) const { return node_ == o.node_; }
  bool operator!=(const PdFormula& o) const { return node_ != o.node_; }
  bool operator<(const PdFormula& o) const { return node_ < o.node_; }

  const detail::PdNode* raw() const { return node_; }

 private:
  explicit PdFormula(const detail::PdNode* n) : node_(n) {}
  const detail::PdNode* node_;
};

// Pd grammar: the propositional surface grammar extended with
//   pred := Name "(" term ("," term)* ")"
//   quant := ("forall" | "exists") var unary
// Quantifiers bind as tightly as negation; predicate arities must be
// consistent throughout the parsed formula.
PdFormula parse_pd(std::string_view text);

std::string print_pd(PdFormula f);
std::string print_pd_full(PdFormula f);

// No existential quantifier anywhere.
bool in_pd_prime(PdFormula f);

// (name, arity) pairs used in f; ArityMismatch when one name carries two
// arities.
std::map<std::string, std::size_t> predicate_arities(PdFormula f);

std::vector<std::string> constants_of(PdFormula f);

}  // namespace logickit::pd
