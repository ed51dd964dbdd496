#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "logickit/error.hpp"

namespace logickit::prop {

enum class Conn : std::uint8_t { Atom, Not, And, Or, Implies, Iff };

class Formula;

namespace detail {
struct Node {
  Conn conn;
  const Node* left = nullptr;   // unary child lives here
  const Node* right = nullptr;
  std::string name;             // atoms only
};
}  // namespace detail

// Immutable, interned propositional formula. Two structurally equal formulas
// always share the same node, so equality is a pointer comparison.
class Formula {
 public:
  Formula() : node_(nullptr) {}

  static Formula atom(std::string_view name);
  static Formula negation(Formula child);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula iff(Formula l, Formula r);
  static Formula make(Conn c, Formula l, Formula r);

  bool valid() const { return node_ != nullptr; }
  Conn conn() const { return node_->conn; }
  bool is_atom() const { return node_->conn == Conn::Atom; }
  const std::string& atom_name() const { return node_->name; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }
  Formula child() const { return Formula(node_->left); }

  bool operator==(const Formula& o) const { return node_ == o.node_; }
  bool operator!=(const Formula& o) const { return node_ != o.node_; }
  bool operator<(const Formula& o) const { return node_ < o.node_; }

  const detail::Node* raw() const { return node_; }

  // Distinct atoms in left-to-right first-occurrence order.
  std::vector<std::string> atoms() const;

  std::size_t node_count() const;

 private:
  explicit Formula(const detail::Node* n) : node_(n) {}
  const detail::Node* node_;
  friend struct FormulaHash;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const {
    return std::hash<const void*>()(f.raw());
  }
};

// Surface grammar (whitespace insignificant):
//   formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" imp)? ;
//   or := and ("|" and)* ; and := unary ("&" unary)* ;
//   unary := "~" unary | "(" formula ")" | atom ; atom := [A-Z][A-Za-z0-9_]*
// Unicode spellings are accepted as aliases for the ASCII connectives.
Formula parse(std::string_view text);

// The paper's atomic form with the outermost parenthesis pair removed.
std::string print_atomic(Formula f);

// Atomic form with the outermost pair restored; input for the common pair rule.
std::string print_atomic_full(Formula f);

// Flat display: chains of the same associative connective (& or |) are
// printed without internal parentheses.
std::string print_flat(Formula f);

}  // namespace logickit::prop
