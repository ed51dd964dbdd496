#include "logickit/semantics.hpp"

#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace logickit::prop {

Assignment::Assignment(std::vector<std::string> atoms, std::vector<bool> values)
    : atoms_(std::move(atoms)), values_(std::move(values)) {
  if (atoms_.size() != values_.size())
    throw Error("assignment atom/value lengths differ");
  std::unordered_set<std::string> seen;
  for (const auto& a : atoms_)
    if (!seen.insert(a).second) throw DuplicateAtom(a);
}

bool Assignment::value(const std::string& atom) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == atom) return values_[i];
  throw UncoveredAtom(atom);
}

bool Assignment::covers(const std::string& atom) const {
  for (const auto& a : atoms_)
    if (a == atom) return true;
  return false;
}

std::string Assignment::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += ", ";
    out += atoms_[i] + "=" + (values_[i] ? "T" : "F");
  }
  return out + ")";
}

std::vector<Assignment> canonical_assignments(
    const std::vector<std::string>& atoms) {
  std::unordered_set<std::string> seen;
  for (const auto& a : atoms)
    if (!seen.insert(a).second) throw DuplicateAtom(a);
  std::size_t n = atoms.size();
  if (n > 24) throw CapExceeded("too many atoms to enumerate assignments");
  std::vector<Assignment> rows;
  rows.reserve(1u << n);
  for (std::uint64_t r = 0; r < (1ull << n); ++r) {
    std::vector<bool> values(n);
    for (std::size_t j = 0; j < n; ++j)
      values[j] = ((r >> (n - 1 - j)) & 1) == 0;
    rows.emplace_back(atoms, std::move(values));
  }
  return rows;
}

bool eval(Formula f, const Assignment& a) {
  // memoized over the shared-node DAG; keyed per call
  std::unordered_map<const detail::Node*, bool> memo;
  std::function<bool(Formula)> walk = [&](Formula g) -> bool {
    auto it = memo.find(g.raw());
    if (it != memo.end()) return it->second;
    bool v;
    switch (g.conn()) {
      case Conn::Atom: v = a.value(g.atom_name()); break;
      case Conn::Not: v = !walk(g.child()); break;
      case Conn::And: v = walk(g.left()) && walk(g.right()); break;
      case Conn::Or: v = walk(g.left()) || walk(g.right()); break;
      case Conn::Implies: v = !walk(g.left()) || walk(g.right()); break;
      case Conn::Iff: v = walk(g.left()) == walk(g.right()); break;
      default: throw Error("unreachable connective");
    }
    memo.emplace(g.raw(), v);
    return v;
  };
  return walk(f);
}

std::vector<std::string> atom_union(const std::vector<Formula>& fs) {
  std::vector<std::string> atoms;
  std::unordered_set<std::string> seen;
  for (const auto& f : fs)
    for (const auto& a : f.atoms())
      if (seen.insert(a).second) atoms.push_back(a);
  return atoms;
}

TruthTable truth_table(const std::vector<Formula>& fs) {
  TruthTable t;
  t.atoms = atom_union(fs);
  t.columns = fs;
  for (const auto& row : canonical_assignments(t.atoms)) {
    t.atom_rows.push_back(row.values());
    std::vector<bool> vals;
    vals.reserve(fs.size());
    for (const auto& f : fs) vals.push_back(eval(f, row));
    t.column_rows.push_back(std::move(vals));
  }
  return t;
}

std::string TruthTable::render() const {
  std::string out;
  bool first = true;
  for (const auto& a : atoms) {
    if (!first) out += " | ";
    out += a;
    first = false;
  }
  for (const auto& c : columns) {
    if (!first) out += " | ";
    out += print_atomic(c);
    first = false;
  }
  out += '\n';
  for (std::size_t r = 0; r < atom_rows.size(); ++r) {
    first = true;
    for (bool v : atom_rows[r]) {
      if (!first) out += " | ";
      out += v ? 'T' : 'F';
      first = false;
    }
    for (bool v : column_rows[r]) {
      if (!first) out += " | ";
      out += v ? 'T' : 'F';
      first = false;
    }
    out += '\n';
  }
  return out;
}

ClassifyResult classify(Formula f) {
  ClassifyResult result;
  result.kind = Classification::Valid;
  bool any_true = false, any_false = false;
  for (const auto& row : canonical_assignments(f.atoms())) {
    bool v = eval(f, row);
    if (v && !any_true) {
      any_true = true;
      result.true_witness = row;
    }
    if (!v && !any_false) {
      any_false = true;
      result.false_witness = row;
    }
    if (any_true && any_false) break;
  }
  if (any_true && any_false)
    result.kind = Classification::Contingent;
  else if (any_false)
    result.kind = Classification::Contradiction;
  return result;
}

bool equivalent(Formula a, Formula b) {
  return classify(Formula::iff(a, b)).kind == Classification::Valid;
}

}  // namespace logickit::prop
