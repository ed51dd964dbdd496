#include "logickit/pd_syntax.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

namespace logickit::pd {

OccurrenceReport occurrences(PdFormula f) {
  OccurrenceReport report;
  std::size_t position = 0;
  // env: variable -> innermost binder index
  std::function<void(PdFormula, std::map<std::string, int>&)> walk =
      [&](PdFormula g, std::map<std::string, int>& env) {
        switch (g.conn()) {
          case PdConn::Pred:
            for (const auto& t : g.args()) {
              TermOccurrence occ;
              occ.name = t.name;
              occ.is_var = t.is_var();
              occ.position = position++;
              if (!t.is_var()) {
                occ.bound = true;  // constants are always bound occurrences
                occ.quantifier = 0;
              } else if (env.count(t.name)) {
                occ.bound = true;
                occ.quantifier = env.at(t.name);
                report.bound_variables.insert(t.name);
              } else {
                occ.bound = false;
                occ.quantifier = 0;
                report.free_variables.insert(t.name);
              }
              report.occurrences.push_back(std::move(occ));
            }
            return;
          case PdConn::Not:
            walk(g.child(), env);
            return;
          case PdConn::Forall:
          case PdConn::Exists: {
            int index = static_cast<int>(report.quantifiers.size()) + 1;
            report.quantifiers.push_back(QuantifierInfo{
                index, g.quantifier_var(), g.conn() == PdConn::Forall,
                print_pd_full(g.body())});
            // the quantifier's own variable position counts as bound
            report.occurrences.push_back(TermOccurrence{
                g.quantifier_var(), true, position++, true, index});
            report.bound_variables.insert(g.quantifier_var());
            std::map<std::string, int> inner = env;
            inner[g.quantifier_var()] = index;
            walk(g.body(), inner);
            return;
          }
          default:
            walk(g.left(), env);
            walk(g.right(), env);
        }
      };
  std::map<std::string, int> env;
  walk(f, env);
  return report;
}

std::set<std::string> free_variables(PdFormula f) {
  std::set<std::string> out;
  std::function<void(PdFormula, std::set<std::string>&)> walk =
      [&](PdFormula g, std::set<std::string>& bound) {
        switch (g.conn()) {
          case PdConn::Pred:
            for (const auto& t : g.args())
              if (t.is_var() && !bound.count(t.name)) out.insert(t.name);
            return;
          case PdConn::Not:
            walk(g.child(), bound);
            return;
          case PdConn::Forall:
          case PdConn::Exists: {
            bool fresh = bound.insert(g.quantifier_var()).second;
            walk(g.body(), bound);
            if (fresh) bound.erase(g.quantifier_var());
            return;
          }
          default:
            walk(g.left(), bound);
            walk(g.right(), bound);
        }
      };
  std::set<std::string> bound;
  walk(f, bound);
  return out;
}

bool is_sentence(PdFormula f) { return free_variables(f).empty(); }

namespace {

// Canonical form for congruence: bound occurrences become binder indices,
// free names stay.
std::string canonical(PdFormula f) {
  std::string out;
  int next_binder = 0;
  std::function<void(PdFormula, std::map<std::string, int>&)> walk =
      [&](PdFormula g, std::map<std::string, int>& env) {
        switch (g.conn()) {
          case PdConn::Pred:
            out += "P:" + g.pred_name() + "(";
            for (const auto& t : g.args()) {
              if (t.is_var() && env.count(t.name))
                out += "#" + std::to_string(env.at(t.name));
              else if (t.is_var())
                out += "v:" + t.name;
              else
                out += "c:" + t.name;
              out += ",";
            }
            out += ")";
            return;
          case PdConn::Not:
            out += "~(";
            walk(g.child(), env);
            out += ")";
            return;
          case PdConn::Forall:
          case PdConn::Exists: {
            out += g.conn() == PdConn::Forall ? "A(" : "E(";
            std::map<std::string, int> inner = env;
            inner[g.quantifier_var()] = ++next_binder;
            walk(g.body(), inner);
            out += ")";
            return;
          }
          default: {
            const char* tag =
                g.conn() == PdConn::And ? "&" :
                g.conn() == PdConn::Or ? "|" :
                g.conn() == PdConn::Implies ? ">" : "=";
            out += tag;
            out += "(";
            walk(g.left(), env);
            out += ",";
            walk(g.right(), env);
            out += ")";
          }
        }
      };
  std::map<std::string, int> env;
  walk(f, env);
  return out;
}

}  // namespace

bool congruent(PdFormula a, PdFormula b) { return canonical(a) == canonical(b); }

PdFormula subst_free(PdFormula f, const std::string& x, const Term& lam) {
  std::function<PdFormula(PdFormula)> walk = [&](PdFormula g) -> PdFormula {
    switch (g.conn()) {
      case PdConn::Pred: {
        std::vector<Term> args = g.args();
        bool hit = false;
        for (auto& t : args)
          if (t.is_var() && t.name == x) {
            t = lam;
            hit = true;
          }
        return hit ? PdFormula::pred(g.pred_name(), std::move(args)) : g;
      }
      case PdConn::Not:
        return PdFormula::negation(walk(g.child()));
      case PdConn::Forall:
      case PdConn::Exists: {
        if (g.quantifier_var() == x) return g;  // x is rebound inside
        PdFormula body = walk(g.body());
        return g.conn() == PdConn::Forall
                   ? PdFormula::forall(g.quantifier_var(), body)
                   : PdFormula::exists(g.quantifier_var(), body);
      }
      default:
        return PdFormula::make(g.conn(), walk(g.left()), walk(g.right()));
    }
  };
  return walk(f);
}

namespace {

// positions (over the term-slot walk of `occurrences`) where `name` occurs
// free
std::set<std::size_t> free_positions(PdFormula f, const std::string& name) {
  std::set<std::size_t> out;
  for (const auto& occ : occurrences(f).occurrences)
    if (occ.is_var && occ.name == name && !occ.bound) out.insert(occ.position);
  return out;
}

}  // namespace

bool free_for(PdFormula f, const std::string& x, const std::string& v) {
  auto former = free_positions(f, x);
  if (former.empty()) return true;  // nothing to capture
  PdFormula sub = subst_free(f, x, Term::var(v));
  auto now = free_positions(sub, v);
  for (auto pos : former)
    if (!now.count(pos)) return false;
  return true;
}

namespace {

// base letter rank w < x < y < z, then numeric subscript ascending
bool variable_order(const std::string& a, const std::string& b) {
  auto rank = [](char c) {
    switch (c) {
      case 'w': return 0;
      case 'x': return 1;
      case 'y': return 2;
      default: return 3;
    }
  };
  if (rank(a[0]) != rank(b[0])) return rank(a[0]) < rank(b[0]);
  long sa = a.size() > 1 ? std::stol(a.substr(1)) : -1;
  long sb = b.size() > 1 ? std::stol(b.substr(1)) : -1;
  return sa < sb;
}

}  // namespace

PdFormula universal_closure(PdFormula f) {
  auto free = free_variables(f);
  std::vector<std::string> ordered(free.begin(), free.end());
  std::sort(ordered.begin(), ordered.end(), variable_order);
  PdFormula out = f;
  for (std::size_t i = ordered.size(); i-- > 0;)
    out = PdFormula::forall(ordered[i], out);
  return out;
}

// ---------------------------------------------------------------------------
// Prenex normal form

namespace {

void collect_variable_names(PdFormula f, std::set<std::string>& names) {
  switch (f.conn()) {
    case PdConn::Pred:
      for (const auto& t : f.args())
        if (t.is_var()) names.insert(t.name);
      return;
    case PdConn::Not:
      collect_variable_names(f.child(), names);
      return;
    case PdConn::Forall:
    case PdConn::Exists:
      names.insert(f.quantifier_var());
      collect_variable_names(f.body(), names);
      return;
    default:
      collect_variable_names(f.left(), names);
      collect_variable_names(f.right(), names);
  }
}

struct Renamer {
  std::set<std::string> used;

  std::string fresh() {
    if (!used.count("z")) {
      used.insert("z");
      return "z";
    }
    for (int k = 1;; ++k) {
      std::string name = "z" + std::to_string(k);
      if (!used.count(name)) {
        used.insert(name);
        return name;
      }
    }
  }

  // Renames quantifier variables apart: a binder keeps its name unless the
  // name was already claimed (by a free variable or an earlier binder).
  PdFormula rectify(PdFormula f, std::map<std::string, std::string>& env) {
    switch (f.conn()) {
      case PdConn::Pred: {
        std::vector<Term> args = f.args();
        bool hit = false;
        for (auto& t : args)
          if (t.is_var() && env.count(t.name)) {
            t = Term::var(env.at(t.name));
            hit = true;
          }
        return hit ? PdFormula::pred(f.pred_name(), std::move(args)) : f;
      }
      case PdConn::Not:
        return PdFormula::negation(rectify(f.child(), env));
      case PdConn::Forall:
      case PdConn::Exists: {
        std::string var = f.quantifier_var();
        std::string chosen;
        if (!claimed.count(var)) {
          chosen = var;
          claimed.insert(var);
          used.insert(var);
        } else {
          chosen = fresh();
          claimed.insert(chosen);
        }
        std::map<std::string, std::string> inner = env;
        if (chosen != var)
          inner[var] = chosen;
        else
          inner.erase(var);
        PdFormula body = rectify(f.body(), inner);
        return f.conn() == PdConn::Forall ? PdFormula::forall(chosen, body)
                                          : PdFormula::exists(chosen, body);
      }
      default: {
        // claims must propagate left to right; sequence the recursion
        PdFormula l = rectify(f.left(), env);
        PdFormula r = rectify(f.right(), env);
        return PdFormula::make(f.conn(), l, r);
      }
    }
  }

  std::set<std::string> claimed;  // names no future binder may reuse
};

struct PrefixEntry {
  bool universal;
  std::string var;
};

struct Pulled {
  std::vector<PrefixEntry> prefix;
  PdFormula matrix;
};

std::vector<PrefixEntry> flip(std::vector<PrefixEntry> prefix) {
  for (auto& e : prefix) e.universal = !e.universal;
  return prefix;
}

bool has_quantifier(PdFormula f) {
  switch (f.conn()) {
    case PdConn::Pred:
      return false;
    case PdConn::Forall:
    case PdConn::Exists:
      return true;
    case PdConn::Not:
      return has_quantifier(f.child());
    default:
      return has_quantifier(f.left()) || has_quantifier(f.right());
  }
}

Pulled pull(PdFormula f) {
  switch (f.conn()) {
    case PdConn::Pred:
      return {{}, f};
    case PdConn::Forall:
    case PdConn::Exists: {
      Pulled inner = pull(f.body());
      std::vector<PrefixEntry> prefix{
          PrefixEntry{f.conn() == PdConn::Forall, f.quantifier_var()}};
      prefix.insert(prefix.end(), inner.prefix.begin(), inner.prefix.end());
      return {std::move(prefix), inner.matrix};
    }
    case PdConn::Not: {
      Pulled inner = pull(f.child());
      return {flip(std::move(inner.prefix)),
              PdFormula::negation(inner.matrix)};
    }
    case PdConn::And:
    case PdConn::Or: {
      Pulled l = pull(f.left());
      Pulled r = pull(f.right());
      std::vector<PrefixEntry> prefix = std::move(l.prefix);
      prefix.insert(prefix.end(), r.prefix.begin(), r.prefix.end());
      return {std::move(prefix),
              PdFormula::make(f.conn(), l.matrix, r.matrix)};
    }
    case PdConn::Implies: {
      Pulled l = pull(f.left());
      Pulled r = pull(f.right());
      if (l.prefix.empty()) {
        return {std::move(r.prefix),
                PdFormula::implies(l.matrix, r.matrix)};
      }
      // a quantified antecedent: consequent quantifiers first, then the
      // antecedent's (flipped) over the disjunctive reading B v (~A)
      std::vector<PrefixEntry> prefix = std::move(r.prefix);
      auto flipped = flip(std::move(l.prefix));
      prefix.insert(prefix.end(), flipped.begin(), flipped.end());
      return {std::move(prefix),
              PdFormula::disj(r.matrix, PdFormula::negation(l.matrix))};
    }
    case PdConn::Iff: {
      if (!has_quantifier(f)) return {{}, f};
      PdFormula expanded =
          PdFormula::conj(PdFormula::implies(f.left(), f.right()),
                          PdFormula::implies(f.right(), f.left()));
      return pull(expanded);
    }
  }
  throw Error("unreachable connective");
}

}  // namespace

PdFormula prenex(PdFormula f) {
  Renamer renamer;
  collect_variable_names(f, renamer.used);
  for (const auto& v : free_variables(f)) renamer.claimed.insert(v);
  std::map<std::string, std::string> env;
  PdFormula rectified = renamer.rectify(f, env);
  Pulled pulled = pull(rectified);
  PdFormula out = pulled.matrix;
  for (std::size_t i = pulled.prefix.size(); i-- > 0;)
    out = pulled.prefix[i].universal
              ? PdFormula::forall(pulled.prefix[i].var, out)
              : PdFormula::exists(pulled.prefix[i].var, out);
  return out;
}

}  // namespace logickit::pd
