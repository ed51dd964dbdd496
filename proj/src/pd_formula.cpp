#include "logickit/pd_formula.hpp"

#include <cctype>
#include <deque>
#include <functional>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace logickit::pd {

bool is_variable_name(std::string_view name) {
  if (name.empty()) return false;
  char c = name[0];
  if (c != 'x' && c != 'y' && c != 'z' && c != 'w') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

namespace {

struct Key {
  PdConn conn;
  const detail::PdNode* l;
  const detail::PdNode* r;
  std::string name;
  std::vector<Term> args;
  bool operator==(const Key& o) const {
    return conn == o.conn && l == o.l && r == o.r && name == o.name &&
           args == o.args;
  }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = std::hash<int>()(static_cast<int>(k.conn));
    h = h * 1000003u ^ std::hash<const void*>()(k.l);
    h = h * 1000003u ^ std::hash<const void*>()(k.r);
    h = h * 1000003u ^ std::hash<std::string>()(k.name);
    for (const auto& t : k.args) {
      h = h * 1000003u ^ std::hash<std::string>()(t.name);
      h = h * 2u + (t.kind == TermKind::Var);
    }
    return h;
  }
};

class PdArena {
 public:
  static PdArena& instance() {
    static PdArena a;
    return a;
  }

  const detail::PdNode* intern(PdConn c, const detail::PdNode* l,
                               const detail::PdNode* r, std::string name,
                               std::vector<Term> args) {
    Key k{c, l, r, name, args};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(k);
    if (it != map_.end()) return it->second;
    nodes_.push_back(detail::PdNode{c, l, r, std::move(name), std::move(args)});
    const detail::PdNode* p = &nodes_.back();
    map_.emplace(std::move(k), p);
    return p;
  }

 private:
  std::mutex mu_;
  std::deque<detail::PdNode> nodes_;
  std::unordered_map<Key, const detail::PdNode*, KeyHash> map_;
};

}  // namespace

PdFormula PdFormula::pred(std::string_view name, std::vector<Term> args) {
  return PdFormula(PdArena::instance().intern(PdConn::Pred, nullptr, nullptr,
                                              std::string(name),
                                              std::move(args)));
}

PdFormula PdFormula::negation(PdFormula f) {
  return PdFormula(
      PdArena::instance().intern(PdConn::Not, f.node_, nullptr, "", {}));
}

PdFormula PdFormula::make(PdConn c, PdFormula l, PdFormula r) {
  return PdFormula(PdArena::instance().intern(c, l.node_, r.node_, "", {}));
}

PdFormula PdFormula::conj(PdFormula l, PdFormula r) {
  return make(PdConn::And, l, r);
}
PdFormula PdFormula::disj(PdFormula l, PdFormula r) {
  return make(PdConn::Or, l, r);
}
PdFormula PdFormula::implies(PdFormula l, PdFormula r) {
  return make(PdConn::Implies, l, r);
}
PdFormula PdFormula::iff(PdFormula l, PdFormula r) {
  return make(PdConn::Iff, l, r);
}

PdFormula PdFormula::forall(std::string_view var, PdFormula body) {
  return PdFormula(PdArena::instance().intern(PdConn::Forall, body.node_,
                                              nullptr, std::string(var), {}));
}

PdFormula PdFormula::exists(std::string_view var, PdFormula body) {
  return PdFormula(PdArena::instance().intern(PdConn::Exists, body.node_,
                                              nullptr, std::string(var), {}));
}

bool in_pd_prime(PdFormula f) {
  switch (f.conn()) {
    case PdConn::Pred:
      return true;
    case PdConn::Exists:
      return false;
    case PdConn::Not:
    case PdConn::Forall:
      return in_pd_prime(f.child());
    default:
      return in_pd_prime(f.left()) && in_pd_prime(f.right());
  }
}

std::map<std::string, std::size_t> predicate_arities(PdFormula f) {
  std::map<std::string, std::size_t> out;
  std::function<void(PdFormula)> walk = [&](PdFormula g) {
    switch (g.conn()) {
      case PdConn::Pred: {
        auto [it, inserted] = out.emplace(g.pred_name(), g.args().size());
        if (!inserted && it->second != g.args().size())
          throw ArityMismatch("predicate " + g.pred_name() + " used at " +
                              std::to_string(it->second) + " and " +
                              std::to_string(g.args().size()) + " places");
        break;
      }
      case PdConn::Not:
      case PdConn::Forall:
      case PdConn::Exists:
        walk(g.child());
        break;
      default:
        walk(g.left());
        walk(g.right());
    }
  };
  walk(f);
  return out;
}

std::vector<std::string> constants_of(PdFormula f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  std::function<void(PdFormula)> walk = [&](PdFormula g) {
    switch (g.conn()) {
      case PdConn::Pred:
        for (const auto& t : g.args())
          if (!t.is_var() && seen.insert(t.name).second) out.push_back(t.name);
        break;
      case PdConn::Not:
      case PdConn::Forall:
      case PdConn::Exists:
        walk(g.child());
        break;
      default:
        walk(g.left());
        walk(g.right());
    }
  };
  walk(f);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct PdLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool starts_with(std::string_view s) const {
    return text.substr(pos, s.size()) == s;
  }

  std::string peek() {
    skip_ws();
    if (pos >= text.size()) return "";
    for (std::string_view s : {"<->", "->", "~", "&", "|", "(", ")", ","})
      if (starts_with(s)) return std::string(s);
    struct Alias { std::string_view utf8; const char* ascii; };
    static constexpr Alias aliases[] = {
        {"¬", "~"}, {"∧", "&"}, {"∨", "|"},
        {"→", "->"}, {"↔", "<->"},
        {"∀", "forall"}, {"∃", "exists"},
    };
    for (const auto& a : aliases)
      if (starts_with(a.utf8)) return a.ascii;
    char c = text[pos];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos + 1;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) ||
              text[end] == '_'))
        ++end;
      return std::string(text.substr(pos, end - pos));
    }
    return std::string(1, c);
  }

  void consume(const std::string& tok) {
    skip_ws();
    struct Alias { std::string_view utf8; const char* ascii; };
    static constexpr Alias aliases[] = {
        {"¬", "~"}, {"∧", "&"}, {"∨", "|"},
        {"→", "->"}, {"↔", "<->"},
        {"∀", "forall"}, {"∃", "exists"},
    };
    for (const auto& a : aliases) {
      if (tok == a.ascii && starts_with(a.utf8)) {
        pos += a.utf8.size();
        return;
      }
    }
    pos += tok.size();
  }
};

class PdParser {
 public:
  explicit PdParser(std::string_view text) : lex_{text} {}

  PdFormula run() {
    PdFormula f = formula();
    lex_.skip_ws();
    if (lex_.pos != lex_.text.size())
      throw ParseError(lex_.pos, "unexpected trailing input");
    // arity consistency across the whole formula
    predicate_arities(f);
    return f;
  }

 private:
  PdLexer lex_;

  PdFormula formula() {
    PdFormula f = imp();
    while (lex_.peek() == "<->") {
      lex_.consume("<->");
      f = PdFormula::iff(f, imp());
    }
    return f;
  }

  PdFormula imp() {
    PdFormula f = disj();
    if (lex_.peek() == "->") {
      lex_.consume("->");
      return PdFormula::implies(f, imp());
    }
    return f;
  }

  PdFormula disj() {
    PdFormula f = conj();
    while (lex_.peek() == "|") {
      lex_.consume("|");
      f = PdFormula::disj(f, conj());
    }
    return f;
  }

  PdFormula conj() {
    PdFormula f = unary();
    while (lex_.peek() == "&") {
      lex_.consume("&");
      f = PdFormula::conj(f, unary());
    }
    return f;
  }

  Term term() {
    std::string t = lex_.peek();
    if (t.empty() || !std::islower(static_cast<unsigned char>(t[0])))
      throw ParseError(lex_.pos, "expected a term");
    lex_.consume(t);
    return is_variable_name(t) ? Term::var(t) : Term::constant(t);
  }

  PdFormula unary() {
    std::string t = lex_.peek();
    if (t.empty()) throw ParseError(lex_.pos, "unexpected end of input");
    if (t == "~") {
      lex_.consume(t);
      return PdFormula::negation(unary());
    }
    if (t == "forall" || t == "exists") {
      lex_.consume(t);
      std::string v = lex_.peek();
      if (v.empty() || !std::islower(static_cast<unsigned char>(v[0])))
        throw ParseError(lex_.pos, "expected a quantifier variable");
      if (!is_variable_name(v)) throw QuantifierOverConstant(v);
      lex_.consume(v);
      PdFormula body = unary();
      return t == "forall" ? PdFormula::forall(v, body)
                           : PdFormula::exists(v, body);
    }
    if (t == "(") {
      lex_.consume(t);
      PdFormula f = formula();
      if (lex_.peek() != ")") throw ParseError(lex_.pos, "expected ')'");
      lex_.consume(")");
      return f;
    }
    if (std::isupper(static_cast<unsigned char>(t[0]))) {
      lex_.consume(t);
      if (lex_.peek() != "(")
        throw ParseError(lex_.pos, "predicate " + t + " needs an argument list");
      lex_.consume("(");
      std::vector<Term> args{term()};
      while (lex_.peek() == ",") {
        lex_.consume(",");
        args.push_back(term());
      }
      if (lex_.peek() != ")") throw ParseError(lex_.pos, "expected ')'");
      lex_.consume(")");
      return PdFormula::pred(t, std::move(args));
    }
    throw ParseError(lex_.pos, "expected formula, found '" + t + "'");
  }
};

const char* conn_text(PdConn c) {
  switch (c) {
    case PdConn::And: return " & ";
    case PdConn::Or: return " | ";
    case PdConn::Implies: return " -> ";
    case PdConn::Iff: return " <-> ";
    default: return "";
  }
}

void print_rec(PdFormula f, std::string& out) {
  switch (f.conn()) {
    case PdConn::Pred: {
      out += f.pred_name();
      out += '(';
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ',';
        out += f.args()[i].name;
      }
      out += ')';
      return;
    }
    case PdConn::Not:
      out += "(~";
      print_rec(f.child(), out);
      out += ')';
      return;
    case PdConn::Forall:
    case PdConn::Exists:
      out += '(';
      out += f.conn() == PdConn::Forall ? "forall " : "exists ";
      out += f.quantifier_var();
      out += ' ';
      print_rec(f.body(), out);
      out += ')';
      return;
    default:
      out += '(';
      print_rec(f.left(), out);
      out += conn_text(f.conn());
      print_rec(f.right(), out);
      out += ')';
  }
}

}  // namespace

PdFormula parse_pd(std::string_view text) { return PdParser(text).run(); }

std::string print_pd_full(PdFormula f) {
  std::string out;
  print_rec(f, out);
  return out;
}

std::string print_pd(PdFormula f) {
  std::string full = print_pd_full(f);
  if (f.is_pred()) return full;
  return full.substr(1, full.size() - 2);
}

}  // namespace logickit::pd
