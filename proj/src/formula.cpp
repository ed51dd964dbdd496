#include "logickit/formula.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace logickit::prop {

namespace {

struct Key {
  Conn conn;
  const detail::Node* l;
  const detail::Node* r;
  std::string name;
  bool operator==(const Key& o) const {
    return conn == o.conn && l == o.l && r == o.r && name == o.name;
  }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = std::hash<int>()(static_cast<int>(k.conn));
    h = h * 1000003u ^ std::hash<const void*>()(k.l);
    h = h * 1000003u ^ std::hash<const void*>()(k.r);
    h = h * 1000003u ^ std::hash<std::string>()(k.name);
    return h;
  }
};

// Process-wide intern table. Nodes live forever; deque keeps them in place.
class Arena {
 public:
  static Arena& instance() {
    static Arena a;
    return a;
  }

  const detail::Node* intern(Conn c, const detail::Node* l,
                             const detail::Node* r, std::string name) {
    Key k{c, l, r, name};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(k);
    if (it != map_.end()) return it->second;
    nodes_.push_back(detail::Node{c, l, r, std::move(name)});
    const detail::Node* p = &nodes_.back();
    map_.emplace(std::move(k), p);
    return p;
  }

 private:
  std::mutex mu_;
  std::deque<detail::Node> nodes_;
  std::unordered_map<Key, const detail::Node*, KeyHash> map_;
};

}  // namespace

Formula Formula::atom(std::string_view name) {
  return Formula(Arena::instance().intern(Conn::Atom, nullptr, nullptr,
                                          std::string(name)));
}

Formula Formula::negation(Formula c) {
  return Formula(Arena::instance().intern(Conn::Not, c.node_, nullptr, ""));
}

Formula Formula::make(Conn c, Formula l, Formula r) {
  if (c == Conn::Atom) throw Error("make: atom requires a name");
  if (c == Conn::Not) return negation(l);
  return Formula(Arena::instance().intern(c, l.node_, r.node_, ""));
}

Formula Formula::conj(Formula l, Formula r) { return make(Conn::And, l, r); }
Formula Formula::disj(Formula l, Formula r) { return make(Conn::Or, l, r); }
Formula Formula::implies(Formula l, Formula r) {
  return make(Conn::Implies, l, r);
}
Formula Formula::iff(Formula l, Formula r) { return make(Conn::Iff, l, r); }

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  std::function<void(const detail::Node*)> walk = [&](const detail::Node* n) {
    if (!n) return;
    if (n->conn == Conn::Atom) {
      if (seen.insert(n->name).second) out.push_back(n->name);
      return;
    }
    walk(n->left);
    walk(n->right);
  };
  walk(node_);
  return out;
}

std::size_t Formula::node_count() const {
  std::size_t count = 0;
  std::unordered_set<const detail::Node*> seen;
  std::function<void(const detail::Node*)> walk = [&](const detail::Node* n) {
    if (!n || !seen.insert(n).second) return;
    ++count;
    walk(n->left);
    walk(n->right);
  };
  walk(node_);
  return count;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Lexer {
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

  // Returns the token at the cursor without consuming it. Unicode connective
  // spellings are folded onto their ASCII aliases.
  std::string peek_token() {
    skip_ws();
    if (pos >= text.size()) return "";
    for (std::string_view s : {"<->", "->", "~", "&", "|", "(", ")"})
      if (starts_with(s)) return std::string(s);
    struct Alias { std::string_view utf8; const char* ascii; };
    static constexpr Alias aliases[] = {
        {"¬", "~"}, {"∧", "&"}, {"∨", "|"},
        {"→", "->"}, {"↔", "<->"},
    };
    for (const auto& a : aliases)
      if (starts_with(a.utf8)) return a.ascii;
    char c = text[pos];
    if (std::isupper(static_cast<unsigned char>(c))) {
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
    for (std::string_view s : {"<->", "->", "~", "&", "|", "(", ")"}) {
      if (tok == s && starts_with(s)) {
        pos += s.size();
        return;
      }
    }
    struct Alias { std::string_view utf8; const char* ascii; };
    static constexpr Alias aliases[] = {
        {"¬", "~"}, {"∧", "&"}, {"∨", "|"},
        {"→", "->"}, {"↔", "<->"},
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

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_{text} {}

  Formula run() {
    Formula f = formula();
    lex_.skip_ws();
    if (lex_.pos != lex_.text.size())
      throw ParseError(lex_.pos, "unexpected trailing input");
    return f;
  }

 private:
  Lexer lex_;

  Formula formula() {
    Formula f = imp();
    while (true) {
      std::string t = lex_.peek_token();
      if (t != "<->") break;
      lex_.consume(t);
      f = Formula::iff(f, imp());
    }
    return f;
  }

  Formula imp() {
    Formula f = disj();
    std::string t = lex_.peek_token();
    if (t == "->") {
      lex_.consume(t);
      return Formula::implies(f, imp());  // right-associative
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (true) {
      std::string t = lex_.peek_token();
      if (t != "|") break;
      lex_.consume(t);
      f = Formula::disj(f, conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (true) {
      std::string t = lex_.peek_token();
      if (t != "&") break;
      lex_.consume(t);
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    std::string t = lex_.peek_token();
    if (t.empty()) throw ParseError(lex_.pos, "unexpected end of input");
    if (t == "~") {
      lex_.consume(t);
      return Formula::negation(unary());
    }
    if (t == "(") {
      lex_.consume(t);
      Formula f = formula();
      std::string close = lex_.peek_token();
      if (close != ")") throw ParseError(lex_.pos, "expected ')'");
      lex_.consume(close);
      return f;
    }
    if (std::isupper(static_cast<unsigned char>(t[0]))) {
      lex_.consume(t);
      return Formula::atom(t);
    }
    throw ParseError(lex_.pos, "expected formula, found '" + t + "'");
  }
};

const char* conn_text(Conn c) {
  switch (c) {
    case Conn::And: return " & ";
    case Conn::Or: return " | ";
    case Conn::Implies: return " -> ";
    case Conn::Iff: return " <-> ";
    default: return "";
  }
}

void print_paren(Formula f, std::string& out) {
  if (f.is_atom()) {
    out += f.atom_name();
    return;
  }
  out += '(';
  if (f.conn() == Conn::Not) {
    out += '~';
    print_paren(f.child(), out);
  } else {
    print_paren(f.left(), out);
    out += conn_text(f.conn());
    print_paren(f.right(), out);
  }
  out += ')';
}

void print_flat_rec(Formula f, std::string& out, Conn parent) {
  if (f.is_atom()) {
    out += f.atom_name();
    return;
  }
  Conn c = f.conn();
  bool chained = (c == parent) && (c == Conn::And || c == Conn::Or);
  if (!chained) out += '(';
  if (c == Conn::Not) {
    out += '~';
    print_flat_rec(f.child(), out, Conn::Not);
  } else {
    print_flat_rec(f.left(), out, c);
    out += conn_text(c);
    print_flat_rec(f.right(), out, c);
  }
  if (!chained) out += ')';
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

std::string print_atomic_full(Formula f) {
  std::string out;
  print_paren(f, out);
  return out;
}

std::string print_atomic(Formula f) {
  if (f.is_atom()) return f.atom_name();
  std::string full = print_atomic_full(f);
  return full.substr(1, full.size() - 2);
}

std::string print_flat(Formula f) {
  std::string out;
  print_flat_rec(f, out, Conn::Atom);
  if (!f.is_atom() && out.size() >= 2 && out.front() == '(' && out.back() == ')') {
    // drop the outermost pair only if it wraps the entire formula
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i] == '(') ++depth;
      if (out[i] == ')') --depth;
      if (depth == 0) { wraps = false; break; }
    }
    if (wraps) return out.substr(1, out.size() - 2);
  }
  return out;
}

}  // namespace logickit::prop
