#include "logickit/syntax.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace logickit::prop {

namespace {

std::size_t structural_size(Formula f,
                            std::unordered_map<const detail::Node*, std::size_t>& memo) {
  if (f.is_atom()) return 0;
  auto it = memo.find(f.raw());
  if (it != memo.end()) return it->second;
  std::size_t s;
  if (f.conn() == Conn::Not) {
    s = 1 + structural_size(f.child(), memo);
  } else {
    s = 1 + std::max(structural_size(f.left(), memo),
                     structural_size(f.right(), memo));
  }
  memo.emplace(f.raw(), s);
  return s;
}

std::size_t cpr_size(std::string_view text) {
  long depth = 0;
  long max_depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      ++depth;
      max_depth = std::max(max_depth, depth);
    } else if (text[i] == ')') {
      --depth;
      if (depth < 0) throw UnbalancedParentheses(i);
    }
  }
  if (depth != 0) throw UnbalancedParentheses(text.size());
  return static_cast<std::size_t>(max_depth);
}

}  // namespace

std::size_t size_of(Formula f) {
  std::unordered_map<const detail::Node*, std::size_t> memo;
  std::size_t s = structural_size(f, memo);
  std::size_t c = cpr_size(print_atomic_full(f));
  if (s != c)
    throw Error("size disagreement between structure and common pair rule");
  return s;
}

std::vector<SpanPair> common_pairs(std::string_view text) {
  std::vector<SpanPair> pairs;
  std::vector<std::size_t> open_stack;
  std::vector<std::pair<std::size_t, std::size_t>> found;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      open_stack.push_back(i);
    } else if (text[i] == ')') {
      if (open_stack.empty()) throw UnbalancedParentheses(i);
      found.emplace_back(open_stack.back(), i);
      open_stack.pop_back();
    }
  }
  if (!open_stack.empty()) throw UnbalancedParentheses(open_stack.back());
  std::sort(found.begin(), found.end());
  pairs.reserve(found.size());
  for (auto& [o, c] : found) pairs.push_back(SpanPair{o, c});
  return pairs;
}

std::vector<Formula> subformulas(Formula f) {
  std::vector<Formula> out;
  if (f.is_atom()) return {f};
  std::function<void(Formula)> walk = [&](Formula g) {
    if (g.is_atom()) return;
    out.push_back(g);
    if (g.conn() == Conn::Not) {
      walk(g.child());
    } else {
      walk(g.left());
      walk(g.right());
    }
  };
  walk(f);
  return out;
}

Formula substitute_atoms(Formula f, const AtomSubstitution& s) {
  std::unordered_map<const detail::Node*, Formula> memo;
  std::function<Formula(Formula)> walk = [&](Formula g) -> Formula {
    auto it = memo.find(g.raw());
    if (it != memo.end()) return it->second;
    Formula result;
    if (g.is_atom()) {
      auto image = s.find(g.atom_name());
      if (image == s.end()) throw MissingImage(g.atom_name());
      result = image->second;
    } else if (g.conn() == Conn::Not) {
      result = Formula::negation(walk(g.child()));
    } else {
      result = Formula::make(g.conn(), walk(g.left()), walk(g.right()));
    }
    memo.emplace(g.raw(), result);
    return result;
  };
  return walk(f);
}

Formula subformula_at(Formula c, const Position& pos) {
  Formula cur = c;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (cur.is_atom()) throw BadPosition("descends through an atom");
    if (pos[i] == 0) {
      cur = cur.conn() == Conn::Not ? cur.child() : cur.left();
    } else if (pos[i] == 1) {
      if (cur.conn() == Conn::Not) throw BadPosition("negation has one child");
      cur = cur.right();
    } else {
      throw BadPosition("child index must be 0 or 1");
    }
  }
  return cur;
}

Formula substitute_subformula(Formula c, const Position& pos, Formula b) {
  if (pos.empty()) return b;
  if (c.is_atom()) throw BadPosition("descends through an atom");
  Position rest(pos.begin() + 1, pos.end());
  if (c.conn() == Conn::Not) {
    if (pos.front() != 0) throw BadPosition("negation has one child");
    return Formula::negation(substitute_subformula(c.child(), rest, b));
  }
  if (pos.front() == 0)
    return Formula::make(c.conn(), substitute_subformula(c.left(), rest, b),
                         c.right());
  if (pos.front() == 1)
    return Formula::make(c.conn(), c.left(),
                         substitute_subformula(c.right(), rest, b));
  throw BadPosition("child index must be 0 or 1");
}

std::vector<Position> find_occurrences(Formula c, Formula target) {
  std::vector<Position> out;
  Position path;
  std::function<void(Formula)> walk = [&](Formula g) {
    if (g == target) out.push_back(path);
    if (g.is_atom()) return;
    path.push_back(0);
    walk(g.conn() == Conn::Not ? g.child() : g.left());
    path.pop_back();
    if (g.conn() != Conn::Not) {
      path.push_back(1);
      walk(g.right());
      path.pop_back();
    }
  };
  walk(c);
  return out;
}

// ---------------------------------------------------------------------------
// BigNat

BigNat::BigNat(std::uint64_t v) {
  while (v) {
    limbs_.push_back(static_cast<std::uint32_t>(v % 1000000000u));
    v /= 1000000000u;
  }
  if (limbs_.empty()) limbs_.push_back(0);
}

void BigNat::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::operator+(const BigNat& o) const {
  BigNat r;
  r.limbs_.assign(std::max(limbs_.size(), o.limbs_.size()) + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
    std::uint64_t v = carry;
    if (i < limbs_.size()) v += limbs_[i];
    if (i < o.limbs_.size()) v += o.limbs_[i];
    r.limbs_[i] = static_cast<std::uint32_t>(v % 1000000000u);
    carry = v / 1000000000u;
  }
  r.trim();
  return r;
}

BigNat BigNat::operator*(const BigNat& o) const {
  BigNat r;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size() || carry; ++j) {
      std::uint64_t cur = r.limbs_[i + j] + carry;
      if (j < o.limbs_.size())
        cur += static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur % 1000000000u);
      carry = cur / 1000000000u;
    }
  }
  r.trim();
  return r;
}

bool BigNat::operator<=(const BigNat& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
  return true;
}

std::string BigNat::str() const {
  std::string out = std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

bool BigNat::fits_u64() const { return *this <= BigNat(UINT64_MAX); }

std::uint64_t BigNat::to_u64() const {
  std::uint64_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 1000000000u + limbs_[i];
  return v;
}

// ---------------------------------------------------------------------------
// Level enumeration

LevelCount enumerate_level(const std::vector<std::string>& atoms,
                           const std::set<Conn>& connectives, unsigned level,
                           std::uint64_t cap, bool want_formulas) {
  std::unordered_set<std::string> distinct(atoms.begin(), atoms.end());
  if (distinct.size() != atoms.size())
    throw DuplicateAtom("atom list for enumeration");
  bool has_not = connectives.count(Conn::Not) > 0;
  std::vector<Conn> binary;
  for (Conn c : connectives)
    if (c != Conn::Not && c != Conn::Atom) binary.push_back(c);

  // Count by the construction recurrence. Every member of L_{n+1} is an atom,
  // a (~A), or an (A o B) with A, B drawn from L_n, and distinct strings have
  // distinct top-level decompositions.
  BigNat count(atoms.size());
  for (unsigned i = 0; i < level; ++i) {
    BigNat next(atoms.size());
    if (has_not) next = next + count;
    BigNat square = count * count;
    for (std::size_t b = 0; b < binary.size(); ++b) next = next + square;
    count = next;
  }

  LevelCount result;
  result.count = count;

  bool enumerable = count.fits_u64() && count.to_u64() <= cap;
  if (!enumerable) {
    if (want_formulas)
      throw CapExceeded("level holds " + count.str() + " formulas, cap is " +
                        std::to_string(cap));
    return result;
  }

  // Explicit construction with structural deduplication; interning makes the
  // duplicate check a hash lookup.
  std::vector<Formula> current;
  std::unordered_set<const detail::Node*> seen;
  auto add = [&](Formula f, std::vector<Formula>& into) {
    if (seen.insert(f.raw()).second) into.push_back(f);
  };
  for (const auto& a : atoms) add(Formula::atom(a), current);
  for (unsigned i = 0; i < level; ++i) {
    std::vector<Formula> next = current;
    std::size_t prev_count = current.size();
    if (has_not)
      for (std::size_t k = 0; k < prev_count; ++k)
        add(Formula::negation(current[k]), next);
    for (Conn c : binary)
      for (std::size_t l = 0; l < prev_count; ++l)
        for (std::size_t r = 0; r < prev_count; ++r)
          add(Formula::make(c, current[l], current[r]), next);
    current = std::move(next);
  }

  if (!(BigNat(current.size()) == count))
    throw Error("enumeration disagrees with the counting recurrence: " +
                std::to_string(current.size()) + " vs " + count.str());
  if (want_formulas) result.formulas = std::move(current);
  return result;
}

// ---------------------------------------------------------------------------

Formula to_lprime(Formula f) {
  std::unordered_map<const detail::Node*, Formula> memo;
  std::function<Formula(Formula)> walk = [&](Formula g) -> Formula {
    auto it = memo.find(g.raw());
    if (it != memo.end()) return it->second;
    Formula result;
    if (g.is_atom()) {
      result = g;
    } else if (g.conn() == Conn::Not) {
      result = Formula::negation(walk(g.child()));
    } else {
      Formula l = walk(g.left());
      Formula r = walk(g.right());
      auto land = [](Formula a, Formula b) {
        return Formula::negation(Formula::implies(a, Formula::negation(b)));
      };
      switch (g.conn()) {
        case Conn::Or:
          result = Formula::implies(Formula::negation(l), r);
          break;
        case Conn::And:
          result = land(l, r);
          break;
        case Conn::Implies:
          result = Formula::implies(l, r);
          break;
        case Conn::Iff:
          result = land(Formula::implies(l, r), Formula::implies(r, l));
          break;
        default:
          throw Error("unreachable connective");
      }
    }
    memo.emplace(g.raw(), result);
    return result;
  };
  return walk(f);
}

bool in_lprime(Formula f) {
  std::unordered_set<const detail::Node*> ok;
  std::function<bool(Formula)> walk = [&](Formula g) -> bool {
    if (g.is_atom()) return true;
    if (ok.count(g.raw())) return true;
    bool good;
    if (g.conn() == Conn::Not)
      good = walk(g.child());
    else if (g.conn() == Conn::Implies)
      good = walk(g.left()) && walk(g.right());
    else
      good = false;
    if (good) ok.insert(g.raw());
    return good;
  };
  return walk(f);
}

}  // namespace logickit::prop
