#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logickit/formula.hpp"

namespace logickit::prop {

// Matched parenthesis pair found by the common pair rule (character offsets).
struct SpanPair {
  std::size_t open_index;
  std::size_t close_index;
};

using AtomSubstitution = std::map<std::string, Formula>;

// Least n with f in L_n. Computed structurally and cross-checked against the
// maximal running-sum counter of the common pair rule on the atomic form.
std::size_t size_of(Formula f);

// Runs the common pair rule over a fully parenthesized formula string and
// pairs every '(' with the first ')' at which the +1/-1 sum returns to zero.
// Pairs are ordered by opening offset. Throws UnbalancedParentheses.
std::vector<SpanPair> common_pairs(std::string_view text);

// Every non-atom subtree occurrence in pre-order (the formula itself first);
// an atom is its own sole subformula.
std::vector<Formula> subformulas(Formula f);

// Simultaneous replacement of every atom occurrence; the map must cover all
// atoms of f (MissingImage otherwise).
Formula substitute_atoms(Formula f, const AtomSubstitution& s);

// Path from the root: 0 = left/only child, 1 = right child.
using Position = std::vector<int>;

Formula subformula_at(Formula c, const Position& pos);

// Replaces exactly the addressed occurrence. Throws BadPosition.
Formula substitute_subformula(Formula c, const Position& pos, Formula b);

// Pre-order positions at which `target` occurs in c.
std::vector<Position> find_occurrences(Formula c, Formula target);

// Unbounded natural number; level counts overflow 64 bits by L_6.
class BigNat {
 public:
  BigNat() : limbs_{0} {}
  explicit BigNat(std::uint64_t v);
  BigNat operator+(const BigNat& o) const;
  BigNat operator*(const BigNat& o) const;
  bool operator==(const BigNat& o) const { return limbs_ == o.limbs_; }
  bool operator<=(const BigNat& o) const;
  std::string str() const;
  bool fits_u64() const;
  std::uint64_t to_u64() const;

 private:
  std::vector<std::uint32_t> limbs_;  // base 1e9, little endian
  void trim();
};

struct LevelCount {
  BigNat count;
  // Materialized formulas of the level, present only when the count is below
  // the requested cap. Order is the construction order and not contractual.
  std::optional<std::vector<Formula>> formulas;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

// |L_n| for the inductive construction over the given atoms and connectives
// (Conn::Not plus any binary connectives). The count follows the recurrence
// |L_{n+1}| = a + u*|L_n| + b*|L_n|^2 and, below the cap, is verified by
// explicit enumeration with structural deduplication.
LevelCount enumerate_level(const std::vector<std::string>& atoms,
                           const std::set<Conn>& connectives, unsigned level,
                           std::uint64_t cap = kDefaultEnumerationCap,
                           bool want_formulas = false);

// Rewrites f over {~, ->} only: A|B => (~A)->B, A&B => ~(A->(~B)),
// A<->B as the conjunction of both directions, re-expanded.
Formula to_lprime(Formula f);

bool in_lprime(Formula f);

}  // namespace logickit::prop
