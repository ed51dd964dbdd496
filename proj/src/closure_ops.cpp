#include "logickit/closure_ops.hpp"

#include <algorithm>

namespace logickit::ops {

using prop::Conn;

void FormulaUniverse::build_index() {
  for (std::size_t i = 0; i < formulas_.size(); ++i)
    index_.emplace(formulas_[i], i);
}

FormulaUniverse FormulaUniverse::over(const std::vector<std::string>& atoms,
                                      const std::set<prop::Conn>& connectives,
                                      unsigned size_bound) {
  auto level = prop::enumerate_level(atoms, connectives, size_bound,
                                     prop::kDefaultEnumerationCap, true);
  FormulaUniverse u;
  u.formulas_ = std::move(*level.formulas);
  // deterministic order: by size, then by printed form
  std::stable_sort(u.formulas_.begin(), u.formulas_.end(),
                   [](Formula a, Formula b) {
                     std::size_t sa = prop::size_of(a), sb = prop::size_of(b);
                     if (sa != sb) return sa < sb;
                     return prop::print_atomic(a) < prop::print_atomic(b);
                   });
  u.build_index();
  return u;
}

FormulaUniverse FormulaUniverse::from_list(std::vector<Formula> formulas) {
  FormulaUniverse u;
  std::set<Formula> seen;
  for (const auto& f : formulas)
    if (seen.insert(f).second) u.formulas_.push_back(f);
  u.build_index();
  for (const auto& f : u.formulas_)
    for (const auto& sub : prop::subformulas(f))
      if (!u.index_.count(sub) && !sub.is_atom())
        throw NotInUniverse("missing subformula " + prop::print_atomic(sub));
  return u;
}

std::optional<std::size_t> FormulaUniverse::index_of(Formula f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FormulaUniverse::Subset FormulaUniverse::subset_of(
    const std::vector<Formula>& fs) const {
  Subset s(formulas_.size(), false);
  for (const auto& f : fs) {
    auto idx = index_of(f);
    if (!idx) throw NotInUniverse(prop::print_atomic(f));
    s[*idx] = true;
  }
  return s;
}

std::vector<Formula> FormulaUniverse::members(const Subset& s) const {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(formulas_[i]);
  return out;
}

FormulaUniverse::Subset axiom_instances(const FormulaUniverse& u) {
  // Instances inside the universe are exactly the members matching the four
  // schema shapes, so a pattern scan suffices.
  FormulaUniverse::Subset s(u.size(), false);
  for (std::size_t i = 0; i < u.size(); ++i) {
    Formula f = u.formulas()[i];
    if (f.conn() != Conn::Implies) continue;
    Formula l = f.left(), r = f.right();
    // (3) (A & B) -> A  and  (4) (A & B) -> B
    if (l.conn() == Conn::And && (l.left() == r || l.right() == r)) {
      s[i] = true;
      continue;
    }
    // (1) (A & (B & C)) -> ((A & B) & C)
    if (l.conn() == Conn::And && l.right().conn() == Conn::And &&
        r.conn() == Conn::And && r.left().conn() == Conn::And &&
        r.left().left() == l.left() &&
        r.left().right() == l.right().left() &&
        r.right() == l.right().right()) {
      s[i] = true;
      continue;
    }
    // (2) ((A & B) & C) -> (A & (B & C))
    if (l.conn() == Conn::And && l.left().conn() == Conn::And &&
        r.conn() == Conn::And && r.right().conn() == Conn::And &&
        l.left().left() == r.left() &&
        l.left().right() == r.right().left() &&
        l.right() == r.right().right()) {
      s[i] = true;
      continue;
    }
  }
  return s;
}

namespace {

struct MpEdge {
  std::size_t antecedent;
  std::size_t implication;
  std::size_t conclusion;
};

std::vector<MpEdge> mp_edges(const FormulaUniverse& u,
                             std::size_t max_implication_size) {
  std::vector<MpEdge> edges;
  for (std::size_t i = 0; i < u.size(); ++i) {
    Formula f = u.formulas()[i];
    if (f.conn() != Conn::Implies) continue;
    if (prop::size_of(f) > max_implication_size) continue;
    auto a = u.index_of(f.left());
    auto c = u.index_of(f.right());
    if (a && c) edges.push_back(MpEdge{*a, i, *c});
  }
  return edges;
}

FormulaUniverse::Subset saturate(const FormulaUniverse& u,
                                 const FormulaUniverse::Subset& gamma,
                                 const std::vector<MpEdge>& edges) {
  if (gamma.size() != u.size()) throw NotInUniverse("subset size mismatch");
  FormulaUniverse::Subset s = gamma;
  auto ax = axiom_instances(u);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (ax[i]) s[i] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : edges) {
      if (s[e.antecedent] && s[e.implication] && !s[e.conclusion]) {
        s[e.conclusion] = true;
        changed = true;
      }
    }
  }
  return s;
}

}  // namespace

FormulaUniverse::Subset closure_s(const FormulaUniverse& u,
                                  const FormulaUniverse::Subset& gamma) {
  return saturate(u, gamma, mp_edges(u, SIZE_MAX));
}

FormulaUniverse::Subset closure_sn(const FormulaUniverse& u,
                                   const FormulaUniverse::Subset& gamma,
                                   std::size_t n) {
  return saturate(u, gamma, mp_edges(u, n));
}

std::vector<Formula> closure_s(const FormulaUniverse& u,
                               const std::vector<Formula>& gamma) {
  return u.members(closure_s(u, u.subset_of(gamma)));
}

std::vector<Formula> closure_sn(const FormulaUniverse& u,
                                const std::vector<Formula>& gamma,
                                std::size_t n) {
  return u.members(closure_sn(u, u.subset_of(gamma), n));
}

namespace {

bool subset_le(const FormulaUniverse::Subset& a,
               const FormulaUniverse::Subset& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

FormulaUniverse::Subset subset_union(const FormulaUniverse::Subset& a,
                                     const FormulaUniverse::Subset& b) {
  FormulaUniverse::Subset out = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) out[i] = true;
  return out;
}

}  // namespace

OperatorReport check_operator_axioms(
    const FormulaUniverse& u, const Operator& op,
    const std::vector<FormulaUniverse::Subset>& samples) {
  OperatorReport report;
  report.all_pass = true;
  auto fail = [&](const std::string& axiom, const FormulaUniverse::Subset& a,
                  std::optional<FormulaUniverse::Subset> b = std::nullopt) {
    report.all_pass = false;
    report.violations.push_back(AxiomViolation{axiom, a, std::move(b)});
  };

  std::vector<FormulaUniverse::Subset> images;
  images.reserve(samples.size());
  for (const auto& a : samples) images.push_back(op(a));

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& a = samples[i];
    const auto& ca = images[i];
    ++report.checks_run;
    if (ca.size() != u.size()) {
      fail("output-in-universe", a);
      continue;
    }
    if (!subset_le(a, ca)) fail("extensivity", a);
    if (!(op(ca) == ca)) fail("idempotence", a);
    // finite character: every member of C(A) already lies in C(D) for the
    // finite D = A itself; trivial at this scale but checked literally
    if (!subset_le(ca, op(a))) fail("finite-character", a);
  }

  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const auto& a = samples[i];
      const auto& b = samples[j];
      const auto& ca = images[i];
      const auto& cb = images[j];
      ++report.checks_run;
      if (subset_le(a, b) && !subset_le(ca, cb)) fail("monotonicity", a, b);
      // A <= C(B) iff C(A) <= C(B)
      if (subset_le(a, cb) != subset_le(ca, cb)) fail("inclusion-law", a, b);
      // C(A u B) = C(A u C(B)) = C(C(A) u C(B))
      auto c_ab = op(subset_union(a, b));
      if (!(c_ab == op(subset_union(a, cb))) ||
          !(c_ab == op(subset_union(ca, cb))))
        fail("union-law", a, b);
    }
  }
  return report;
}

IdempotentReport idempotent_theorems(
    const FormulaUniverse& u, const Operator& op,
    const std::vector<FormulaUniverse::Subset>& samples) {
  (void)u;
  IdempotentReport report;
  report.fixed_points_match = true;
  report.injective_on_samples = true;
  report.identity_on_samples = true;

  std::vector<FormulaUniverse::Subset> images;
  images.reserve(samples.size());
  for (const auto& a : samples) images.push_back(op(a));

  // S1 = {C(X)}: every image is a fixed point; S2 = {Y : Y = C(Y)}: every
  // sampled fixed point is its own image.
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(op(images[i]) == images[i])) report.fixed_points_match = false;
    if (samples[i] == images[i] && !(images[i] == samples[i]))
      report.fixed_points_match = false;
  }

  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i] == images[i])) report.identity_on_samples = false;
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (!(samples[i] == samples[j]) && images[i] == images[j]) {
        report.injective_on_samples = false;
        if (!report.non_injectivity_witness)
          report.non_injectivity_witness =
              std::make_pair(samples[i], samples[j]);
      }
    }
  }
  return report;
}

std::vector<FormulaUniverse::Subset> default_samples(const FormulaUniverse& u,
                                                     std::size_t pair_budget) {
  std::vector<FormulaUniverse::Subset> samples;
  FormulaUniverse::Subset empty(u.size(), false);
  samples.push_back(empty);
  FormulaUniverse::Subset full(u.size(), true);
  samples.push_back(full);
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto s = empty;
    s[i] = true;
    samples.push_back(s);
  }
  // deterministic two-element subsets with a fixed stride
  std::size_t added = 0;
  for (std::size_t i = 0; i < u.size() && added < pair_budget; ++i) {
    for (std::size_t j = i + 1; j < u.size() && added < pair_budget;
         j += std::max<std::size_t>(1, u.size() / 7)) {
      auto s = empty;
      s[i] = true;
      s[j] = true;
      samples.push_back(s);
      ++added;
    }
  }
  return samples;
}

}  // namespace logickit::ops
