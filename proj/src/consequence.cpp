#include "logickit/consequence.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "logickit/syntax.hpp"

namespace logickit::prop {

namespace {

enum class V3 { T, F, U };

V3 neg3(V3 v) {
  if (v == V3::U) return V3::U;
  return v == V3::T ? V3::F : V3::T;
}

// The forcing engine of Special Methods 2.9.1/2.9.2/2.10.1. Constraints are
// (formula, required value) pairs; premises activate one at a time, and a
// constraint that does not force values triggers a case study.
class ForcingEngine {
 public:
  ForcingEngine(std::vector<Formula> premises, std::optional<Formula> goal,
                std::vector<std::string>& trace)
      : pending_(std::move(premises)), goal_(goal), trace_(trace) {}

  // Returns an assignment satisfying every premise (and falsifying the goal,
  // when present), or nullopt when every case study forces a conflict.
  std::optional<Assignment> run() {
    if (goal_) {
      note(*goal_, false, "goal-false");
      constraints_.push_back({*goal_, false});
    }
    return search();
  }

 private:
  struct Constraint {
    Formula f;
    bool required;
  };

  std::vector<Constraint> constraints_;
  std::vector<Formula> pending_;
  std::optional<Formula> goal_;
  std::vector<std::string>& trace_;
  std::map<std::string, bool> partial_;
  int step_ = 0;

  void note(Formula f, bool v, const char* reason) {
    ++step_;
    trace_.push_back("step " + std::to_string(step_) + ": set v(" +
                     print_atomic(f) + ")=" + (v ? "T" : "F") + " because " +
                     reason);
  }

  void note_atom(const std::string& name, bool v, const char* reason) {
    ++step_;
    trace_.push_back("step " + std::to_string(step_) + ": set v(" + name +
                     ")=" + (v ? "T" : "F") + " because " + reason);
  }

  V3 eval3(Formula f) const {
    switch (f.conn()) {
      case Conn::Atom: {
        auto it = partial_.find(f.atom_name());
        return it == partial_.end() ? V3::U : (it->second ? V3::T : V3::F);
      }
      case Conn::Not:
        return neg3(eval3(f.child()));
      case Conn::And: {
        V3 l = eval3(f.left()), r = eval3(f.right());
        if (l == V3::F || r == V3::F) return V3::F;
        if (l == V3::T && r == V3::T) return V3::T;
        return V3::U;
      }
      case Conn::Or: {
        V3 l = eval3(f.left()), r = eval3(f.right());
        if (l == V3::T || r == V3::T) return V3::T;
        if (l == V3::F && r == V3::F) return V3::F;
        return V3::U;
      }
      case Conn::Implies: {
        V3 l = eval3(f.left()), r = eval3(f.right());
        if (l == V3::F || r == V3::T) return V3::T;
        if (l == V3::T && r == V3::F) return V3::F;
        return V3::U;
      }
      case Conn::Iff: {
        V3 l = eval3(f.left()), r = eval3(f.right());
        if (l == V3::U || r == V3::U) return V3::U;
        return l == r ? V3::T : V3::F;
      }
    }
    throw Error("unreachable connective");
  }

  // Pushes the required value one connective down wherever it is forced.
  // Returns false on a contradiction with the current partial assignment.
  bool force(Formula f, bool req, bool* progressed) {
    V3 cur = eval3(f);
    if (cur != V3::U) return cur == (req ? V3::T : V3::F);
    switch (f.conn()) {
      case Conn::Atom:
        partial_[f.atom_name()] = req;
        note_atom(f.atom_name(), req, "forced");
        *progressed = true;
        return true;
      case Conn::Not:
        return force(f.child(), !req, progressed);
      case Conn::And:
        if (req)
          return force(f.left(), true, progressed) &&
                 force(f.right(), true, progressed);
        if (eval3(f.left()) == V3::T) return force(f.right(), false, progressed);
        if (eval3(f.right()) == V3::T) return force(f.left(), false, progressed);
        return true;  // nothing forced yet
      case Conn::Or:
        if (!req)
          return force(f.left(), false, progressed) &&
                 force(f.right(), false, progressed);
        if (eval3(f.left()) == V3::F) return force(f.right(), true, progressed);
        if (eval3(f.right()) == V3::F) return force(f.left(), true, progressed);
        return true;
      case Conn::Implies:
        if (!req)
          return force(f.left(), true, progressed) &&
                 force(f.right(), false, progressed);
        if (eval3(f.left()) == V3::T) return force(f.right(), true, progressed);
        if (eval3(f.right()) == V3::F) return force(f.left(), false, progressed);
        return true;
      case Conn::Iff: {
        V3 l = eval3(f.left()), r = eval3(f.right());
        if (l != V3::U)
          return force(f.right(), req == (l == V3::T), progressed);
        if (r != V3::U)
          return force(f.left(), req == (r == V3::T), progressed);
        return true;
      }
    }
    throw Error("unreachable connective");
  }

  // Propagates all constraints to a fixpoint. Returns false on conflict.
  bool propagate() {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (const auto& c : constraints_) {
        if (!force(c.f, c.required, &progressed)) return false;
      }
    }
    return true;
  }

  std::size_t unassigned_atom_count(Formula f) const {
    std::size_t n = 0;
    for (const auto& a : f.atoms())
      if (!partial_.count(a)) ++n;
    return n;
  }

  // Selection rule: fewest unassigned atoms, ties by printed form, then by
  // position. Returns an index into `from`.
  std::size_t select(const std::vector<Formula>& from) const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < from.size(); ++i) {
      std::size_t ci = unassigned_atom_count(from[i]);
      std::size_t cb = unassigned_atom_count(from[best]);
      if (ci < cb ||
          (ci == cb && print_atomic(from[i]) < print_atomic(from[best])))
        best = i;
    }
    return best;
  }

  std::optional<std::string> first_unassigned_atom(Formula f) const {
    for (const auto& a : f.atoms())
      if (!partial_.count(a)) return a;
    return std::nullopt;
  }

  std::optional<Assignment> search() {
    if (!propagate()) return std::nullopt;

    // A constraint whose value is still open after propagation calls for a
    // case study (2.9.2): split on its first unassigned atom.
    for (const auto& c : constraints_) {
      if (eval3(c.f) == V3::U) {
        auto atom = first_unassigned_atom(c.f);
        if (!atom) throw Error("open constraint without open atoms");
        for (bool v : {true, false}) {
          auto saved_partial = partial_;
          auto saved_constraints = constraints_;
          auto saved_pending = pending_;
          int saved_step = step_;
          std::size_t saved_trace = trace_.size();
          partial_[*atom] = v;
          note_atom(*atom, v, "case-split");
          auto result = search();
          if (result) return result;
          partial_ = std::move(saved_partial);
          constraints_ = std::move(saved_constraints);
          pending_ = std::move(saved_pending);
          step_ = saved_step;
          trace_.resize(saved_trace);
        }
        return std::nullopt;
      }
    }

    if (!pending_.empty()) {
      std::size_t idx = select(pending_);
      Formula p = pending_[idx];
      pending_.erase(pending_.begin() + idx);
      note(p, true, "premise-true");
      constraints_.push_back({p, true});
      return search();
    }

    // Every constraint is determined with its required value; complete the
    // assignment over the mentioned atoms.
    std::vector<std::string> names;
    std::vector<bool> values;
    auto add_atoms = [&](Formula f) {
      for (const auto& a : f.atoms())
        if (std::find(names.begin(), names.end(), a) == names.end()) {
          names.push_back(a);
          values.push_back(partial_.count(a) ? partial_.at(a) : true);
        }
    };
    if (goal_) add_atoms(*goal_);
    for (const auto& c : constraints_) add_atoms(c.f);
    return Assignment(names, values);
  }
};

ConsequenceVerdict table_consequence(const std::vector<Formula>& premises,
                                     Formula b) {
  ConsequenceVerdict verdict;
  std::vector<Formula> all = premises;
  all.push_back(b);
  for (const auto& row : canonical_assignments(atom_union(all))) {
    bool all_true = true;
    for (const auto& p : premises)
      if (!eval(p, row)) {
        all_true = false;
        break;
      }
    if (all_true && !eval(b, row)) {
      verdict.status = ConsequenceStatus::Invalid;
      verdict.witness = row;
      return verdict;
    }
  }
  verdict.status = ConsequenceStatus::Valid;
  return verdict;
}

SatVerdict table_satisfiable(const std::vector<Formula>& fs) {
  SatVerdict verdict;
  for (const auto& row : canonical_assignments(atom_union(fs))) {
    bool all_true = true;
    for (const auto& f : fs)
      if (!eval(f, row)) {
        all_true = false;
        break;
      }
    if (all_true) {
      verdict.status = SatStatus::Satisfiable;
      verdict.witness = row;
      return verdict;
    }
  }
  verdict.status = SatStatus::Unsatisfiable;
  return verdict;
}

}  // namespace

ConsequenceVerdict valid_consequence(const std::vector<Formula>& premises,
                                     Formula b, Strategy strategy) {
  if (strategy == Strategy::Table) return table_consequence(premises, b);
  ConsequenceVerdict verdict;
  ForcingEngine engine(premises, b, verdict.trace);
  auto witness = engine.run();
  if (witness) {
    verdict.status = ConsequenceStatus::Invalid;
    verdict.witness = std::move(witness);
  } else {
    verdict.status = ConsequenceStatus::Valid;
  }
  return verdict;
}

SatVerdict satisfiable(const std::vector<Formula>& fs, Strategy strategy) {
  if (strategy == Strategy::Table) return table_satisfiable(fs);
  SatVerdict verdict;
  ForcingEngine engine(fs, std::nullopt, verdict.trace);
  auto witness = engine.run();
  if (witness) {
    verdict.status = SatStatus::Satisfiable;
    verdict.witness = std::move(witness);
  } else {
    verdict.status = SatStatus::Unsatisfiable;
  }
  return verdict;
}

ConsequenceVerdict consequence_by_refutation(
    const std::vector<Formula>& premises, Formula b) {
  std::vector<Formula> refuted = premises;
  refuted.push_back(Formula::negation(b));
  SatVerdict sat = satisfiable(refuted);
  ConsequenceVerdict verdict;
  verdict.trace = std::move(sat.trace);
  if (sat.status == SatStatus::Unsatisfiable) {
    verdict.status = ConsequenceStatus::Valid;
  } else {
    verdict.status = ConsequenceStatus::Invalid;
    verdict.witness = std::move(sat.witness);
  }
  return verdict;
}

MaximalExtension maximal_extension(const std::vector<Formula>& gamma,
                                   const std::vector<Formula>& universe) {
  if (satisfiable(gamma).status != SatStatus::Satisfiable)
    throw InputUnsatisfiable();

  // Stage order: by size, then by printed string.
  std::vector<Formula> ordered = universe;
  std::stable_sort(ordered.begin(), ordered.end(), [](Formula a, Formula b) {
    std::size_t sa = size_of(a), sb = size_of(b);
    if (sa != sb) return sa < sb;
    return print_atomic(a) < print_atomic(b);
  });

  std::vector<Formula> extension = gamma;
  for (const auto& candidate : ordered) {
    if (std::find(extension.begin(), extension.end(), candidate) !=
        extension.end())
      continue;
    std::vector<Formula> attempt = extension;
    attempt.push_back(candidate);
    if (satisfiable(attempt, Strategy::Table).status == SatStatus::Satisfiable)
      extension = std::move(attempt);
  }

  SatVerdict final_check = satisfiable(extension, Strategy::Table);
  if (final_check.status != SatStatus::Satisfiable)
    throw Error("maximal extension lost satisfiability");
  return MaximalExtension{std::move(extension), *final_check.witness};
}

SubsetReport finite_subsets_satisfiable(
    const std::function<Formula(std::size_t)>& family, std::size_t k,
    std::uint64_t subset_cap) {
  SubsetReport report;
  report.all_satisfiable = true;
  std::vector<Formula> prefix;
  prefix.reserve(k);
  for (std::size_t i = 0; i < k; ++i) prefix.push_back(family(i));

  if (k < 63 && (1ull << k) <= subset_cap) {
    for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
      std::vector<Formula> subset;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1ull << i)) subset.push_back(prefix[i]);
      ++report.subsets_checked;
      if (satisfiable(subset, Strategy::Table).status ==
          SatStatus::Unsatisfiable) {
        report.all_satisfiable = false;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1ull << i)) report.first_unsat_subset.push_back(i);
        return report;
      }
    }
    return report;
  }

  // Too many subsets: fall back to the chain of prefixes.
  report.capped = true;
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<Formula> subset(prefix.begin(), prefix.begin() + i);
    ++report.subsets_checked;
    if (satisfiable(subset, Strategy::Table).status ==
        SatStatus::Unsatisfiable) {
      report.all_satisfiable = false;
      for (std::size_t j = 0; j < i; ++j) report.first_unsat_subset.push_back(j);
      return report;
    }
  }
  return report;
}

}  // namespace logickit::prop
