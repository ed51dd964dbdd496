#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "logickit/semantics.hpp"

namespace logickit::prop {

enum class ConsequenceStatus { Valid, Invalid };

struct ConsequenceVerdict {
  ConsequenceStatus status;
  std::optional<Assignment> witness;  // satisfies premises, falsifies b
  std::vector<std::string> trace;
};

enum class SatStatus { Satisfiable, Unsatisfiable };

struct SatVerdict {
  SatStatus status;
  std::optional<Assignment> witness;  // gives T to every formula
  std::vector<std::string> trace;
};

enum class Strategy { Forcing, Table };

// Is b true under every assignment satisfying all premises? The Forcing
// strategy assumes v(b)=F, propagates forced truth values and case-splits
// where nothing is forced; the Table strategy checks rows exhaustively.
ConsequenceVerdict valid_consequence(const std::vector<Formula>& premises,
                                     Formula b,
                                     Strategy strategy = Strategy::Forcing);

// Searches for one assignment making every formula T; doubles as the
// consistency verdict for finite premise sets.
SatVerdict satisfiable(const std::vector<Formula>& fs,
                       Strategy strategy = Strategy::Forcing);

// Valid iff premises + ~b are unsatisfiable.
ConsequenceVerdict consequence_by_refutation(const std::vector<Formula>& premises,
                                             Formula b);

struct MaximalExtension {
  std::vector<Formula> extension;  // gamma plus every compatible universe member
  Assignment assignment;           // satisfies gamma; atom in extension iff T
};

// The staged consistent-extension process run over a finite universe
// enumeration, with satisfiability as the consistency oracle. The result is
// negation-complete relative to the universe. Throws InputUnsatisfiable.
MaximalExtension maximal_extension(const std::vector<Formula>& gamma,
                                   const std::vector<Formula>& universe);

struct SubsetReport {
  bool all_satisfiable;
  std::vector<std::size_t> first_unsat_subset;  // indices into the family
  bool capped = false;            // only prefixes were checked
  std::size_t subsets_checked = 0;
};

inline constexpr std::uint64_t kDefaultSubsetCap = 1u << 16;

// Checks satisfiability of every subset of the family prefix A_1..A_k, or of
// the prefixes only when 2^k exceeds the cap.
SubsetReport finite_subsets_satisfiable(
    const std::function<Formula(std::size_t)>& family, std::size_t k,
    std::uint64_t subset_cap = kDefaultSubsetCap);

}  // namespace logickit::prop
