#include "logickit/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <json.hpp>

namespace logickit::model {

using nlohmann::json;
using pd::PdConn;

std::size_t Structure::element_index(const std::string& id) const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == id) return i;
  throw DomainViolation("unknown element " + id);
}

void Structure::validate() const {
  if (domain.empty()) throw DomainViolation("domain is empty");
  std::set<std::string> ids(domain.begin(), domain.end());
  if (ids.size() != domain.size())
    throw DomainViolation("duplicate element id");
  for (const auto& [name, id] : constants)
    if (!ids.count(id))
      throw DomainViolation("constant " + name + " names unknown element " + id);
  for (const auto& [key, tuples] : relations)
    for (const auto& tuple : tuples) {
      if (tuple.size() != key.second)
        throw ArityMismatch("tuple length " + std::to_string(tuple.size()) +
                            " under " + key.first + "/" +
                            std::to_string(key.second));
      for (auto idx : tuple)
        if (idx >= domain.size())
          throw DomainViolation("tuple element out of range");
    }
}

std::string Structure::render() const {
  json j;
  j["version"] = "structure-v1";
  j["domain"] = domain;
  j["constants"] = json::object();
  for (const auto& [name, id] : constants) j["constants"][name] = id;
  j["relations"] = json::object();
  for (const auto& [key, tuples] : relations) {
    json rows = json::array();
    for (const auto& tuple : tuples) {
      json row = json::array();
      for (auto idx : tuple) row.push_back(domain[idx]);
      rows.push_back(row);
    }
    j["relations"][key.first + "/" + std::to_string(key.second)] = rows;
  }
  return j.dump(2);
}

Structure load_structure(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(e.what());
  }
  if (!j.is_object() || !j.contains("domain") || !j["domain"].is_array())
    throw SchemaError("expected an object with a \"domain\" array");
  if (j.contains("version") && j["version"] != "structure-v1")
    throw SchemaError("unsupported structure version");
  Structure m;
  for (const auto& e : j["domain"]) {
    if (!e.is_string()) throw SchemaError("domain ids must be strings");
    m.domain.push_back(e.get<std::string>());
  }
  if (m.domain.empty()) throw DomainViolation("domain is empty");
  if (j.contains("constants")) {
    if (!j["constants"].is_object())
      throw SchemaError("\"constants\" must be an object");
    for (auto it = j["constants"].begin(); it != j["constants"].end(); ++it) {
      if (!it.value().is_string())
        throw SchemaError("constant values must be element ids");
      m.constants[it.key()] = it.value().get<std::string>();
    }
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_object())
      throw SchemaError("\"relations\" must be an object");
    for (auto it = j["relations"].begin(); it != j["relations"].end(); ++it) {
      const std::string& key = it.key();
      auto slash = key.rfind('/');
      if (slash == std::string::npos)
        throw SchemaError("relation keys look like \"Name/arity\"");
      std::string name = key.substr(0, slash);
      std::size_t arity = std::stoul(key.substr(slash + 1));
      if (arity == 0) throw SchemaError("relation arity must be positive");
      std::set<std::vector<std::size_t>> tuples;
      if (!it.value().is_array()) throw SchemaError("relation must be an array");
      for (const auto& row : it.value()) {
        if (!row.is_array())
          throw SchemaError("relation rows must be arrays of element ids");
        if (row.size() != arity)
          throw ArityMismatch("tuple length " + std::to_string(row.size()) +
                              " under " + key);
        std::vector<std::size_t> tuple;
        for (const auto& cell : row) {
          if (!cell.is_string()) throw SchemaError("element ids are strings");
          tuple.push_back(m.element_index(cell.get<std::string>()));
        }
        tuples.insert(std::move(tuple));
      }
      m.relations[{name, arity}] = std::move(tuples);
    }
  }
  m.validate();
  return m;
}

// ---------------------------------------------------------------------------
// Valuation

namespace {

// Minted per-element constant names; '#' never appears in parsed names, so
// user constants are never shadowed.
std::string element_constant(std::size_t idx) {
  return "#" + std::to_string(idx);
}

std::optional<std::size_t> minted_index(const std::string& name) {
  if (name.empty() || name[0] != '#') return std::nullopt;
  return std::stoul(name.substr(1));
}

class Valuator {
 public:
  Valuator(const Structure& m, ModelVerdict& verdict)
      : m_(m), verdict_(verdict) {}

  bool eval(PdFormula f, bool record_trace) {
    switch (f.conn()) {
      case PdConn::Pred: {
        auto key = std::make_pair(f.pred_name(), f.args().size());
        auto rel = m_.relations.find(key);
        if (rel == m_.relations.end())
          throw UnknownSymbol(f.pred_name() + "/" +
                              std::to_string(f.args().size()));
        std::vector<std::size_t> tuple;
        for (const auto& t : f.args()) tuple.push_back(element_of(t));
        return rel->second.count(tuple) > 0;
      }
      case PdConn::Not:
        return !eval(f.child(), false);
      case PdConn::And:
        return eval(f.left(), false) && eval(f.right(), false);
      case PdConn::Or:
        return eval(f.left(), false) || eval(f.right(), false);
      case PdConn::Implies:
        return !eval(f.left(), false) || eval(f.right(), false);
      case PdConn::Iff:
        return eval(f.left(), false) == eval(f.right(), false);
      case PdConn::Forall: {
        for (std::size_t d = 0; d < m_.domain.size(); ++d) {
          PdFormula inst =
              pd::subst_free(f.body(), f.quantifier_var(),
                             Term::constant(element_constant(d)));
          if (!eval(inst, record_trace)) {
            if (record_trace)
              verdict_.trace.emplace_back(f.quantifier_var(), m_.domain[d]);
            return false;
          }
        }
        return true;
      }
      case PdConn::Exists: {
        for (std::size_t d = 0; d < m_.domain.size(); ++d) {
          PdFormula inst =
              pd::subst_free(f.body(), f.quantifier_var(),
                             Term::constant(element_constant(d)));
          if (eval(inst, record_trace)) {
            if (record_trace)
              verdict_.trace.emplace_back(f.quantifier_var(), m_.domain[d]);
            return true;
          }
        }
        return false;
      }
    }
    throw Error("unreachable connective");
  }

 private:
  std::size_t element_of(const Term& t) {
    if (t.is_var())
      throw Error("free variable survived the universal closure: " + t.name);
    if (auto idx = minted_index(t.name)) return *idx;
    auto it = m_.constants.find(t.name);
    if (it == m_.constants.end()) throw UnknownSymbol(t.name);
    return m_.element_index(it->second);
  }

  const Structure& m_;
  ModelVerdict& verdict_;
};

}  // namespace

ModelVerdict models(const Structure& m, PdFormula f) {
  m.validate();
  // every predicate and constant of f must be interpreted
  for (const auto& [name, arity] : pd::predicate_arities(f))
    if (!m.relations.count({name, arity}))
      throw UnknownSymbol(name + "/" + std::to_string(arity));
  for (const auto& c : pd::constants_of(f)) {
    if (auto idx = minted_index(c)) {
      if (*idx >= m.domain.size()) throw DomainViolation("element reference " + c);
      continue;  // minted element references are their own interpretation
    }
    if (!m.constants.count(c)) throw UnknownSymbol(c);
  }

  ModelVerdict verdict;
  Valuator v(m, verdict);
  verdict.holds = v.eval(pd::universal_closure(f), true);
  return verdict;
}

// ---------------------------------------------------------------------------
// Interpretation enumeration

namespace {

// Subsets of {0..m-1} in sequence order: a subset precedes another when its
// sorted member list is lexicographically smaller. The countermodels the
// enumeration reports are therefore reproducible.
std::vector<std::vector<std::size_t>> subsets_in_sequence_order(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    out.push_back(cur);
    for (std::size_t i = start; i < m; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<std::size_t>> tuples_over(std::size_t domain,
                                                  std::size_t arity) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(arity, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++cur[i] < domain) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
  }
}

struct Vocabulary {
  std::vector<std::pair<std::string, std::size_t>> predicates;  // name sorted
  std::vector<std::string> constants;                            // name sorted
};

Vocabulary vocabulary_of(const std::vector<PdFormula>& fs) {
  Vocabulary v;
  std::map<std::string, std::size_t> preds;
  std::set<std::string> consts;
  for (const auto& f : fs) {
    for (const auto& [name, arity] : pd::predicate_arities(f)) {
      auto [it, inserted] = preds.emplace(name, arity);
      if (!inserted && it->second != arity)
        throw ArityMismatch("predicate " + name + " used at two arities");
    }
    for (const auto& c : pd::constants_of(f)) consts.insert(c);
  }
  v.predicates.assign(preds.begin(), preds.end());
  v.constants.assign(consts.begin(), consts.end());
  return v;
}

std::vector<std::string> default_domain(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string id;
    std::size_t k = i;
    id += static_cast<char>('a' + k % 26);
    while (k >= 26) {
      k /= 26;
      id += static_cast<char>('a' + (k - 1) % 26);
    }
    out.push_back(id);
  }
  return out;
}

// Walks every interpretation of the vocabulary over a fixed n-element domain
// in the documented order (constants slowest, then predicates by name, each
// relation running through its subsets in sequence order). Returns the first
// structure the visitor accepts.
std::optional<Structure> enumerate_structures(
    const Vocabulary& voc, std::size_t n, std::uint64_t cap,
    const std::function<bool(const Structure&)>& accept) {
  Structure base;
  base.domain = default_domain(n);

  // per-predicate subset lists
  std::vector<std::vector<std::vector<std::size_t>>> relation_choices;
  double total = 1;
  for (const auto& [name, arity] : voc.predicates) {
    double count = std::pow(2.0, std::pow(double(n), double(arity)));
    total *= count;
    if (total > double(cap))
      throw CapExceeded("interpretation count for domain size " +
                        std::to_string(n));
    auto tuples = tuples_over(n, arity);
    relation_choices.push_back(subsets_in_sequence_order(tuples.size()));
  }
  for (std::size_t c = 0; c < voc.constants.size(); ++c) total *= double(n);
  if (total > double(cap))
    throw CapExceeded("interpretation count for domain size " +
                      std::to_string(n));

  std::vector<std::size_t> const_choice(voc.constants.size(), 0);
  while (true) {
    // constants fixed; run the predicate odometer
    std::vector<std::size_t> rel_choice(voc.predicates.size(), 0);
    while (true) {
      Structure m = base;
      for (std::size_t c = 0; c < voc.constants.size(); ++c)
        m.constants[voc.constants[c]] = base.domain[const_choice[c]];
      for (std::size_t p = 0; p < voc.predicates.size(); ++p) {
        auto tuples = tuples_over(n, voc.predicates[p].second);
        std::set<std::vector<std::size_t>> rel;
        for (auto idx : relation_choices[p][rel_choice[p]])
          rel.insert(tuples[idx]);
        m.relations[voc.predicates[p]] = std::move(rel);
      }
      if (accept(m)) return m;
      // advance the rightmost predicate fastest
      std::size_t p = voc.predicates.size();
      bool carried = true;
      while (p > 0 && carried) {
        --p;
        if (++rel_choice[p] < relation_choices[p].size()) {
          carried = false;
        } else {
          rel_choice[p] = 0;
        }
      }
      if (carried) break;
    }
    // advance the constants
    std::size_t c = voc.constants.size();
    bool carried = true;
    while (c > 0 && carried) {
      --c;
      if (++const_choice[c] < n) {
        carried = false;
      } else {
        const_choice[c] = 0;
      }
    }
    if (carried || voc.constants.empty()) break;
  }
  return std::nullopt;
}

}  // namespace

ValidityReport valid_over(PdFormula f, std::size_t max_domain,
                          std::uint64_t cap) {
  if (max_domain < 1) throw Error("max_domain must be at least 1");
  ValidityReport report;
  Vocabulary voc = vocabulary_of({f});
  for (std::size_t n = 1; n <= max_domain; ++n) {
    try {
      auto counter = enumerate_structures(voc, n, cap, [&](const Structure& m) {
        return !models(m, f).holds;
      });
      report.n_valid.push_back(!counter.has_value());
      if (counter && !report.countermodel)
        report.countermodel = std::move(counter);
    } catch (const CapExceeded&) {
      report.n_valid.push_back(std::nullopt);
    }
  }
  return report;
}

FolConsequenceResult fol_consequence(const std::vector<PdFormula>& premises,
                                     PdFormula b, std::size_t max_domain,
                                     std::uint64_t cap) {
  std::vector<PdFormula> all = premises;
  all.push_back(b);
  Vocabulary voc = vocabulary_of(all);
  FolConsequenceResult result;
  result.bound = max_domain;
  for (std::size_t n = 1; n <= max_domain; ++n) {
    auto counter = enumerate_structures(voc, n, cap, [&](const Structure& m) {
      for (const auto& p : premises)
        if (!models(m, p).holds) return false;
      return !models(m, b).holds;
    });
    if (counter) {
      result.status = FolConsequenceStatus::Invalid;
      result.countermodel = std::move(counter);
      return result;
    }
  }
  result.status = FolConsequenceStatus::NoCounterexampleUpToBound;
  return result;
}

FolSatResult fol_satisfiable(const std::vector<PdFormula>& premises,
                             std::size_t max_domain, std::uint64_t cap) {
  Vocabulary voc = vocabulary_of(premises);
  FolSatResult result;
  result.bound = max_domain;
  for (std::size_t n = 1; n <= max_domain; ++n) {
    auto found = enumerate_structures(voc, n, cap, [&](const Structure& m) {
      for (const auto& p : premises)
        if (!models(m, p).holds) return false;
      return true;
    });
    if (found) {
      result.status = FolSatStatus::Satisfiable;
      result.model = std::move(found);
      return result;
    }
  }
  result.status = FolSatStatus::NoModelUpToBound;
  return result;
}

}  // namespace logickit::model
