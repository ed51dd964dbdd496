#include "logickit/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "logickit/circuit.hpp"
#include "logickit/closure_ops.hpp"
#include "logickit/consequence.hpp"
#include "logickit/normal_form.hpp"
#include "logickit/pd_proof.hpp"

namespace logickit::cli {

namespace {

using nlohmann::json;

std::string slurp_path(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in.good()) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<prop::Formula> formulas_from_lines(const std::string& text) {
  std::vector<prop::Formula> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    out.push_back(prop::parse(line));
  }
  return out;
}

json assignment_json(const prop::Assignment& a) {
  json j = json::object();
  for (std::size_t i = 0; i < a.atoms().size(); ++i)
    j[a.atoms()[i]] = a.values()[i] ? "T" : "F";
  return j;
}

struct Options {
  std::string format = "text";
  bool trace = false;
  std::size_t max_domain = 3;
  std::uint64_t cap = 0;  // 0 = command default
  bool json() const { return format == "json"; }
};

void emit_trace(const Options& opt, const std::vector<std::string>& trace,
                std::ostream& out) {
  if (!opt.trace) return;
  for (const auto& line : trace) out << line << "\n";
}

prop::Strategy strategy_of(const std::string& name) {
  if (name == "forcing") return prop::Strategy::Forcing;
  if (name == "table") return prop::Strategy::Table;
  throw Error("unknown strategy " + name);
}

std::set<prop::Conn> parse_connectives(const std::string& spec) {
  std::set<prop::Conn> conns;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    if (cur == "~") conns.insert(prop::Conn::Not);
    else if (cur == "&") conns.insert(prop::Conn::And);
    else if (cur == "|") conns.insert(prop::Conn::Or);
    else if (cur == "->") conns.insert(prop::Conn::Implies);
    else if (cur == "<->") conns.insert(prop::Conn::Iff);
    else throw Error("unknown connective " + cur);
    cur.clear();
  };
  for (char c : spec) {
    if (c == ',' || c == ' ') flush();
    else cur += c;
  }
  flush();
  if (conns.empty()) throw Error("empty connective set");
  return conns;
}

std::vector<std::string> parse_atom_list(const std::string& spec) {
  std::vector<std::string> atoms;
  std::string cur;
  for (char c : spec) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) atoms.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) atoms.push_back(cur);
  return atoms;
}

int run_parse(const Options& opt, const std::string& text, std::ostream& out) {
  prop::Formula f = prop::parse(text);
  if (opt.json()) {
    json j;
    j["formula"] = prop::print_atomic(f);
    j["atomic_form"] = prop::print_atomic_full(f);
    j["atoms"] = f.atoms();
    j["size"] = prop::size_of(f);
    out << j.dump(2) << "\n";
  } else {
    out << prop::print_atomic(f) << "\n";
  }
  return 0;
}

int run_classify(const Options& opt, const std::string& text,
                 std::ostream& out) {
  prop::Formula f = prop::parse(text);
  auto r = prop::classify(f);
  const char* name = r.kind == prop::Classification::Valid ? "valid"
                     : r.kind == prop::Classification::Contradiction
                         ? "contradiction"
                         : "contingent";
  if (opt.json()) {
    json j;
    j["verdict"] = name;
    if (r.true_witness) j["true_witness"] = assignment_json(*r.true_witness);
    if (r.false_witness) j["false_witness"] = assignment_json(*r.false_witness);
    out << j.dump(2) << "\n";
  } else {
    out << name << "\n";
    if (r.kind == prop::Classification::Contingent) {
      out << "true at " << r.true_witness->str() << "\n";
      out << "false at " << r.false_witness->str() << "\n";
    }
  }
  return 0;
}

int run_consequence(const Options& opt, const std::vector<std::string>& premises,
                    const std::string& file, const std::string& goal,
                    const std::string& strategy, bool refute,
                    std::ostream& out) {
  std::vector<prop::Formula> ps;
  for (const auto& p : premises) ps.push_back(prop::parse(p));
  if (!file.empty())
    for (const auto& f : formulas_from_lines(slurp_path(file)))
      ps.push_back(f);
  prop::Formula b = prop::parse(goal);
  prop::ConsequenceVerdict v =
      refute ? prop::consequence_by_refutation(ps, b)
             : prop::valid_consequence(ps, b, strategy_of(strategy));
  emit_trace(opt, v.trace, out);
  bool valid = v.status == prop::ConsequenceStatus::Valid;
  if (opt.json()) {
    json j;
    j["verdict"] = valid ? "valid" : "invalid";
    if (v.witness) j["witness"] = assignment_json(*v.witness);
    out << j.dump(2) << "\n";
  } else {
    out << (valid ? "valid" : "invalid") << "\n";
    if (v.witness) out << "witness " << v.witness->str() << "\n";
  }
  return valid ? 0 : 1;
}

int run_sat(const Options& opt, const std::vector<std::string>& premises,
            const std::string& file, const std::string& strategy,
            std::ostream& out) {
  std::vector<prop::Formula> ps;
  for (const auto& p : premises) ps.push_back(prop::parse(p));
  if (!file.empty())
    for (const auto& f : formulas_from_lines(slurp_path(file)))
      ps.push_back(f);
  auto v = prop::satisfiable(ps, strategy_of(strategy));
  emit_trace(opt, v.trace, out);
  bool sat = v.status == prop::SatStatus::Satisfiable;
  if (opt.json()) {
    json j;
    j["verdict"] = sat ? "satisfiable" : "unsatisfiable";
    if (v.witness) j["witness"] = assignment_json(*v.witness);
    out << j.dump(2) << "\n";
  } else {
    out << (sat ? "satisfiable" : "unsatisfiable") << "\n";
    if (v.witness) out << "witness " << v.witness->str() << "\n";
  }
  return sat ? 0 : 1;
}

model::Structure structure_from(const std::string& path) {
  return model::load_structure(slurp_path(path));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"logickit - a workbench for classical propositional and "
               "first-order logic"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--trace", opt.trace, "print the forcing trace");
  app.add_option("--max-domain", opt.max_domain,
                 "largest domain size for model search");
  app.add_option("--cap", opt.cap, "work cap override");

  // shared argument slots
  std::string formula_text, second_text, goal_text, file_path, second_path;
  std::string strategy = "forcing";
  std::vector<std::string> premise_texts;
  std::string atoms_spec = "P,Q";
  std::string conns_spec = "&";
  unsigned level = 1;
  bool enumerate = false;
  std::string row_spec, discharge_text, var_name, term_name;
  std::size_t closure_level = SIZE_MAX;
  unsigned universe_size = 2;
  std::vector<std::string> input_bits;
  bool use_half_adder = false;

  auto* c_parse = app.add_subcommand("parse", "parse and reprint a formula");
  c_parse->add_option("formula", formula_text)->required();

  auto* c_size = app.add_subcommand("size", "construction level of a formula");
  c_size->add_option("formula", formula_text)->required();

  auto* c_pairs = app.add_subcommand("pairs", "common parenthesis pairs");
  c_pairs->add_option("formula", formula_text)->required();

  auto* c_levels = app.add_subcommand("levels", "count |L_n|");
  c_levels->add_option("--atoms", atoms_spec, "comma separated atoms");
  c_levels->add_option("--conns", conns_spec, "connectives, e.g. ~,&,->");
  c_levels->add_option("level", level)->required();
  c_levels->add_flag("--enumerate", enumerate, "list the level when it fits");

  auto* c_table = app.add_subcommand("table", "truth table");
  c_table->add_option("formula", premise_texts)->required();

  auto* c_classify = app.add_subcommand("classify", "valid / contradiction / contingent");
  c_classify->add_option("formula", formula_text)->required();

  auto* c_equiv = app.add_subcommand("equiv", "semantic equivalence");
  c_equiv->add_option("a", formula_text)->required();
  c_equiv->add_option("b", second_text)->required();

  auto* c_cons = app.add_subcommand("consequence", "valid consequence");
  c_cons->add_option("--premise", premise_texts, "premise formula");
  c_cons->add_option("--file", file_path, "premises, one per line");
  c_cons->add_option("--strategy", strategy, "forcing or table");
  c_cons->add_option("goal", goal_text)->required();

  auto* c_refute = app.add_subcommand("refute", "consequence by refutation");
  c_refute->add_option("--premise", premise_texts);
  c_refute->add_option("--file", file_path);
  c_refute->add_option("goal", goal_text)->required();

  auto* c_sat = app.add_subcommand("sat", "satisfiability / consistency");
  c_sat->add_option("--premise", premise_texts);
  c_sat->add_option("--file", file_path);
  c_sat->add_option("--strategy", strategy);

  auto* c_extend = app.add_subcommand("extend", "maximal consistent extension");
  c_extend->add_option("--premise", premise_texts);
  c_extend->add_option("--file", file_path);
  c_extend->add_option("--atoms", atoms_spec);
  c_extend->add_option("--size", universe_size, "universe size bound");

  auto* c_fdnf = app.add_subcommand("fdnf", "full disjunctive normal form");
  c_fdnf->add_option("formula", formula_text)->required();

  auto* c_denial = app.add_subcommand("denial", "denial of a normal form");
  c_denial->add_option("formula", formula_text)->required();

  auto* c_nnf = app.add_subcommand("nnf", "reduce to the ~/&/| normal form");
  c_nnf->add_option("formula", formula_text)->required();

  auto* c_check = app.add_subcommand("prove-check", "check a proof script");
  c_check->add_option("file", file_path, "script path or -")->required();

  auto* c_deduce = app.add_subcommand("deduce", "apply the deduction theorem");
  c_deduce->add_option("file", file_path)->required();
  c_deduce->add_option("--discharge", discharge_text)->required();

  auto* c_synth = app.add_subcommand("synth", "synthesize a proof of a tautology");
  c_synth->add_option("formula", formula_text)->required();

  auto* c_deducib = app.add_subcommand("deducibility", "row deducibility proof");
  c_deducib->add_option("formula", formula_text)->required();
  c_deducib->add_option("--row", row_spec, "T/F letters in atom order")
      ->required();

  auto* c_closure = app.add_subcommand("closure", "consequence-operator closure");
  c_closure->add_option("--premise", premise_texts);
  c_closure->add_option("--file", file_path);
  c_closure->add_option("--atoms", atoms_spec);
  c_closure->add_option("--conns", conns_spec);
  c_closure->add_option("--size", universe_size);
  c_closure->add_option("-n", closure_level, "restrict MP to size <= n");

  auto* c_opcheck = app.add_subcommand("op-check", "consequence operator laws");
  c_opcheck->add_option("--atoms", atoms_spec);
  c_opcheck->add_option("--conns", conns_spec);
  c_opcheck->add_option("--size", universe_size);

  auto* c_pdparse = app.add_subcommand("pd-parse", "parse a predicate formula");
  c_pdparse->add_option("formula", formula_text)->required();

  auto* c_occ = app.add_subcommand("occ", "free/bound occurrence report");
  c_occ->add_option("formula", formula_text)->required();

  auto* c_congr = app.add_subcommand("congruent", "congruence of two formulas");
  c_congr->add_option("a", formula_text)->required();
  c_congr->add_option("b", second_text)->required();

  auto* c_subst = app.add_subcommand("subst", "free substitution S^x_t");
  c_subst->add_option("formula", formula_text)->required();
  c_subst->add_option("variable", var_name)->required();
  c_subst->add_option("term", term_name)->required();

  auto* c_closeu = app.add_subcommand("closure-univ", "universal closure");
  c_closeu->add_option("formula", formula_text)->required();

  auto* c_prenex = app.add_subcommand("prenex", "prenex normal form");
  c_prenex->add_option("formula", formula_text)->required();

  auto* c_model = app.add_subcommand("model", "does a structure model a sentence");
  c_model->add_option("--structure", file_path)->required();
  c_model->add_option("formula", formula_text)->required();

  auto* c_counter = app.add_subcommand("countermodel", "bounded validity search");
  c_counter->add_option("formula", formula_text)->required();

  auto* c_pdcons = app.add_subcommand("pd-consequence", "bounded consequence search");
  c_pdcons->add_option("--premise", premise_texts);
  c_pdcons->add_option("goal", goal_text)->required();

  auto* c_pdcheck = app.add_subcommand("pd-prove-check", "check a Pd' proof script");
  c_pdcheck->add_option("file", file_path)->required();

  auto* c_pddeduce = app.add_subcommand("pd-deduce", "restricted deduction theorem");
  c_pddeduce->add_option("file", file_path)->required();
  c_pddeduce->add_option("--discharge", discharge_text)->required();

  auto* c_compile = app.add_subcommand("compile", "compile a formula to a netlist");
  c_compile->add_option("formula", formula_text)->required();

  auto* c_sim = app.add_subcommand("simulate", "simulate a netlist");
  c_sim->add_option("file", file_path, "netlist path, or --half-adder");
  c_sim->add_flag("--half-adder", use_half_adder);
  c_sim->add_option("--in", input_bits, "port assignment NAME=0|1");

  auto* c_cequiv = app.add_subcommand("circuit-equiv", "netlist equivalence");
  c_cequiv->add_option("a", file_path)->required();
  c_cequiv->add_option("b", second_path)->required();

  std::vector<const char*> argv;
  argv.push_back("logickit");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_parse) return run_parse(opt, formula_text, out);

    if (*c_size) {
      out << prop::size_of(prop::parse(formula_text)) << "\n";
      return 0;
    }

    if (*c_pairs) {
      std::string text = prop::print_atomic_full(prop::parse(formula_text));
      auto pairs = prop::common_pairs(text);
      if (opt.json()) {
        json j;
        j["atomic_form"] = text;
        j["pairs"] = json::array();
        for (const auto& p : pairs)
          j["pairs"].push_back({p.open_index, p.close_index});
        out << j.dump(2) << "\n";
      } else {
        out << text << "\n";
        for (const auto& p : pairs)
          out << "(" << p.open_index << "," << p.close_index << ")\n";
      }
      return 0;
    }

    if (*c_levels) {
      auto atoms = parse_atom_list(atoms_spec);
      auto conns = parse_connectives(conns_spec);
      std::uint64_t cap = opt.cap ? opt.cap : prop::kDefaultEnumerationCap;
      auto r = prop::enumerate_level(atoms, conns, level, cap, enumerate);
      if (opt.json()) {
        json j;
        j["count"] = r.count.str();
        if (r.formulas) {
          j["formulas"] = json::array();
          for (const auto& f : *r.formulas)
            j["formulas"].push_back(prop::print_atomic(f));
        }
        out << j.dump(2) << "\n";
      } else {
        out << r.count.str() << "\n";
        if (r.formulas)
          for (const auto& f : *r.formulas)
            out << prop::print_atomic(f) << "\n";
      }
      return 0;
    }

    if (*c_table) {
      std::vector<prop::Formula> fs;
      for (const auto& t : premise_texts) fs.push_back(prop::parse(t));
      out << prop::truth_table(fs).render();
      return 0;
    }

    if (*c_classify) return run_classify(opt, formula_text, out);

    if (*c_equiv) {
      bool eq = prop::equivalent(prop::parse(formula_text),
                                 prop::parse(second_text));
      out << (eq ? "equivalent" : "inequivalent") << "\n";
      return eq ? 0 : 1;
    }

    if (*c_cons)
      return run_consequence(opt, premise_texts, file_path, goal_text,
                             strategy, false, out);
    if (*c_refute)
      return run_consequence(opt, premise_texts, file_path, goal_text,
                             strategy, true, out);
    if (*c_sat)
      return run_sat(opt, premise_texts, file_path, strategy, out);

    if (*c_extend) {
      std::vector<prop::Formula> gamma;
      for (const auto& p : premise_texts) gamma.push_back(prop::parse(p));
      if (!file_path.empty())
        for (const auto& f : formulas_from_lines(slurp_path(file_path)))
          gamma.push_back(f);
      auto universe = prop::enumerate_level(
          parse_atom_list(atoms_spec), {prop::Conn::Not, prop::Conn::Implies},
          universe_size, opt.cap ? opt.cap : prop::kDefaultEnumerationCap,
          true);
      auto ext = prop::maximal_extension(gamma, *universe.formulas);
      for (const auto& f : ext.extension) out << prop::print_atomic(f) << "\n";
      out << "assignment " << ext.assignment.str() << "\n";
      return 0;
    }

    if (*c_fdnf) {
      out << prop::print_flat(prop::fdnf(prop::parse(formula_text))) << "\n";
      return 0;
    }
    if (*c_denial) {
      out << prop::print_atomic(prop::denial(prop::parse(formula_text)))
          << "\n";
      return 0;
    }
    if (*c_nnf) {
      out << prop::print_atomic(prop::reduce_nf(prop::parse(formula_text)))
          << "\n";
      return 0;
    }

    if (*c_check) {
      auto p = proof::read_proof_script(slurp_path(file_path));
      auto chk = proof::check_proof(p);
      if (chk.accepted) {
        out << "accepted\n";
        return 0;
      }
      out << "rejected at step " << chk.step << ": "
          << proof::reject_reason_name(chk.reason) << "\n";
      return 1;
    }

    if (*c_deduce) {
      auto p = proof::read_proof_script(slurp_path(file_path));
      auto q = proof::deduction_transform(proof::expand_lemmas(p),
                                          prop::parse(discharge_text));
      out << proof::write_proof_script(q);
      return 0;
    }

    if (*c_synth) {
      std::size_t cap = opt.cap ? opt.cap : proof::kDefaultSynthesisAtomCap;
      try {
        auto r = proof::synthesize_proof(prop::parse(formula_text), cap);
        if (r.oversized)
          err << "note: proof has " << r.proof.steps.size() << " steps\n";
        out << proof::write_proof_script(r.proof);
        return 0;
      } catch (const NotATautology& e) {
        err << e.what() << "\n";
        return 1;
      }
    }

    if (*c_deducib) {
      prop::Formula f = prop::parse(formula_text);
      auto atoms = f.atoms();
      if (row_spec.size() != atoms.size())
        throw Error("row needs one T/F per atom (" +
                    std::to_string(atoms.size()) + ")");
      std::vector<bool> values;
      for (char c : row_spec) values.push_back(c == 'T' || c == 't' || c == '1');
      auto p = proof::deducibility_proof(f, prop::Assignment(atoms, values));
      out << proof::write_proof_script(p);
      return 0;
    }

    if (*c_closure) {
      auto u = ops::FormulaUniverse::over(parse_atom_list(atoms_spec),
                                          parse_connectives(conns_spec),
                                          universe_size);
      std::vector<prop::Formula> gamma;
      for (const auto& p : premise_texts) gamma.push_back(prop::parse(p));
      if (!file_path.empty())
        for (const auto& f : formulas_from_lines(slurp_path(file_path)))
          gamma.push_back(f);
      auto members = closure_level == SIZE_MAX
                         ? ops::closure_s(u, gamma)
                         : ops::closure_sn(u, gamma, closure_level);
      for (const auto& f : members) out << prop::print_atomic(f) << "\n";
      return 0;
    }

    if (*c_opcheck) {
      auto u = ops::FormulaUniverse::over(parse_atom_list(atoms_spec),
                                          parse_connectives(conns_spec),
                                          universe_size);
      ops::Operator op = [&u](const ops::FormulaUniverse::Subset& s) {
        return ops::closure_s(u, s);
      };
      auto samples = ops::default_samples(u, 60);
      auto axioms = ops::check_operator_axioms(u, op, samples);
      auto idem = ops::idempotent_theorems(u, op, samples);
      out << "universe " << u.size() << " formulas, " << samples.size()
          << " samples\n";
      out << "extensivity/idempotence/finite-character/monotonicity: "
          << (axioms.all_pass ? "pass" : "FAIL") << "\n";
      for (const auto& v : axioms.violations)
        out << "violation: " << v.axiom << "\n";
      out << "fixed points match: " << (idem.fixed_points_match ? "yes" : "NO")
          << "\n";
      out << "injective: " << (idem.injective_on_samples ? "yes" : "no")
          << "\n";
      return axioms.all_pass && idem.fixed_points_match ? 0 : 1;
    }

    if (*c_pdparse) {
      pd::PdFormula f = pd::parse_pd(formula_text);
      out << pd::print_pd(f) << "\n";
      out << (pd::in_pd_prime(f) ? "in Pd'" : "not in Pd'") << "\n";
      return 0;
    }

    if (*c_occ) {
      auto rep = pd::occurrences(pd::parse_pd(formula_text));
      out << "free:";
      for (const auto& v : rep.free_variables) out << " " << v;
      out << "\nbound:";
      for (const auto& v : rep.bound_variables) out << " " << v;
      out << "\n";
      for (const auto& q : rep.quantifiers)
        out << "quantifier " << q.index << " (" << (q.universal ? "forall" : "exists")
            << " " << q.var << ") scope " << q.scope << "\n";
      return 0;
    }

    if (*c_congr) {
      bool c = pd::congruent(pd::parse_pd(formula_text),
                             pd::parse_pd(second_text));
      out << (c ? "congruent" : "not congruent") << "\n";
      return c ? 0 : 1;
    }

    if (*c_subst) {
      pd::Term t = pd::is_variable_name(term_name)
                       ? pd::Term::var(term_name)
                       : pd::Term::constant(term_name);
      out << pd::print_pd(
                 pd::subst_free(pd::parse_pd(formula_text), var_name, t))
          << "\n";
      return 0;
    }

    if (*c_closeu) {
      out << pd::print_pd(pd::universal_closure(pd::parse_pd(formula_text)))
          << "\n";
      return 0;
    }

    if (*c_prenex) {
      out << pd::print_pd(pd::prenex(pd::parse_pd(formula_text))) << "\n";
      return 0;
    }

    if (*c_model) {
      auto m = structure_from(file_path);
      auto verdict = model::models(m, pd::parse_pd(formula_text));
      if (opt.json()) {
        json j;
        j["holds"] = verdict.holds;
        j["trace"] = json::array();
        for (const auto& [var, elem] : verdict.trace)
          j["trace"].push_back({{"variable", var}, {"element", elem}});
        out << j.dump(2) << "\n";
      } else {
        out << (verdict.holds ? "models" : "does not model") << "\n";
        for (const auto& [var, elem] : verdict.trace)
          out << var << " := " << elem << "\n";
      }
      return verdict.holds ? 0 : 1;
    }

    if (*c_counter) {
      std::uint64_t cap = opt.cap ? opt.cap : model::kDefaultInterpretationCap;
      auto report =
          model::valid_over(pd::parse_pd(formula_text), opt.max_domain, cap);
      for (std::size_t n = 0; n < report.n_valid.size(); ++n) {
        out << (n + 1) << "-valid: ";
        if (!report.n_valid[n]) out << "unknown (cap)";
        else out << (*report.n_valid[n] ? "yes" : "no");
        out << "\n";
      }
      if (report.countermodel) {
        out << report.countermodel->render() << "\n";
        return 1;
      }
      return 0;
    }

    if (*c_pdcons) {
      std::vector<pd::PdFormula> ps;
      for (const auto& p : premise_texts) ps.push_back(pd::parse_pd(p));
      std::uint64_t cap = opt.cap ? opt.cap : model::kDefaultInterpretationCap;
      auto r = model::fol_consequence(ps, pd::parse_pd(goal_text),
                                      opt.max_domain, cap);
      if (r.status == model::FolConsequenceStatus::Invalid) {
        out << "invalid\n" << r.countermodel->render() << "\n";
        return 1;
      }
      out << "no countermodel up to domain size " << r.bound << "\n";
      return 0;
    }

    if (*c_pdcheck) {
      auto p = pdproof::read_pd_proof_script(slurp_path(file_path));
      auto chk = pdproof::check_pd_proof(p);
      if (chk.accepted) {
        out << "accepted\n";
        return 0;
      }
      out << "rejected at step " << chk.step << ": "
          << pdproof::pd_reject_reason_name(chk.reason) << "\n";
      return 1;
    }

    if (*c_pddeduce) {
      auto p = pdproof::read_pd_proof_script(slurp_path(file_path));
      try {
        auto q = pdproof::pd_deduction_transform(
            pdproof::pd_expand_lemmas(p), pd::parse_pd(discharge_text));
        out << pdproof::write_pd_proof_script(q);
        return 0;
      } catch (const GeneralizationOnFreeVariable& e) {
        err << e.what() << "\n";
        return 1;
      }
    }

    if (*c_compile) {
      auto f = prop::parse(formula_text);
      if (!prop::is_negation_normal(f)) f = prop::reduce_nf(f);
      out << circuit::compile_circuit(f).render();
      return 0;
    }

    if (*c_sim) {
      circuit::Netlist n = use_half_adder
                               ? circuit::half_adder()
                               : circuit::parse_netlist(slurp_path(file_path));
      std::map<std::string, bool> in;
      for (const auto& bit : input_bits) {
        auto eq = bit.find('=');
        if (eq == std::string::npos) throw Error("--in wants NAME=0|1");
        in[bit.substr(0, eq)] = bit.substr(eq + 1) == "1";
      }
      auto outputs = circuit::simulate(n, in);
      for (const auto& [name, value] : outputs)
        out << name << " = " << (value ? 1 : 0) << "\n";
      return 0;
    }

    if (*c_cequiv) {
      bool eq = circuit::equivalent_netlists(
          circuit::parse_netlist(slurp_path(file_path)),
          circuit::parse_netlist(slurp_path(second_path)));
      out << (eq ? "equivalent" : "inequivalent") << "\n";
      return eq ? 0 : 1;
    }

    err << "no subcommand handled\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace logickit::cli
