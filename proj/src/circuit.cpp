#include "logickit/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace logickit::circuit {

void Netlist::validate() const {
  std::unordered_set<std::string> defined(inputs.begin(), inputs.end());
  if (defined.size() != inputs.size())
    throw Error("duplicate input port");
  for (const auto& g : gates) {
    std::size_t want = g.kind == GateKind::NOT ? 1 : 2;
    if (g.inputs.size() != want)
      throw ArityError("gate " + g.id + " expects " + std::to_string(want) +
                       " inputs");
    for (const auto& ref : g.inputs)
      if (!defined.count(ref))
        throw Error("gate " + g.id + " references undefined '" + ref + "'");
    if (!defined.insert(g.id).second)
      throw Error("duplicate definition of " + g.id);
  }
  for (const auto& [name, ref] : outputs)
    if (!defined.count(ref))
      throw Error("output " + name + " references undefined '" + ref + "'");
}

std::string Netlist::render() const {
  std::string out;
  for (const auto& i : inputs) out += "in " + i + "\n";
  for (const auto& g : gates) {
    out += "gate " + g.id + " = ";
    switch (g.kind) {
      case GateKind::NOT: out += "NOT "; break;
      case GateKind::AND: out += "AND "; break;
      case GateKind::OR: out += "OR "; break;
    }
    for (std::size_t i = 0; i < g.inputs.size(); ++i) {
      if (i) out += ", ";
      out += g.inputs[i];
    }
    out += "\n";
  }
  for (const auto& [name, ref] : outputs) out += "out " + name + " = " + ref + "\n";
  return out;
}

Netlist parse_netlist(std::string_view text) {
  Netlist n;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "in") {
      std::string name;
      if (!(ls >> name)) throw ParseError(lineno, "expected input name");
      n.inputs.push_back(name);
    } else if (word == "gate") {
      Gate g;
      std::string eq, kind;
      if (!(ls >> g.id >> eq >> kind) || eq != "=")
        throw ParseError(lineno, "expected 'gate <id> = KIND refs'");
      if (kind == "NOT") g.kind = GateKind::NOT;
      else if (kind == "AND") g.kind = GateKind::AND;
      else if (kind == "OR") g.kind = GateKind::OR;
      else throw ParseError(lineno, "unknown gate kind " + kind);
      std::string rest;
      std::getline(ls, rest);
      std::string ref;
      for (char c : rest) {
        if (c == ',' || c == ' ' || c == '\t') {
          if (!ref.empty()) g.inputs.push_back(ref);
          ref.clear();
        } else {
          ref += c;
        }
      }
      if (!ref.empty()) g.inputs.push_back(ref);
      n.gates.push_back(std::move(g));
    } else if (word == "out") {
      std::string name, eq, ref;
      if (!(ls >> name >> eq >> ref) || eq != "=")
        throw ParseError(lineno, "expected 'out <name> = <ref>'");
      n.outputs.emplace_back(name, ref);
    } else {
      throw ParseError(lineno, "unknown directive " + word);
    }
  }
  n.validate();
  return n;
}

Netlist compile_circuit(prop::Formula f) {
  using prop::Conn;
  Netlist n;
  n.inputs = f.atoms();
  int counter = 0;
  std::unordered_map<const prop::detail::Node*, std::string> refs;
  std::function<std::string(prop::Formula)> emit =
      [&](prop::Formula g) -> std::string {
    auto it = refs.find(g.raw());
    if (it != refs.end()) return it->second;
    std::string ref;
    if (g.is_atom()) {
      ref = g.atom_name();
    } else if (g.conn() == Conn::Not) {
      std::string c = emit(g.child());
      ref = "g" + std::to_string(++counter);
      n.gates.push_back(Gate{ref, GateKind::NOT, {c}});
    } else if (g.conn() == Conn::And || g.conn() == Conn::Or) {
      std::string l = emit(g.left());
      std::string r = emit(g.right());
      ref = "g" + std::to_string(++counter);
      n.gates.push_back(Gate{
          ref, g.conn() == Conn::And ? GateKind::AND : GateKind::OR, {l, r}});
    } else {
      throw UnsupportedConnective(prop::print_atomic(g));
    }
    refs.emplace(g.raw(), ref);
    return ref;
  };
  std::string top = emit(f);
  n.outputs.emplace_back("OUT", top);
  n.validate();
  return n;
}

std::map<std::string, bool> simulate(const Netlist& n,
                                     const std::map<std::string, bool>& inputs) {
  n.validate();
  std::unordered_map<std::string, bool> values;
  for (const auto& port : n.inputs) {
    auto it = inputs.find(port);
    if (it == inputs.end()) throw MissingInput(port);
    values[port] = it->second;
  }
  for (const auto& g : n.gates) {
    switch (g.kind) {
      case GateKind::NOT:
        values[g.id] = !values.at(g.inputs[0]);
        break;
      case GateKind::AND:
        values[g.id] = values.at(g.inputs[0]) && values.at(g.inputs[1]);
        break;
      case GateKind::OR:
        values[g.id] = values.at(g.inputs[0]) || values.at(g.inputs[1]);
        break;
    }
  }
  std::map<std::string, bool> out;
  for (const auto& [name, ref] : n.outputs) out[name] = values.at(ref);
  return out;
}

bool equivalent_netlists(const Netlist& a, const Netlist& b) {
  std::set<std::string> pa(a.inputs.begin(), a.inputs.end());
  std::set<std::string> pb(b.inputs.begin(), b.inputs.end());
  if (pa != pb) throw PortMismatch("input port sets differ");
  if (a.outputs.size() != b.outputs.size()) throw PortMismatch("output counts differ");
  if (pa.size() > kEquivalenceInputCap)
    throw CapExceeded("too many inputs for exhaustive comparison");
  std::vector<std::string> ports(pa.begin(), pa.end());
  for (std::uint64_t mask = 0; mask < (1ull << ports.size()); ++mask) {
    std::map<std::string, bool> in;
    for (std::size_t i = 0; i < ports.size(); ++i)
      in[ports[i]] = (mask >> i) & 1;
    if (simulate(a, in) != simulate(b, in)) return false;
  }
  return true;
}

Netlist half_adder() {
  Netlist n;
  n.inputs = {"A", "B"};
  n.gates = {
      Gate{"g1", GateKind::OR, {"A", "B"}},
      Gate{"g2", GateKind::AND, {"A", "B"}},
      Gate{"g3", GateKind::NOT, {"g2"}},
      Gate{"g4", GateKind::AND, {"g1", "g3"}},
  };
  n.outputs = {{"S", "g4"}, {"C", "g2"}};
  return n;
}

}  // namespace logickit::circuit
