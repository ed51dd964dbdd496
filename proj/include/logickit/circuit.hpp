#pragma once

#include <map>
#include <string>
#include <vector>

#include "logickit/formula.hpp"

namespace logickit::circuit {

enum class GateKind { NOT, AND, OR };

struct Gate {
  std::string id;
  GateKind kind;
  std::vector<std::string> inputs;  // refs to input ports or earlier gates
};

// Acyclic gate network over inverters and two-input and/or gates.
struct Netlist {
  std::vector<std::string> inputs;
  std::vector<Gate> gates;
  std::vector<std::pair<std::string, std::string>> outputs;  // name -> ref

  void validate() const;  // every ref resolves, arities right, no cycles
  std::string render() const;
};

Netlist parse_netlist(std::string_view text);

// One gate per connective; the formula may contain only ~, & and |.
Netlist compile_circuit(prop::Formula f);

// Topological evaluation. T means current flows.
std::map<std::string, bool> simulate(const Netlist& n,
                                     const std::map<std::string, bool>& inputs);

inline constexpr std::size_t kEquivalenceInputCap = 20;

// Exhaustive comparison over all input combinations; the nets must expose the
// same input ports.
bool equivalent_netlists(const Netlist& a, const Netlist& b);

// Adds one bit pair: S = (A|B) & ~(A&B), C = A&B.
Netlist half_adder();

}  // namespace logickit::circuit
