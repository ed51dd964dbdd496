#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logickit {

// Base class for all errors raised by the library. Specific conditions get
// their own type so callers (and the CLI) can map them to exit codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : Error("parse error at " + std::to_string(pos) + ": " + msg),
        position(pos) {}
};

struct UnbalancedParentheses : Error {
  explicit UnbalancedParentheses(std::size_t pos)
      : Error("unbalanced parentheses at offset " + std::to_string(pos)) {}
};

struct MissingImage : Error {
  explicit MissingImage(const std::string& atom)
      : Error("substitution has no image for atom " + atom) {}
};

struct BadPosition : Error {
  explicit BadPosition(const std::string& msg) : Error("bad position: " + msg) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error("cap exceeded: " + msg) {}
};

struct DuplicateAtom : Error {
  explicit DuplicateAtom(const std::string& atom)
      : Error("duplicate atom " + atom) {}
};

struct UncoveredAtom : Error {
  explicit UncoveredAtom(const std::string& atom)
      : Error("assignment does not cover atom " + atom) {}
};

struct NotInNormalForm : Error {
  explicit NotInNormalForm(const std::string& msg)
      : Error("formula not in normal form: " + msg) {}
};

struct IsContradiction : Error {
  explicit IsContradiction(const std::string& msg)
      : Error("formula is a contradiction: " + msg) {}
};

struct InputUnsatisfiable : Error {
  InputUnsatisfiable() : Error("input premise set is unsatisfiable") {}
};

struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& msg) : Error("arity mismatch: " + msg) {}
};

struct QuantifierOverConstant : Error {
  explicit QuantifierOverConstant(const std::string& name)
      : Error("quantifier binds constant " + name) {}
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& msg) : Error("schema error: " + msg) {}
};

struct DomainViolation : Error {
  explicit DomainViolation(const std::string& msg)
      : Error("domain violation: " + msg) {}
};

struct UnknownSymbol : Error {
  explicit UnknownSymbol(const std::string& name)
      : Error("symbol not interpreted by structure: " + name) {}
};

struct UnsupportedConnective : Error {
  explicit UnsupportedConnective(const std::string& msg)
      : Error("unsupported connective: " + msg) {}
};

struct PortMismatch : Error {
  explicit PortMismatch(const std::string& msg) : Error("port mismatch: " + msg) {}
};

struct MissingInput : Error {
  explicit MissingInput(const std::string& name)
      : Error("no value supplied for input " + name) {}
};

struct ArityError : Error {
  explicit ArityError(const std::string& msg) : Error(msg) {}
};

struct NotATautology : Error {
  explicit NotATautology(const std::string& msg)
      : Error("not a tautology: " + msg) {}
};

struct NotInLPrime : Error {
  explicit NotInLPrime(const std::string& msg)
      : Error("formula uses connectives outside {~, ->}: " + msg) {}
};

struct UnknownLemma : Error {
  explicit UnknownLemma(const std::string& name)
      : Error("unknown lemma " + name) {}
};

struct InputRejected : Error {
  explicit InputRejected(const std::string& msg)
      : Error("input proof rejected: " + msg) {}
};

struct NotInUniverse : Error {
  explicit NotInUniverse(const std::string& msg)
      : Error("formula not in universe: " + msg) {}
};

struct GeneralizationOnFreeVariable : Error {
  int step;
  std::string variable;
  GeneralizationOnFreeVariable(int s, const std::string& v)
      : Error("step " + std::to_string(s) +
              " generalizes variable " + v + " free in the discharged premise"),
        step(s), variable(v) {}
};

}  // namespace logickit
