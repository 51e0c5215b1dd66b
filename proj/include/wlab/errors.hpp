#ifndef WLAB_ERRORS_HPP
#define WLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error("dimension: " + msg) {}
};

struct AlphabetError : Error {
  explicit AlphabetError(const std::string& msg) : Error("alphabet: " + msg) {}
};

struct EmptyValueError : Error {
  explicit EmptyValueError(const std::string& msg) : Error("empty value: " + msg) {}
};

struct TopError : Error {
  explicit TopError(const std::string& msg) : Error("top: " + msg) {}
};

struct WitnessError : Error {
  explicit WitnessError(const std::string& msg) : Error("witness: " + msg) {}
};

struct ClassError : Error {
  explicit ClassError(const std::string& msg) : Error("class: " + msg) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error("precondition: " + msg) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error("budget: " + msg) {}
};

struct HypothesisError : Error {
  explicit HypothesisError(const std::string& msg) : Error("hypothesis: " + msg) {}
};

struct NotAPoset : Error {
  explicit NotAPoset(const std::string& msg) : Error("not a poset: " + msg) {}
};

struct NotALattice : Error {
  explicit NotALattice(const std::string& msg) : Error("not a lattice: " + msg) {}
};

struct NotBounded : Error {
  explicit NotBounded(const std::string& msg) : Error("not bounded: " + msg) {}
};

struct NotClosure : Error {
  explicit NotClosure(const std::string& msg) : Error("not a closure: " + msg) {}
};

struct MissingStructure : Error {
  explicit MissingStructure(const std::string& msg) : Error("missing structure: " + msg) {}
};

struct FamilyNotClosed : Error {
  explicit FamilyNotClosed(const std::string& msg) : Error("family not closed: " + msg) {}
};

struct UnassignedVariable : Error {
  explicit UnassignedVariable(const std::string& msg) : Error("unassigned variable: " + msg) {}
};

// Position is the 1-based character index where parsing failed.
struct ParseError : Error {
  long long position;
  ParseError(const std::string& msg, long long pos)
      : Error("parse: " + msg + " at " + std::to_string(pos)), position(pos) {}
};

}  // namespace wlab

#endif
