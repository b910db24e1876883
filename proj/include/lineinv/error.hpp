#pragma once

#include <stdexcept>
#include <string>

namespace lineinv {

/// Every failure mode the library reports, one code per contract violation.
enum class Errc {
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  MissingEdge,
  DegreeViolation,
  AdjacentEndpoints,
  MalformedHeader,
  NotALineGraph,
  EmptyGraph,
  NoConvergence,
  Disconnected,
  SmithGraphExcluded,
  BudgetExhausted,
  TimeLimit,
  NotEnoughNonEdges,
  EmptyGadget,
  ParameterError,
  RejectionBudgetExhausted,
  UnknownCase,
  InconsistentInputs,
  IoFailure,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lineinv
