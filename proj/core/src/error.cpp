#include "ptab/error.hpp"

namespace ptab {

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_value: return "DuplicateValue";
    case errc::value_out_of_range: return "ValueOutOfRange";
    case errc::invalid_boundary: return "InvalidBoundary";
    case errc::invalid_descent_set: return "InvalidDescentSet";
    case errc::incomplete_filling: return "IncompleteFilling";
    case errc::no_such_column: return "NoSuchColumn";
    case errc::limit_exceeded: return "LimitExceeded";
    case errc::out_of_range: return "OutOfRange";
    case errc::overflow: return "Overflow";
    case errc::syntax_error: return "SyntaxError";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::axiom_violation: return "AxiomViolation";
    case errc::insertion_target_missing: return "InsertionTargetMissing";
    case errc::internal_invariant_violation: return "InternalInvariantViolation";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace ptab
