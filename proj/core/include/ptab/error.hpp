#pragma once

#include <stdexcept>
#include <string>

namespace ptab {

// Every failure mode in the library, including the two internal "bug trap"
// codes that should never fire on valid inputs.
enum class errc {
  duplicate_value,
  value_out_of_range,
  invalid_boundary,
  invalid_descent_set,
  incomplete_filling,
  no_such_column,
  limit_exceeded,
  out_of_range,
  overflow,
  syntax_error,
  shape_mismatch,
  axiom_violation,
  insertion_target_missing,
  internal_invariant_violation,
};

// Stable CamelCase name, e.g. "DuplicateValue".
const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace ptab
