#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ptab/boundary.hpp"
#include "ptab/error.hpp"

namespace ptab {

// One broken axiom. For ColumnAllZero only `column` is set. For
// ForbiddenPattern, (row, column) is the offending zero, `one_above` the row
// of the topmost one above it, `one_left` the column of the nearest one to
// its left (left = larger column label).
struct Violation {
  enum class Kind { ColumnAllZero, ForbiddenPattern };

  Kind kind{};
  int column = 0;
  int row = 0;
  int one_above = 0;
  int one_left = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(const Violation& violation);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

// Checks the two axioms -- every column has a one, and no zero has both a
// one above it and a one to its left -- over a complete filling.
//
// Violations are reported in a fixed order: ColumnAllZero by column label
// ascending, then ForbiddenPattern in canonical cell order. Witnesses are
// deterministic: the topmost one above and the nearest one to the left.
//
// `bits` is the filling in canonical cell order; a size mismatch throws
// errc::incomplete_filling. The map overload requires exactly the cells of
// the shape as keys and 0/1 values.
ValidationReport validate_filling(const BoundaryWord& shape, std::span<const std::uint8_t> bits);
ValidationReport validate_filling(const BoundaryWord& shape, const std::map<Cell, int>& filling);

class AxiomViolationError : public Error {
 public:
  explicit AxiomViolationError(ValidationReport report);

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// A boundary word plus a total {0,1} filling satisfying both axioms.
// Construction validates, so an instance is always a genuine permutation
// tableau. Immutable.
class PermutationTableau {
 public:
  // Throws AxiomViolationError (with the full report) if the filling
  // breaks an axiom; filling shape errors as in validate_filling.
  static PermutationTableau create(BoundaryWord shape, std::vector<std::uint8_t> bits);
  static PermutationTableau create(BoundaryWord shape, const std::map<Cell, int>& filling);

  const BoundaryWord& shape() const { return shape_; }

  // Number of boundary steps (the half perimeter of the shape).
  int length() const { return shape_.length(); }
  int row_count() const { return shape_.row_count(); }
  int column_count() const { return shape_.column_count(); }

  bool at(Cell cell) const { return bits_[shape_.cell_index(cell)] != 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const PermutationTableau& a, const PermutationTableau& b) {
    return a.shape_ == b.shape_ && a.bits_ == b.bits_;
  }

 private:
  PermutationTableau(BoundaryWord shape, std::vector<std::uint8_t> bits)
      : shape_(std::move(shape)), bits_(std::move(bits)) {}

  BoundaryWord shape_;
  std::vector<std::uint8_t> bits_;  // canonical cell order
};

}  // namespace ptab
