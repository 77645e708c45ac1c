#include "ptab/tableau.hpp"

namespace ptab {

std::string to_string(const Violation& violation) {
  if (violation.kind == Violation::Kind::ColumnAllZero) {
    return "ColumnAllZero(" + std::to_string(violation.column) + ")";
  }
  return "ForbiddenPattern((" + std::to_string(violation.row) + "," +
         std::to_string(violation.column) + "): one above in row " +
         std::to_string(violation.one_above) + ", one left in column " +
         std::to_string(violation.one_left) + ")";
}

ValidationReport validate_filling(const BoundaryWord& shape, std::span<const std::uint8_t> bits) {
  const auto& cells = shape.cells();
  if (bits.size() != cells.size()) {
    throw Error(errc::incomplete_filling,
                "filling has " + std::to_string(bits.size()) + " entries, shape has " +
                    std::to_string(cells.size()) + " cells");
  }

  ValidationReport report;

  // above[c]: topmost one strictly above cell c in its column, 0 if none.
  std::vector<int> above(cells.size(), 0);
  for (int j : shape.column_labels()) {
    int topmost = 0;
    auto rows = shape.column_rows(j);  // descending; scan in reverse, top down
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      const int c = shape.cell_index(Cell{*it, j});
      if (bits[c]) {
        if (topmost == 0) topmost = *it;
      } else {
        above[c] = topmost;
      }
    }
    if (topmost == 0) {
      report.violations.push_back(Violation{Violation::Kind::ColumnAllZero, j, 0, 0, 0});
    }
  }

  // left[c]: nearest one to the left of cell c in its row, 0 if none.
  std::vector<int> left(cells.size(), 0);
  for (int i : shape.row_labels()) {
    int nearest = 0;
    for (int j : shape.row_columns(i)) {  // descending labels, west to east
      const int c = shape.cell_index(Cell{i, j});
      if (bits[c]) {
        nearest = j;
      } else {
        left[c] = nearest;
      }
    }
  }

  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!bits[c] && above[c] && left[c]) {
      report.violations.push_back(Violation{Violation::Kind::ForbiddenPattern, cells[c].col,
                                            cells[c].row, above[c], left[c]});
    }
  }
  return report;
}

namespace {

std::vector<std::uint8_t> bits_from_map(const BoundaryWord& shape,
                                        const std::map<Cell, int>& filling) {
  for (const auto& [cell, value] : filling) {
    if (!shape.has_cell(cell)) {
      throw Error(errc::out_of_range, "filling mentions cell " + to_string(cell) +
                                          " which is not in the shape");
    }
    if (value != 0 && value != 1) {
      throw Error(errc::out_of_range, "cell " + to_string(cell) + " has value " +
                                          std::to_string(value) + ", expected 0 or 1");
    }
  }
  std::vector<std::uint8_t> bits(shape.cell_count());
  for (const Cell& cell : shape.cells()) {
    auto it = filling.find(cell);
    if (it == filling.end()) {
      throw Error(errc::incomplete_filling, "cell " + to_string(cell) + " has no value");
    }
    bits[shape.cell_index(cell)] = static_cast<std::uint8_t>(it->second);
  }
  return bits;
}

std::string report_message(const ValidationReport& report) {
  std::string msg = "tableau breaks an axiom: " + to_string(report.violations.front());
  if (report.violations.size() > 1) {
    msg += " (and " + std::to_string(report.violations.size() - 1) + " more)";
  }
  return msg;
}

}  // namespace

AxiomViolationError::AxiomViolationError(ValidationReport report)
    : Error(errc::axiom_violation, report_message(report)), report_(std::move(report)) {}

ValidationReport validate_filling(const BoundaryWord& shape, const std::map<Cell, int>& filling) {
  return validate_filling(shape, bits_from_map(shape, filling));
}

PermutationTableau PermutationTableau::create(BoundaryWord shape, std::vector<std::uint8_t> bits) {
  for (auto& b : bits) b = (b != 0) ? 1 : 0;
  ValidationReport report = validate_filling(shape, bits);
  if (!report.ok()) throw AxiomViolationError(std::move(report));
  return PermutationTableau(std::move(shape), std::move(bits));
}

PermutationTableau PermutationTableau::create(BoundaryWord shape,
                                              const std::map<Cell, int>& filling) {
  std::vector<std::uint8_t> bits = bits_from_map(shape, filling);
  return create(std::move(shape), std::move(bits));
}

}  // namespace ptab
