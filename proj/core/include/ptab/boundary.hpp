#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ptab/error.hpp"

namespace ptab {

enum class Step : std::uint8_t { South, West };

// Address of a cell by boundary labels: row i, column j. A cell (i,j)
// exists exactly when i is a row label, j is a column label and i < j.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);
std::ostream& operator<<(std::ostream& os, const Cell& cell);

// The south-east boundary path of a Ferrers shape, read from the top-right
// corner to the bottom-left and labelled 1..n along the way. A South step
// labels a row, a West step labels a column, so row and column labels
// partition {1..n}.
//
// Orientation conventions used throughout the library:
//   - labels grow from the top-right corner, so "above" means a smaller row
//     label and "to the left" means a larger column label;
//   - the first step is always South (a leading West step would create a
//     column with no cells);
//   - trailing South steps encode empty rows, which keeps the length equal
//     to n even when the shape has fewer nonempty rows.
//
// Cells are ordered canonically: column label ascending (east to west),
// then row label descending (south to north) within a column. This is also
// the fill order of the forward bijection.
class BoundaryWord {
 public:
  // Throws errc::invalid_boundary for an empty word or a leading West step.
  static BoundaryWord from_steps(std::vector<Step> steps);

  // Parses a string over {S, W}, e.g. "SSSSWWSW".
  static BoundaryWord from_string(std::string_view text);

  // Step i is West exactly when i is listed in `descents`. Throws
  // errc::invalid_descent_set if 1 is a descent or a label is outside
  // {1..n}; throws errc::invalid_boundary if n < 1.
  static BoundaryWord from_descents(int n, const std::vector<int>& descents);

  int length() const { return static_cast<int>(steps_.size()); }
  Step step(int label) const;
  bool is_row(int label) const { return step(label) == Step::South; }
  bool is_column(int label) const { return step(label) == Step::West; }

  const std::vector<int>& row_labels() const { return rows_; }       // ascending
  const std::vector<int>& column_labels() const { return cols_; }    // ascending
  int row_count() const { return static_cast<int>(rows_.size()); }
  int column_count() const { return static_cast<int>(cols_.size()); }

  // All cells in canonical order.
  const std::vector<Cell>& cells() const { return cells_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  bool has_cell(Cell cell) const;
  // Position of a cell in cells(); throws errc::out_of_range if absent.
  int cell_index(Cell cell) const;

  // Column labels of row i, descending (west to east, the order rows are
  // drawn and serialized). Throws errc::out_of_range if i is not a row.
  std::vector<int> row_columns(int row) const;
  int row_cell_count(int row) const;

  // Row labels of column j, descending (south to north). Throws
  // errc::no_such_column if j is not a column.
  std::vector<int> column_rows(int col) const;

  std::string to_string() const;

  friend bool operator==(const BoundaryWord& a, const BoundaryWord& b) {
    return a.steps_ == b.steps_;
  }

 private:
  explicit BoundaryWord(std::vector<Step> steps);

  std::vector<Step> steps_;
  std::vector<int> rows_;      // ascending
  std::vector<int> cols_;      // ascending
  std::vector<int> rows_leq_;  // rows_leq_[x] = |{ i in rows : i <= x }|
  std::vector<int> col_start_; // canonical index of column j's first cell, -1 for rows
  std::vector<Cell> cells_;
};

}  // namespace ptab
