#include "ptab/boundary.hpp"

#include <algorithm>
#include <ostream>

namespace ptab {

std::string to_string(const Cell& cell) {
  return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

std::ostream& operator<<(std::ostream& os, const Cell& cell) { return os << to_string(cell); }

BoundaryWord::BoundaryWord(std::vector<Step> steps) : steps_(std::move(steps)) {
  const int n = static_cast<int>(steps_.size());
  rows_leq_.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const bool is_south = steps_[i - 1] == Step::South;
    rows_leq_[i] = rows_leq_[i - 1] + (is_south ? 1 : 0);
    (is_south ? rows_ : cols_).push_back(i);
  }
  col_start_.assign(n + 1, -1);
  for (int j : cols_) {
    col_start_[j] = static_cast<int>(cells_.size());
    const int below = rows_leq_[j - 1];  // rows above-left of step j, i.e. labels < j
    for (int k = below - 1; k >= 0; --k) cells_.push_back(Cell{rows_[k], j});
  }
}

BoundaryWord BoundaryWord::from_steps(std::vector<Step> steps) {
  if (steps.empty()) {
    throw Error(errc::invalid_boundary, "boundary word must have at least one step");
  }
  if (steps.front() != Step::South) {
    throw Error(errc::invalid_boundary,
                "first boundary step must be South; a leading West step would give a column "
                "with no cells");
  }
  return BoundaryWord(std::move(steps));
}

BoundaryWord BoundaryWord::from_string(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'S') {
      steps.push_back(Step::South);
    } else if (c == 'W') {
      steps.push_back(Step::West);
    } else {
      throw Error(errc::invalid_boundary,
                  std::string("invalid step character '") + c + "', expected S or W");
    }
  }
  return from_steps(std::move(steps));
}

BoundaryWord BoundaryWord::from_descents(int n, const std::vector<int>& descents) {
  if (n < 1) throw Error(errc::invalid_boundary, "length must be at least 1");
  std::vector<Step> steps(n, Step::South);
  for (int d : descents) {
    if (d == 1) {
      throw Error(errc::invalid_descent_set, "1 can never be a descent");
    }
    if (d < 1 || d > n) {
      throw Error(errc::invalid_descent_set,
                  "descent " + std::to_string(d) + " is outside {1.." + std::to_string(n) + "}");
    }
    steps[d - 1] = Step::West;
  }
  return BoundaryWord(std::move(steps));
}

Step BoundaryWord::step(int label) const {
  if (label < 1 || label > length()) {
    throw Error(errc::out_of_range,
                "label " + std::to_string(label) + " is outside 1.." + std::to_string(length()));
  }
  return steps_[label - 1];
}

bool BoundaryWord::has_cell(Cell cell) const {
  return cell.row >= 1 && cell.col <= length() && cell.row < cell.col && is_row(cell.row) &&
         is_column(cell.col);
}

int BoundaryWord::cell_index(Cell cell) const {
  if (!has_cell(cell)) {
    throw Error(errc::out_of_range, "no cell " + ptab::to_string(cell) + " in this shape");
  }
  return col_start_[cell.col] + (rows_leq_[cell.col - 1] - rows_leq_[cell.row]);
}

std::vector<int> BoundaryWord::row_columns(int row) const {
  if (!is_row(row)) {
    throw Error(errc::out_of_range, "label " + std::to_string(row) + " is not a row");
  }
  std::vector<int> out;
  for (auto it = cols_.rbegin(); it != cols_.rend(); ++it) {
    if (*it > row) out.push_back(*it);
  }
  return out;
}

int BoundaryWord::row_cell_count(int row) const {
  if (!is_row(row)) {
    throw Error(errc::out_of_range, "label " + std::to_string(row) + " is not a row");
  }
  return static_cast<int>(cols_.end() - std::upper_bound(cols_.begin(), cols_.end(), row));
}

std::vector<int> BoundaryWord::column_rows(int col) const {
  if (col < 1 || col > length() || !is_column(col)) {
    throw Error(errc::no_such_column, "label " + std::to_string(col) + " is not a column");
  }
  std::vector<int> out;
  for (int k = rows_leq_[col - 1] - 1; k >= 0; --k) out.push_back(rows_[k]);
  return out;
}

std::string BoundaryWord::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += (s == Step::South ? 'S' : 'W');
  return out;
}

}  // namespace ptab
