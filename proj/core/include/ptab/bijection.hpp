#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ptab/boundary.hpp"
#include "ptab/permutation.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

// Which rule filled a cell (i,j), decided by how the row label i and the
// column label j sit in the current working word:
//   NotAdjacent — neither is immediately before the other; write a one.
//   RowFill     — i immediately precedes j; zero out the rest of row i
//                 and delete i from the word.
//   ColumnFill  — j immediately precedes i; write a one at (i,j), zero the
//                 unfilled cells above it, and delete j from the word.
enum class FillCase { NotAdjacent, RowFill, ColumnFill };

std::string to_string(FillCase c);

// One cell decided during the forward map. Bulk rules decide several cells
// at once; each gets its own event, and all events of one step share the
// same case, deleted label, and word_after (the word after the deletion).
struct FillEvent {
    Cell cell;
    bool value;
    FillCase fill_case;
    std::optional<int> deleted;  // label removed from the word, if any
    PartialWord word_after;      // working word once this step completed

    bool operator==(const FillEvent&) const = default;
};

using FillTrace = std::vector<FillEvent>;

// The next cell to fill: eastmost unfilled column, southmost unfilled cell
// in it — i.e. the first unfilled cell in canonical order. Empty when the
// filling is complete.
std::optional<Cell> next_unfilled_cell(const BoundaryWord& shape,
                                       const std::set<Cell>& filled);

struct ForwardResult {
    PermutationTableau tableau;
    FillTrace trace;
    PartialWord final_word;  // always the unrestricted rows, ascending
};

// Permutation -> tableau. The shape's west steps are the descents of p;
// the filling is driven by the three-case rule above until every cell is
// decided. Total and injective; composed with tableau_to_perm it is the
// identity in both directions.
ForwardResult perm_to_tableau(const Permutation& p);

// One column's worth of the inverse map: the column label goes back into
// the word just before the row of its topmost one, then the rows whose
// rightmost restricted zero lives in this column go in just before it.
struct InsertionStep {
    int column;
    int before_row;                  // row label the column was inserted before
    std::vector<int> restricted_rows;  // ascending; empty if none re-entered
    PartialWord word_after;

    bool operator==(const InsertionStep&) const = default;
};

struct InverseTrace {
    PartialWord initial_word;  // unrestricted rows, ascending
    std::vector<InsertionStep> steps;
};

struct InverseResult {
    Permutation permutation;
    InverseTrace trace;
};

// Tableau -> permutation. Starts from the unrestricted rows in ascending
// order and re-inserts column labels from largest to smallest.
Permutation tableau_to_perm(const PermutationTableau& t);
InverseResult tableau_to_perm_traced(const PermutationTableau& t);

}  // namespace ptab
