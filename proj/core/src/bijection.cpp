#include "ptab/bijection.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ptab/error.hpp"
#include "ptab/statistics.hpp"

namespace ptab {

std::string to_string(FillCase c) {
    switch (c) {
        case FillCase::NotAdjacent: return "NotAdjacent";
        case FillCase::RowFill: return "RowFill";
        case FillCase::ColumnFill: return "ColumnFill";
    }
    return "?";
}

std::optional<Cell> next_unfilled_cell(const BoundaryWord& shape,
                                       const std::set<Cell>& filled) {
    for (const Cell& c : shape.cells()) {
        if (!filled.count(c)) return c;
    }
    return std::nullopt;
}

namespace {

// Shared bookkeeping for one forward run.
struct Fill {
    std::map<Cell, int> values;
    std::set<Cell> done;
    FillTrace trace;

    void set(Cell cell, bool value, FillCase fc, std::optional<int> deleted,
             const PartialWord& word) {
        values[cell] = value ? 1 : 0;
        done.insert(cell);
        trace.push_back({cell, value, fc, deleted, word});
    }
};

}  // namespace

ForwardResult perm_to_tableau(const Permutation& p) {
    BoundaryWord shape = BoundaryWord::from_descents(p.size(), descent_set(p));
    PartialWord word(p.word());
    Fill fill;

    while (auto next = next_unfilled_cell(shape, fill.done)) {
        const auto [i, j] = *next;
        auto pi = word.position_of(i);
        auto pj = word.position_of(j);
        if (!pi || !pj) {
            throw Error(errc::internal_invariant_violation,
                        "labels of unfilled cell " + to_string(*next) +
                            " not both in working word " + to_string(word));
        }

        if (*pi + 1 == *pj) {
            // Row label right before column label: the whole rest of row i
            // is zeros and i leaves the word. Cells east to west, so the
            // triggering cell comes first.
            word.erase(i);
            auto cols = shape.row_columns(i);
            std::reverse(cols.begin(), cols.end());  // ascending labels
            for (int jj : cols) {
                Cell cell{i, jj};
                if (fill.done.count(cell)) continue;
                fill.set(cell, false, FillCase::RowFill, i, word);
            }
        } else if (*pj + 1 == *pi) {
            // Column label right before row label: a one at (i,j), zeros in
            // the still-unfilled cells of column j, and j leaves the word.
            // The fill order guarantees those cells all lie above (i,j);
            // trap rather than trust it.
            word.erase(j);
            fill.set({i, j}, true, FillCase::ColumnFill, j, word);
            for (int ii : shape.column_rows(j)) {  // descending labels
                if (ii == i) continue;
                Cell cell{ii, j};
                if (fill.done.count(cell)) continue;
                if (ii > i) {
                    throw Error(errc::internal_invariant_violation,
                                "unfilled cell " + to_string(cell) +
                                    " below a column fill at " + to_string(*next));
                }
                fill.set(cell, false, FillCase::ColumnFill, j, word);
            }
        } else {
            fill.set({i, j}, true, FillCase::NotAdjacent, std::nullopt, word);
        }
    }

    PermutationTableau tableau = PermutationTableau::create(shape, fill.values);
    if (word.values() != unrestricted_rows(tableau)) {
        throw Error(errc::internal_invariant_violation,
                    "leftover word " + to_string(word) +
                        " is not the unrestricted rows of the result");
    }
    return {std::move(tableau), std::move(fill.trace), std::move(word)};
}

InverseResult tableau_to_perm_traced(const PermutationTableau& t) {
    InverseTrace trace;
    trace.initial_word = PartialWord(unrestricted_rows(t));
    PartialWord word = trace.initial_word;

    const std::map<int, Cell> rrz = rightmost_restricted_zeros(t);
    const auto& cols = t.shape().column_labels();
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        const int j = *it;
        // The column label re-enters just before the row of its topmost one.
        // On a valid tableau that row is always already in the word: every
        // restricted zero sits west of the ones in its row, so a row whose
        // topmost-one column is j cannot re-enter later than j does.
        const int r = topmost_one(t, j);
        word.insert_before(r, j);
        // Then the rows whose rightmost restricted zero is in this column,
        // ascending, as a block just before j.
        std::vector<int> rows;
        for (const auto& [row, cell] : rrz) {
            if (cell.col == j) rows.push_back(row);
        }
        if (!rows.empty()) word.insert_before(j, std::span<const int>(rows));
        trace.steps.push_back({j, r, std::move(rows), word});
    }

    if (word.size() != t.length()) {
        throw Error(errc::internal_invariant_violation,
                    "inverse map produced " + std::to_string(word.size()) +
                        " labels for a tableau of length " +
                        std::to_string(t.length()));
    }
    Permutation perm = Permutation::from_word(word.values());
    if (descent_set(perm) != t.shape().column_labels()) {
        throw Error(errc::internal_invariant_violation,
                    "descents of " + to_string(word) +
                        " do not match the column labels");
    }
    return {std::move(perm), std::move(trace)};
}

Permutation tableau_to_perm(const PermutationTableau& t) {
    return tableau_to_perm_traced(t).permutation;
}

}  // namespace ptab
