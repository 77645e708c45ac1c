#include "ptab/statistics.hpp"

#include <algorithm>
#include <set>

#include "ptab/error.hpp"

namespace ptab {

std::vector<int> descent_set(const Permutation& p) {
    std::vector<int> out;
    const auto& w = p.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) out.push_back(w[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cell> restricted_zeros(const PermutationTableau& t) {
    // A zero is restricted as soon as any one sits above it in its column;
    // scanning each column top-down, that means every zero past the first one.
    std::set<Cell> restricted;
    for (int j : t.shape().column_labels()) {
        bool seen_one = false;
        auto rows = t.shape().column_rows(j);    // descending row labels
        std::reverse(rows.begin(), rows.end());  // now top-down
        for (int i : rows) {
            if (t.at({i, j})) {
                seen_one = true;
            } else if (seen_one) {
                restricted.insert({i, j});
            }
        }
    }
    std::vector<Cell> out;
    for (const Cell& c : t.shape().cells()) {
        if (restricted.count(c)) out.push_back(c);
    }
    return out;
}

std::vector<int> unrestricted_rows(const PermutationTableau& t) {
    std::set<int> restricted;
    for (const Cell& c : restricted_zeros(t)) restricted.insert(c.row);
    std::vector<int> out;
    for (int i : t.shape().row_labels()) {
        if (!restricted.count(i)) out.push_back(i);
    }
    return out;
}

std::map<int, Cell> rightmost_restricted_zeros(const PermutationTableau& t) {
    std::map<int, Cell> out;
    // Canonical order visits columns in ascending label order, so the first
    // restricted zero seen for a row is the one with the smallest column
    // label — i.e. the rightmost one.
    for (const Cell& c : restricted_zeros(t)) {
        out.emplace(c.row, c);  // keeps the first entry per row
    }
    return out;
}

int topmost_one(const PermutationTableau& t, int col) {
    auto rows = t.shape().column_rows(col);  // throws no_such_column
    std::reverse(rows.begin(), rows.end());  // top-down
    for (int i : rows) {
        if (t.at({i, col})) return i;
    }
    // Unreachable on a valid tableau: every column has a one.
    throw Error(errc::internal_invariant_violation,
                "column " + std::to_string(col) + " has no one");
}

}  // namespace ptab
