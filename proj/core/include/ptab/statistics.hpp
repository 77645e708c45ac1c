#pragma once

#include <map>
#include <vector>

#include "ptab/permutation.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

// The descents of a permutation, as VALUES: every entry that sits
// immediately before a smaller entry in the one-line word. Ascending.
// (Most libraries return descent positions; this is the value-based set,
// which is what the column labels of a tableau correspond to.)
std::vector<int> descent_set(const Permutation& p);

// Zeros with a one above them in the same column, in canonical cell order.
std::vector<Cell> restricted_zeros(const PermutationTableau& t);

// Row labels with no restricted zero, ascending. Row 1 is always here.
std::vector<int> unrestricted_rows(const PermutationTableau& t);

// For each restricted row, its restricted zero furthest to the right
// (right = east = smallest column label).
std::map<int, Cell> rightmost_restricted_zeros(const PermutationTableau& t);

// Smallest row label with a one in column j; total on columns since every
// column has a one. Throws errc::no_such_column if j is not a column.
int topmost_one(const PermutationTableau& t, int col);

}  // namespace ptab
