#pragma once

#include <string>
#include <string_view>

#include "ptab/permutation.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

// The tableau document format, byte-exact:
//
//   permutation-tableau v1
//   steps SSSSWWSW
//   row 1 101
//   row 2 001
//   row 3 111
//   row 4 011
//   row 7 1
//   end
//
// One `row` line per row label, ascending. Bits run west to east, i.e. by
// decreasing column label, which left-aligns the rows exactly as drawn
// (row i holds the columns j > i, so each row is a prefix of the one
// above). A row with no cells prints `-` in place of bits. Single spaces,
// trailing newline after `end`, no tabs.
std::string serialize_tableau(const PermutationTableau& t);

// Strict inverse of serialize_tableau. Throws errc::syntax_error for a bad
// header/version, malformed lines, or trailing garbage; errc::shape_mismatch
// when the row lines do not match the steps line (wrong labels, wrong bit
// counts, `-` misuse); AxiomViolationError when the document is well-formed
// but the filling breaks an axiom.
PermutationTableau parse_tableau(std::string_view text);

// ASCII grid with boundary labels, one header line of column labels in
// decreasing order, then one line per row ascending:
//
//   8 6 5
//   1 0 1 | 1
//   0 0 1 | 2
//   1 1 1 | 3
//   1 1 0 | 4
//   1 | 7
//
// Empty rows render as `| i` alone. Always row_count + 1 lines.
std::string render_tableau(const PermutationTableau& t);

// Comma-separated one-line notation; surrounding parentheses optional on
// input. Throws errc::syntax_error for malformed text, plus whatever
// Permutation::from_word raises for bad values.
Permutation parse_permutation(std::string_view text);

// Canonical form, e.g. "(2,4,8,5,1,6,3,7)".
std::string format_permutation(const Permutation& p);

}  // namespace ptab
