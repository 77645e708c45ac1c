#pragma once

// The two worked examples used as golden fixtures throughout the tests.
// Fillings are transcribed cell by cell, NOT produced by the forward map,
// so the bijection tests compare against independent data.

#include <map>
#include <string>

#include "ptab/boundary.hpp"
#include "ptab/permutation.hpp"
#include "ptab/tableau.hpp"

namespace fixtures {

inline ptab::Permutation figure1_perm() {
    return ptab::Permutation::from_word({2, 4, 8, 5, 1, 6, 3, 7});
}

inline ptab::Permutation figure2_perm() {
    return ptab::Permutation::from_word({8, 5, 4, 7, 2, 3, 1, 6});
}

// Shape SSSSWWSW: rows 1,2,3,4,7 and columns 5,6,8. Returned by reference
// so callers can hang on to .shape() or .bits() without dangling.
inline const ptab::PermutationTableau& figure1() {
    static const ptab::PermutationTableau tableau = ptab::PermutationTableau::create(
        ptab::BoundaryWord::from_string("SSSSWWSW"),
        std::map<ptab::Cell, int>{
            {{1, 5}, 1}, {{2, 5}, 1}, {{3, 5}, 1}, {{4, 5}, 1},
            {{1, 6}, 0}, {{2, 6}, 0}, {{3, 6}, 1}, {{4, 6}, 1},
            {{1, 8}, 1}, {{2, 8}, 0}, {{3, 8}, 1}, {{4, 8}, 0}, {{7, 8}, 1},
        });
    return tableau;
}

// Shape SSWSWSWW: rows 1,2,4,6 and columns 3,5,7,8.
inline const ptab::PermutationTableau& figure2() {
    static const ptab::PermutationTableau tableau = ptab::PermutationTableau::create(
        ptab::BoundaryWord::from_string("SSWSWSWW"),
        std::map<ptab::Cell, int>{
            {{1, 3}, 1}, {{2, 3}, 0},
            {{1, 5}, 0}, {{2, 5}, 0}, {{4, 5}, 1},
            {{1, 7}, 1}, {{2, 7}, 0}, {{4, 7}, 0}, {{6, 7}, 1},
            {{1, 8}, 1}, {{2, 8}, 0}, {{4, 8}, 0}, {{6, 8}, 1},
        });
    return tableau;
}

inline std::string figure1_document() {
    return "permutation-tableau v1\n"
           "steps SSSSWWSW\n"
           "row 1 101\n"
           "row 2 001\n"
           "row 3 111\n"
           "row 4 011\n"
           "row 7 1\n"
           "end\n";
}

inline std::string figure2_document() {
    return "permutation-tableau v1\n"
           "steps SSWSWSWW\n"
           "row 1 1101\n"
           "row 2 0000\n"
           "row 4 001\n"
           "row 6 11\n"
           "end\n";
}

inline std::string figure1_grid() {
    return "8 6 5\n"
           "1 0 1 | 1\n"
           "0 0 1 | 2\n"
           "1 1 1 | 3\n"
           "0 1 1 | 4\n"
           "1 | 7\n";
}

inline std::string figure2_grid() {
    return "8 7 5 3\n"
           "1 1 0 1 | 1\n"
           "0 0 0 0 | 2\n"
           "0 0 1 | 4\n"
           "1 1 | 6\n";
}

}  // namespace fixtures
