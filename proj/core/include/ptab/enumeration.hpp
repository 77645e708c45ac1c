#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ptab/permutation.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

// Guard rails for the exhaustive generators. These are configuration, not
// algorithmic constants: raise them if you can afford the blow-up (the
// tableau space for length n is Theta(4^n) fillings in the worst shape).
struct EnumerationLimits {
    int max_permutation_size = 12;
    int max_tableau_length = 10;
};

// All n! permutations of {1..n}, lexicographic. Single consumer; next()
// returns nullopt once exhausted. Throws errc::limit_exceeded up front if
// n is outside [1, limits.max_permutation_size].
class PermutationStream {
 public:
    explicit PermutationStream(int n, EnumerationLimits limits = {});

    std::optional<Permutation> next();

 private:
    std::vector<int> word_;
    bool done_ = false;
};

// Every valid permutation tableau of length n, optionally only those with
// exactly `columns` columns. Order is deterministic: boundary words as
// binary numbers ascending (south = 0, west = 1, first step the top bit),
// and within a shape the fillings as binary numbers ascending over the
// canonical cell order. Throws errc::limit_exceeded up front if n is
// outside [1, limits.max_tableau_length].
class TableauStream {
 public:
    explicit TableauStream(int n, std::optional<int> columns = std::nullopt,
                           EnumerationLimits limits = {});

    std::optional<PermutationTableau> next();

 private:
    bool load_shape();  // advance shape_mask_ to the next usable shape

    int n_;
    std::optional<int> columns_;
    std::uint32_t shape_mask_ = 0;
    std::uint32_t shape_end_ = 0;
    bool shape_loaded_ = false;

    // State for the shape currently being filled.
    std::optional<BoundaryWord> shape_;
    std::uint64_t fill_mask_ = 0;
    std::uint64_t fill_end_ = 0;
    std::vector<std::uint64_t> column_masks_;  // cells of each column
    std::vector<std::uint64_t> above_masks_;   // per cell: same column, above
    std::vector<std::uint64_t> left_masks_;    // per cell: same row, to the left
};

// Exact arithmetic with explicit failure instead of wraparound.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t factorial(int n);

// Number of permutations of {1..n} with exactly k descents, by the
// recurrence A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1) with A(1,0) = 1.
// Throws errc::out_of_range unless 0 <= k < n, errc::overflow if the value
// leaves 64 bits.
std::uint64_t eulerian(int n, int k);
std::vector<std::uint64_t> eulerian_row(int n);  // A(n,0..n-1)

// Tableaux of length n by column count, counted by brute force over all
// shapes and fillings (no tableaux are materialized).
std::vector<std::uint64_t> tableau_counts(int n, EnumerationLimits limits = {});

// Permutations of {1..n} by descent count, counted by brute force.
std::vector<std::uint64_t> descent_counts(int n, EnumerationLimits limits = {});

struct CountTable {
    int n = 0;
    std::vector<std::uint64_t> by_columns;  // index k = 0..n-1

    friend bool operator==(const CountTable&, const CountTable&) = default;
};

// The tableau counts of length n, cross-checked against the permutation
// descent counts; a disagreement (impossible unless the library is broken)
// throws errc::internal_invariant_violation, as does a total != n!.
CountTable count_table(int n, EnumerationLimits limits = {});

}  // namespace ptab
