#include "ptab/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "ptab/error.hpp"
#include "ptab/statistics.hpp"

namespace ptab {

namespace {

void check_range(int n, int limit, const char* what) {
    if (n < 1 || n > limit) {
        throw Error(errc::limit_exceeded,
                    std::string(what) + " " + std::to_string(n) +
                        " outside [1, " + std::to_string(limit) + "]");
    }
}

BoundaryWord shape_from_mask(int n, std::uint32_t mask) {
    // Bit (n - i) of the mask decides step i, so the whole word reads as a
    // binary number with the first step on top and west = 1.
    std::vector<Step> steps(n);
    for (int i = 1; i <= n; ++i) {
        steps[i - 1] = (mask >> (n - i)) & 1u ? Step::West : Step::South;
    }
    return BoundaryWord::from_steps(std::move(steps));
}

// Bitmask geometry of one shape, over canonical cell indices.
int build_masks(const BoundaryWord& shape, std::vector<std::uint64_t>& columns,
                std::vector<std::uint64_t>& above, std::vector<std::uint64_t>& left) {
    const int m = shape.cell_count();
    if (m > 62) {
        throw Error(errc::limit_exceeded,
                    "shape with " + std::to_string(m) +
                        " cells exceeds the bitmask fill enumerator");
    }
    columns.clear();
    above.assign(m, 0);
    left.assign(m, 0);
    for (int j : shape.column_labels()) {
        std::uint64_t cm = 0;
        for (int i : shape.column_rows(j)) {
            cm |= std::uint64_t{1} << shape.cell_index({i, j});
        }
        columns.push_back(cm);
    }
    const auto& cells = shape.cells();
    for (int c = 0; c < m; ++c) {
        for (int d = 0; d < m; ++d) {
            if (cells[d].col == cells[c].col && cells[d].row < cells[c].row) {
                above[c] |= std::uint64_t{1} << d;
            }
            if (cells[d].row == cells[c].row && cells[d].col > cells[c].col) {
                left[c] |= std::uint64_t{1} << d;
            }
        }
    }
    return m;
}

// Both axioms at once: every column hit, and no zero cell with a one above
// and a one to its left.
bool fill_is_valid(std::uint64_t fill, const std::vector<std::uint64_t>& columns,
                   const std::vector<std::uint64_t>& above,
                   const std::vector<std::uint64_t>& left) {
    for (std::uint64_t cm : columns) {
        if (!(fill & cm)) return false;
    }
    const int m = static_cast<int>(above.size());
    for (int c = 0; c < m; ++c) {
        if (fill >> c & 1u) continue;
        if ((fill & above[c]) && (fill & left[c])) return false;
    }
    return true;
}

}  // namespace

PermutationStream::PermutationStream(int n, EnumerationLimits limits) {
    check_range(n, limits.max_permutation_size, "permutation size");
    word_.resize(n);
    std::iota(word_.begin(), word_.end(), 1);
}

std::optional<Permutation> PermutationStream::next() {
    if (done_) return std::nullopt;
    Permutation out = Permutation::from_word(word_);
    done_ = !std::next_permutation(word_.begin(), word_.end());
    return out;
}

TableauStream::TableauStream(int n, std::optional<int> columns, EnumerationLimits limits)
    : n_(n), columns_(columns) {
    check_range(n, limits.max_tableau_length, "tableau length");
    shape_end_ = std::uint32_t{1} << (n - 1);
}

bool TableauStream::load_shape() {
    while (shape_mask_ < shape_end_) {
        const std::uint32_t mask = shape_mask_++;
        if (columns_ && std::popcount(mask) != *columns_) continue;
        shape_ = shape_from_mask(n_, mask);
        const int m = build_masks(*shape_, column_masks_, above_masks_, left_masks_);
        fill_mask_ = 0;
        fill_end_ = std::uint64_t{1} << m;
        shape_loaded_ = true;
        return true;
    }
    return false;
}

std::optional<PermutationTableau> TableauStream::next() {
    for (;;) {
        if (!shape_loaded_ && !load_shape()) return std::nullopt;
        while (fill_mask_ < fill_end_) {
            const std::uint64_t fill = fill_mask_++;
            if (!fill_is_valid(fill, column_masks_, above_masks_, left_masks_)) continue;
            std::vector<std::uint8_t> bits(shape_->cell_count());
            for (std::size_t c = 0; c < bits.size(); ++c) {
                bits[c] = static_cast<std::uint8_t>(fill >> c & 1u);
            }
            return PermutationTableau::create(*shape_, std::move(bits));
        }
        shape_loaded_ = false;
    }
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(errc::overflow, "count overflows 64 bits");
    }
    return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(errc::overflow, "product overflows 64 bits");
    }
    return out;
}

std::uint64_t factorial(int n) {
    if (n < 0) throw Error(errc::out_of_range, "factorial of a negative number");
    std::uint64_t out = 1;
    for (int i = 2; i <= n; ++i) {
        out = checked_mul(out, static_cast<std::uint64_t>(i));
    }
    return out;
}

std::vector<std::uint64_t> eulerian_row(int n) {
    if (n < 1) {
        throw Error(errc::out_of_range, "Eulerian row needs n >= 1, got " + std::to_string(n));
    }
    std::vector<std::uint64_t> row{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<std::uint64_t> next(m, 0);
        for (int k = 0; k < m; ++k) {
            std::uint64_t keep = 0;  // (k+1) * A(m-1, k)
            if (k < m - 1) keep = checked_mul(static_cast<std::uint64_t>(k + 1), row[k]);
            std::uint64_t lift = 0;  // (m-k) * A(m-1, k-1)
            if (k >= 1) lift = checked_mul(static_cast<std::uint64_t>(m - k), row[k - 1]);
            next[k] = checked_add(keep, lift);
        }
        row = std::move(next);
    }
    return row;
}

std::uint64_t eulerian(int n, int k) {
    if (n < 1 || k < 0 || k >= n) {
        throw Error(errc::out_of_range,
                    "Eulerian number needs 0 <= k < n, got n=" + std::to_string(n) +
                        " k=" + std::to_string(k));
    }
    return eulerian_row(n)[static_cast<std::size_t>(k)];
}

std::vector<std::uint64_t> tableau_counts(int n, EnumerationLimits limits) {
    check_range(n, limits.max_tableau_length, "tableau length");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
    const std::uint32_t end = std::uint32_t{1} << (n - 1);
    std::vector<std::uint64_t> columns, above, left;
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        const BoundaryWord shape = shape_from_mask(n, mask);
        const int m = build_masks(shape, columns, above, left);
        const int k = shape.column_count();
        const std::uint64_t fill_end = std::uint64_t{1} << m;
        for (std::uint64_t fill = 0; fill < fill_end; ++fill) {
            if (fill_is_valid(fill, columns, above, left)) {
                counts[k] = checked_add(counts[k], 1);
            }
        }
    }
    return counts;
}

std::vector<std::uint64_t> descent_counts(int n, EnumerationLimits limits) {
    PermutationStream stream(n, limits);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
    while (auto p = stream.next()) {
        const std::size_t k = descent_set(*p).size();
        counts[k] = checked_add(counts[k], 1);
    }
    return counts;
}

CountTable count_table(int n, EnumerationLimits limits) {
    std::vector<std::uint64_t> tabs = tableau_counts(n, limits);
    const std::vector<std::uint64_t> perms = descent_counts(n, limits);
    if (tabs != perms) {
        throw Error(errc::internal_invariant_violation,
                    "tableau and descent counts disagree at n=" + std::to_string(n));
    }
    std::uint64_t total = 0;
    for (std::uint64_t c : tabs) total = checked_add(total, c);
    if (total != factorial(n)) {
        throw Error(errc::internal_invariant_violation,
                    "counts at n=" + std::to_string(n) + " do not sum to n!");
    }
    return CountTable{n, std::move(tabs)};
}

}  // namespace ptab
