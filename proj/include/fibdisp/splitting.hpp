#pragma once

// Gap structure of the sequence y(k) = k q mod n on the circle of length n,
// and the dispersion fast paths for integration lattices built on it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibdisp/dispersion.hpp"
#include "fibdisp/rational.hpp"

namespace fibdisp {

struct SplitEntry {
    std::int64_t distance = 0;
    std::int64_t multiplicity = 0;
    friend bool operator==(const SplitEntry&, const SplitEntry&) = default;
};

// n = a1 d1 + a2 d2 + a3 d3 with d1 > d2 > d3 and at most three entries.
class Splitting {
public:
    Splitting() = default;
    // Entries must have strictly decreasing distances; at most three.
    explicit Splitting(std::vector<SplitEntry> entries);

    const std::vector<SplitEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::int64_t total() const;  // sum of a_i d_i
    std::int64_t largest() const { return entries_.front().distance; }

    std::string str() const;  // "13 = 2*5 + 1*3"
    friend bool operator==(const Splitting&, const Splitting&) = default;

private:
    std::vector<SplitEntry> entries_;
};

struct YSequence {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::int64_t ell = 0;
    std::vector<std::int64_t> values;           // y(0), ..., y(ell-1)
    std::vector<std::int64_t> distinct_sorted;  // deduplicated, ascending
};

YSequence y_sequence(std::int64_t n, std::int64_t q, std::int64_t ell);

// Cyclic gaps between the distinct values of Y_ell, grouped by length.
Splitting splitting_of(std::int64_t n, std::int64_t q, std::int64_t ell);

// Largest gap of Y_ell; max_gap(n, q, 0) == n.
std::int64_t max_gap(std::int64_t n, std::int64_t q, std::int64_t ell);

// At most three distances for every ell in 1..n, and d1 = d2 + d3 when three.
bool verify_three_gap(std::int64_t n, std::int64_t q);

struct LargestSplitReport {
    bool holds = true;
    std::int64_t checked = 0;
    std::int64_t skipped = 0;                 // steps adding an already present value
    std::optional<std::int64_t> first_failure;  // ell of the first violation
};

// Going from Y_ell to Y_{ell+1} (ell = 1..n-1) always splits a longest gap.
LargestSplitReport verify_largest_split(std::int64_t n, std::int64_t q);

struct PredictedSplitting {
    std::vector<SplitEntry> entries;  // formula order; zero entries dropped
    bool sorted_decreasing = false;
};

// Closed-form splitting of Y_{F(k) - j} for a lattice of optimal dispersion.
// Requires 2q <= n, 3 <= k <= fib_index(n), 1 <= j <= F(k-2).
PredictedSplitting predicted_splitting(std::int64_t n, std::int64_t q, int k, std::int64_t j);

// Both entry lists describe the same multiset of gaps.
bool same_gap_multiset(const std::vector<SplitEntry>& a, const std::vector<SplitEntry>& b);

// The continued-fraction windows F(k)/F(k-2) .. F(k-1)/F(k-3) on n/q for
// all 3 <= k <= fib_index(n). Requires 1 <= q and 2q <= n.
bool ratio_window_check(std::int64_t n, std::int64_t q);

// Some longest gap of Y_ell is circularly adjacent to a gap of length >= d2.
// Throws std::domain_error when Y_ell has a single gap length.
bool adjacency_check(std::int64_t n, std::int64_t q, std::int64_t ell);

// Exact periodic dispersion of the lattice {(k, kq mod n)/n}; O(n log n).
DispersionResult lattice_dispersion_2d(std::int64_t n, std::int64_t q);

// Exact periodic dispersion of {(k, k q1 mod n, k q2 mod n)/n}.
DispersionResult lattice_dispersion_3d(std::int64_t n, std::int64_t q1, std::int64_t q2);

// max_{3<=k<=m} F(k) F(m-k+3) / F(m)^2.
Rational fib_dispersion_formula(int m);

// max{2(F(m)-1), max_{4<=j<=m-1} F(j) F(m+3-j)} / F(m)^2, m >= 5.
Rational fib_nonperiodic_formula(int m);

struct SplittingRow {
    std::int64_t ell = 0;
    Splitting split;
    std::optional<std::int64_t> new_value;       // y(ell), absent for ell == n
    std::optional<std::int64_t> split_gap_len;   // gap of Y_ell holding y(ell); 0 if already present
};

std::vector<SplittingRow> splitting_table(std::int64_t n, std::int64_t q, std::int64_t ell_max);

}  // namespace fibdisp
