#pragma once
// Exhaustive searches for integration lattices of minimal dispersion and the
// distortion threshold of Fibonacci lattices.
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fibdisp/rational.hpp"

namespace fibdisp {

enum class LatticeClass { None, Fibonacci, TwiceFibonacci, Unclassified };

std::string_view to_string(LatticeClass c);

struct SearchRow {
    std::vector<std::int64_t> generators;
    Rational dispersion;
    bool optimal = false;
    LatticeClass cls = LatticeClass::None;
    friend bool operator==(const SearchRow&, const SearchRow&) = default;
};

struct SearchReport {
    std::int64_t n = 0;
    int dim = 2;
    std::vector<SearchRow> rows;  // every generator tuple, sorted
    std::vector<SearchRow> hits;  // rows with dispersion dim/n, sorted
    std::int64_t candidates_examined = 0;  // tuples actually evaluated
    bool revalidated = false;              // hits rechecked with a generic solver
    bool revalidation_ok = true;
    double elapsed_seconds = 0;
};

// Runs fn(0..count-1) on up to `jobs` threads; fn must only touch its own slot.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

// Fibonacci when n = F(m) and q is F(m-2) or n - F(m-2); TwiceFibonacci when
// n = 2F(j) and q is 2F(j-2) or n - 2F(j-2); Unclassified otherwise.
LatticeClass classify_optimal(std::int64_t n, std::int64_t q);

// All q in 1..n-1 with lattice dispersion 2/n. Requires n >= 2.
SearchReport search_optimal_2d(std::int64_t n, int jobs = 1);

std::vector<SearchReport> search_range_2d(std::int64_t n_lo, std::int64_t n_hi, int jobs = 1);

// All (q1, q2) in [0, n)^2 with lattice dispersion 3/n. Requires n >= 2.
SearchReport search_optimal_3d(std::int64_t n, int jobs = 1);

enum class ThresholdMode { Exact, Sweep };

struct ThresholdResult {
    int m = 0;
    Rational predicted;  // min over 4 <= k <= m-1 of (2F(m) - F(k)F(m-k+3)) / F(m-k+3)
    Rational threshold;
    Rational step;
    bool validated = false;  // dispersion 2/F(m) at xi = threshold
    bool refuted = false;    // dispersion > 2/F(m) at xi = threshold + step
};

// Requires F(m) even and step > 0.
ThresholdResult distortion_threshold(int m, ThresholdMode mode = ThresholdMode::Exact,
                                     const Rational& step = Rational(1, 100));

// Just the closed-form prediction; requires m >= 5.
Rational predicted_threshold(int m);

}  // namespace fibdisp
