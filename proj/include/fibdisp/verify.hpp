#pragma once
// Exhaustive and randomized checks of the lattice dispersion results, with
// a line-oriented text report and a JSON summary.
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibdisp/rational.hpp"

namespace fibdisp {

struct CheckResult {
    std::string name;
    std::string range;
    bool passed = true;
    std::int64_t counterexample_count = 0;
    std::vector<std::string> counterexamples;  // first few only
    std::vector<std::string> notes;
    std::vector<std::string> discrepancies;  // disagreements with the published statement
    double seconds = 0;

    void fail(std::string what);
};

// Fibonacci lattices have dispersion 2/F(m): fast path for m = 3..m_fast,
// generic sweep for m = 3..m_generic.
CheckResult check_fibonacci_lattices(int m_fast, int m_generic);

// Random planar sets (2..max_points points) and all lattices with n <= lattice_n
// have dispersion >= 2/n.
CheckResult check_lower_bound(int random_sets, int max_points, std::int64_t lattice_n, std::uint64_t seed);

// Optimal 2D lattices for n_lo..n_hi are exactly the two Fibonacci families.
CheckResult check_optimal_2d(std::int64_t n_lo, std::int64_t n_hi, int jobs);

// Nonperiodic dispersion of the Fibonacci lattice without the origin.
CheckResult check_nonperiodic_fibonacci(int m_closed_hi, int m_formula_hi);

CheckResult check_three_gap(std::int64_t n_max);
CheckResult check_largest_split(std::int64_t n_max);
CheckResult check_predicted_splittings(std::int64_t n_max);
CheckResult check_ratio_windows(std::int64_t n_max);
CheckResult check_adjacent_gaps(std::int64_t n_max);

// No 3D lattice with n_lo <= n <= n_hi has dispersion 3/n.
CheckResult check_no_optimal_3d(std::int64_t n_lo, std::int64_t n_hi, int jobs);

CheckResult check_distortion(const Rational& step);

// Fast lattice paths against the generic solvers (and the cubic reference).
CheckResult check_fast_paths(std::int64_t n2_max, std::int64_t n3_max, bool with_reference);

CheckResult check_column_structure(int m_lo, int m_hi);

enum class Profile { Quick, Full };

std::optional<Profile> parse_profile(std::string_view s);

std::vector<CheckResult> verify_theorems(Profile profile, int jobs = 1);

bool all_passed(const std::vector<CheckResult>& results);

// One "PASS|FAIL name range" line per check plus indented details. No timings.
std::string report_text(const std::vector<CheckResult>& results);

// [{theorem, range, status, counterexamples[], notes[], discrepancies[]}]
std::string report_json(const std::vector<CheckResult>& results);

}  // namespace fibdisp
