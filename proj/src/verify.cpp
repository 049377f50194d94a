#include "fibdisp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fibdisp/dispersion.hpp"
#include "fibdisp/numeric.hpp"
#include "fibdisp/point_set.hpp"
#include "fibdisp/search.hpp"
#include "fibdisp/splitting.hpp"
#include "fibdisp/structure.hpp"

namespace fibdisp {

namespace {

constexpr std::size_t kMaxListed = 10;

std::string tuple(std::initializer_list<std::int64_t> xs) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (auto x : xs) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << ')';
    return os.str();
}

std::string span(std::string_view var, std::int64_t lo, std::int64_t hi) {
    return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

template <class F>
CheckResult timed(std::string name, std::string range, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = std::move(name);
    r.range = std::move(range);
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

bool is_fibonacci_family(std::int64_t n) {
    if (fibonacci_index_of(n)) return true;
    return n % 2 == 0 && fibonacci_index_of(n / 2).has_value();
}

}  // namespace

void CheckResult::fail(std::string what) {
    passed = false;
    ++counterexample_count;
    if (counterexamples.size() < kMaxListed) counterexamples.push_back(std::move(what));
}

CheckResult check_fibonacci_lattices(int m_fast, int m_generic) {
    return timed("fibonacci-lattices", span("m", 3, m_fast), [&](CheckResult& r) {
        for (int m = 3; m <= m_fast; ++m) {
            const Rational expect(2, fib(m));
            const auto fast = lattice_dispersion_2d(fib(m), fib(m - 2));
            if (fast.value != expect) r.fail("fast m=" + std::to_string(m) + " gave " + fast.value.str());
            if (m > m_generic) continue;
            const auto lat = gen_fibonacci_lattice(m);
            const auto generic = periodic_dispersion_2d(lat);
            if (generic.value != expect) r.fail("sweep m=" + std::to_string(m) + " gave " + generic.value.str());
            if (!box_is_empty(lat, generic.witness)) r.fail("witness not empty at m=" + std::to_string(m));
        }
        r.notes.push_back("generic sweep for m=3.." + std::to_string(m_generic));
    });
}

CheckResult check_lower_bound(int random_sets, int max_points, std::int64_t lattice_n, std::uint64_t seed) {
    const std::string range = std::to_string(random_sets) + " random sets, lattices n=2.." + std::to_string(lattice_n);
    return timed("lower-bound", range, [&](CheckResult& r) {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < random_sets; ++t) {
            const int count = std::uniform_int_distribution<int>(2, max_points)(rng);
            std::int64_t den = std::uniform_int_distribution<std::int64_t>(2, 48)(rng);
            while (den * den < count) ++den;
            std::uniform_int_distribution<std::int64_t> u(0, den - 1);
            std::set<std::pair<std::int64_t, std::int64_t>> pts;
            while (static_cast<int>(pts.size()) < count) pts.insert({u(rng), u(rng)});
            std::vector<std::int64_t> coords;
            for (auto [x, y] : pts) {
                coords.push_back(x);
                coords.push_back(y);
            }
            const auto d = periodic_dispersion_2d(GridPointSet(2, den, coords)).value;
            if (d < Rational(2, count)) r.fail("random set " + std::to_string(t) + " has dispersion " + d.str());
        }
        for (std::int64_t n = 2; n <= lattice_n; ++n) {
            for (std::int64_t q = 1; q < n; ++q) {
                const auto d = lattice_dispersion_2d(n, q).value;
                if (d < Rational(2, n)) r.fail("lattice " + tuple({n, q}) + " has dispersion " + d.str());
            }
        }
    });
}

CheckResult check_optimal_2d(std::int64_t n_lo, std::int64_t n_hi, int jobs) {
    return timed("optimal-lattices-2d", span("n", n_lo, n_hi), [&](CheckResult& r) {
        std::vector<std::string> with_hits;
        for (const auto& rep : search_range_2d(n_lo, n_hi, jobs)) {
            if (!rep.hits.empty()) with_hits.push_back(std::to_string(rep.n));
            if (rep.hits.empty() == is_fibonacci_family(rep.n)) {
                r.fail("n=" + std::to_string(rep.n) + (rep.hits.empty() ? " has no optimal lattice" : " has an optimal lattice"));
            }
            if (!rep.revalidation_ok) r.fail("n=" + std::to_string(rep.n) + " hit rejected by the sweep");
            for (const auto& h : rep.hits) {
                if (h.cls == LatticeClass::Unclassified) r.fail("unclassified optimal lattice " + tuple({rep.n, h.generators[0]}));
            }
        }
        std::string joined;
        for (const auto& s : with_hits) joined += (joined.empty() ? "" : ",") + s;
        r.notes.push_back("optimal at n in {" + joined + "}");
    });
}

CheckResult check_nonperiodic_fibonacci(int m_closed_hi, int m_formula_hi) {
    const std::string range = "m=6.." + std::to_string(std::max(m_closed_hi, m_formula_hi));
    return timed("nonperiodic-fibonacci", range, [&](CheckResult& r) {
        const std::int64_t origin[2] = {0, 0};
        for (int m = 6; m <= std::max(m_closed_hi, m_formula_hi); ++m) {
            const auto value = nonperiodic_dispersion_2d(gen_fibonacci_lattice(m).without_point(origin)).value;
            const std::int64_t f = fib(m);
            const Rational closed(2 * (f - 1), f * f);
            const Rational formula = fib_nonperiodic_formula(m);
            const std::string tag = "m=" + std::to_string(m);
            if (m >= 8 && m <= m_closed_hi && value != closed) r.fail(tag + " gave " + value.str() + ", expected " + closed.str());
            if (m >= 8 && m <= m_formula_hi && value != formula) r.fail(tag + " gave " + value.str() + ", formula " + formula.str());
            if (m < 8) {
                const std::string which = value == closed    ? "2(F_m-1)/F_m^2"
                                          : value == formula ? "the maximum over the displayed terms"
                                                             : "neither candidate";
                r.notes.push_back(tag + ": solver " + value.str() + " matches " + which + " (2(F_m-1)/F_m^2 = " +
                                  closed.str() + ", displayed maximum = " + formula.str() + ")");
                if (value != closed) {
                    r.discrepancies.push_back(tag + ": value " + value.str() + " differs from 2(F_m-1)/F_m^2 = " + closed.str());
                }
                if (value != formula) r.fail(tag + " matches neither candidate: " + value.str());
            }
        }
    });
}

CheckResult check_three_gap(std::int64_t n_max) {
    return timed("three-gap", span("n", 2, n_max), [&](CheckResult& r) {
        for (std::int64_t n = 2; n <= n_max; ++n) {
            for (std::int64_t q = 0; q < n; ++q) {
                if (!verify_three_gap(n, q)) r.fail(tuple({n, q}));
            }
        }
    });
}

CheckResult check_largest_split(std::int64_t n_max) {
    return timed("largest-gap-split", span("n", 2, n_max), [&](CheckResult& r) {
        for (std::int64_t n = 2; n <= n_max; ++n) {
            for (std::int64_t q = 0; q < n; ++q) {
                const auto rep = verify_largest_split(n, q);
                if (!rep.holds) r.fail(tuple({n, q, rep.first_failure.value_or(-1)}));
            }
        }
    });
}

CheckResult check_predicted_splittings(std::int64_t n_max) {
    return timed("predicted-splittings", span("n", 2, n_max), [&](CheckResult& r) {
        std::int64_t pairs = 0, cases = 0;
        for (std::int64_t n = 2; n <= n_max; ++n) {
            for (const auto& h : search_optimal_2d(n).hits) {
                const std::int64_t q = h.generators[0];
                if (2 * q > n) continue;
                ++pairs;
                for (int k = 3; k <= fib_index(n); ++k) {
                    for (std::int64_t j = 1; j <= fib(k - 2); ++j) {
                        ++cases;
                        const auto p = predicted_splitting(n, q, k, j);
                        const auto actual = splitting_of(n, q, fib(k) - j);
                        if (!same_gap_multiset(p.entries, actual.entries())) {
                            r.fail(tuple({n, q, k, j}) + " actual " + actual.str());
                        } else if (!p.sorted_decreasing) {
                            r.fail(tuple({n, q, k, j}) + " not in decreasing order");
                        }
                    }
                }
            }
        }
        r.notes.push_back(std::to_string(pairs) + " optimal pairs, " + std::to_string(cases) + " splittings");
    });
}

CheckResult check_ratio_windows(std::int64_t n_max) {
    return timed("ratio-windows", span("n", 2, n_max), [&](CheckResult& r) {
        for (std::int64_t n = 2; n <= n_max; ++n) {
            for (std::int64_t q = 1; 2 * q <= n; ++q) {
                const bool window = ratio_window_check(n, q);
                const bool optimal = lattice_dispersion_2d(n, q).value == Rational(2, n);
                if (window != optimal) r.fail(tuple({n, q}) + (window ? " passes windows, not optimal" : " optimal, fails windows"));
            }
        }
    });
}

CheckResult check_adjacent_gaps(std::int64_t n_max) {
    return timed("adjacent-gaps", span("n", 2, n_max), [&](CheckResult& r) {
        std::int64_t applicable = 0;
        for (std::int64_t n = 2; n <= n_max; ++n) {
            for (std::int64_t q = 1; q < n; ++q) {
                for (std::int64_t ell = 1; ell <= n; ++ell) {
                    if (splitting_of(n, q, ell).size() < 2) continue;
                    ++applicable;
                    if (!adjacency_check(n, q, ell)) r.fail(tuple({n, q, ell}));
                }
            }
        }
        r.notes.push_back(std::to_string(r.counterexample_count) + " of " + std::to_string(applicable) +
                          " applicable (n,q,l) have no longest gap next to a gap >= d2");
    });
}

CheckResult check_no_optimal_3d(std::int64_t n_lo, std::int64_t n_hi, int jobs) {
    return timed("no-optimal-3d", span("n", n_lo, n_hi), [&](CheckResult& r) {
        std::int64_t examined = 0;
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            const auto rep = search_optimal_3d(n, jobs);
            examined += rep.candidates_examined;
            for (const auto& h : rep.hits) r.fail(tuple({n, h.generators[0], h.generators[1]}));
            if (n == 7) {
                std::int64_t q2_cases = 0;
                const auto projects_to_2 = [](std::int64_t g) { return g == 2 || g == 5; };
                for (const auto& row : rep.rows) {
                    if (!projects_to_2(row.generators[0]) && !projects_to_2(row.generators[1])) continue;
                    ++q2_cases;
                    if (row.dispersion <= Rational(3, 7)) {
                        r.fail("n=7 generator 2 case " + tuple({row.generators[0], row.generators[1]}));
                    }
                }
                r.notes.push_back("n=7 with a planar projection of generator 2 or 5: " + std::to_string(q2_cases) +
                                  " pairs checked");
            }
        }
        r.notes.push_back(std::to_string(examined) + " representative pairs evaluated");
    });
}

CheckResult check_distortion(const Rational& step) {
    return timed("distortion-threshold", "m=6,9,12", [&](CheckResult& r) {
        const auto six = distortion_threshold(6, ThresholdMode::Exact, step);
        if (six.threshold != Rational(1, 5)) r.fail("m=6 threshold " + six.threshold.str());
        if (!six.validated) r.fail("m=6 not optimal at the threshold");
        if (!six.refuted) r.fail("m=6 still optimal at threshold + " + step.str());
        const auto at = [](const Rational& xi) {
            return periodic_dispersion_2d(gen_distorted_fibonacci({6, xi, Rational(0)})).value;
        };
        if (at(Rational(1, 5)) != Rational(1, 4)) r.fail("dispersion at 1/5 is " + at(Rational(1, 5)).str());
        if (!(at(Rational(1, 5) + Rational(1, 100)) > Rational(1, 4))) r.fail("dispersion at 21/100 is not above 1/4");

        double prev = six.predicted.to_double();
        std::string shown = "m=6: " + six.predicted.str();
        for (int m : {9, 12}) {
            const auto p = predicted_threshold(m);
            const double v = p.to_double();
            std::ostringstream os;
            os.precision(6);
            os << std::fixed << v;
            shown += ", m=" + std::to_string(m) + ": " + p.str() + " = " + os.str();
            if (!(v > prev)) r.fail("prediction does not increase at m=" + std::to_string(m));
            if (!(v < 0.236068)) r.fail("prediction at m=" + std::to_string(m) + " exceeds 0.236068");
            prev = v;
        }
        r.notes.push_back(shown);
    });
}

CheckResult check_fast_paths(std::int64_t n2_max, std::int64_t n3_max, bool with_reference) {
    const std::string range = "2D n=2.." + std::to_string(n2_max) + ", 3D n=2.." + std::to_string(n3_max);
    return timed("fast-paths", range, [&](CheckResult& r) {
        for (std::int64_t n = 2; n <= n2_max; ++n) {
            for (std::int64_t q = 1; q < n; ++q) {
                const auto lat = gen_integration_lattice({n, {q}});
                const auto fast = lattice_dispersion_2d(n, q).value;
                const auto sweep = periodic_dispersion_2d(lat).value;
                if (fast != sweep) r.fail("2D " + tuple({n, q}) + " fast " + fast.str() + " sweep " + sweep.str());
                if (with_reference) {
                    const auto ref = periodic_dispersion_2d_reference(lat).value;
                    if (ref != sweep) r.fail("2D " + tuple({n, q}) + " reference " + ref.str() + " sweep " + sweep.str());
                }
            }
        }
        for (std::int64_t n = 2; n <= n3_max; ++n) {
            for (std::int64_t q1 = 0; q1 < n; ++q1) {
                for (std::int64_t q2 = 0; q2 < n; ++q2) {
                    const auto fast = lattice_dispersion_3d(n, q1, q2).value;
                    const auto brute = periodic_dispersion_nd(gen_integration_lattice({n, {q1, q2}})).value;
                    if (fast != brute) r.fail("3D " + tuple({n, q1, q2}) + " fast " + fast.str() + " brute " + brute.str());
                }
            }
        }
    });
}

CheckResult check_column_structure(int m_lo, int m_hi) {
    return timed("column-structure", span("m", m_lo, m_hi), [&](CheckResult& r) {
        for (int m = m_lo; m <= m_hi; ++m) {
            const auto lat = gen_fibonacci_lattice(m);
            const std::int64_t n = fib(m);
            const auto prof = column_count_profile(lat, Rational(2, n));
            if (prof != CountProfile{2, 2}) {
                r.fail("m=" + std::to_string(m) + " counts " + tuple({prof.min, prof.max}));
            }
            const auto s = structure_check(lat);
            if (s.kind != GridKind::Regular || !s.permutation) {
                r.fail("m=" + std::to_string(m) + " not a regular grid permutation");
                continue;
            }
            for (std::int64_t k = 0; k < n; ++k) {
                if ((*s.permutation)[static_cast<std::size_t>(k)] != k * fib(m - 2) % n) {
                    r.fail("m=" + std::to_string(m) + " permutation differs at " + std::to_string(k));
                    break;
                }
            }
        }
    });
}

std::optional<Profile> parse_profile(std::string_view s) {
    if (s == "quick") return Profile::Quick;
    if (s == "full") return Profile::Full;
    return std::nullopt;
}

std::vector<CheckResult> verify_theorems(Profile profile, int jobs) {
    const bool full = profile == Profile::Full;
    std::vector<CheckResult> out;
    out.push_back(check_fibonacci_lattices(16, full ? 11 : 10));
    out.push_back(check_lower_bound(full ? 1000 : 200, 32, full ? 200 : 60, 20240611));
    out.push_back(check_optimal_2d(2, full ? 200 : 60, jobs));
    out.push_back(check_nonperiodic_fibonacci(full ? 12 : 9, full ? 14 : 9));
    const std::int64_t gap_n = full ? 144 : 60;
    out.push_back(check_three_gap(gap_n));
    out.push_back(check_largest_split(gap_n));
    out.push_back(check_predicted_splittings(gap_n));
    out.push_back(check_ratio_windows(gap_n));
    out.push_back(check_adjacent_gaps(full ? 100 : 60));
    out.push_back(check_no_optimal_3d(5, full ? 40 : 20, jobs));
    out.push_back(check_distortion(Rational(1, 100)));
    out.push_back(check_fast_paths(full ? 60 : 30, full ? 12 : 8, true));
    out.push_back(check_column_structure(5, 12));
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string report_text(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << ' ' << r.range << '\n';
        if (!r.passed) os << "  counterexamples: " << r.counterexample_count << '\n';
        for (const auto& c : r.counterexamples) os << "  counterexample " << c << '\n';
        for (const auto& d : r.discrepancies) os << "  discrepancy " << d << '\n';
        for (const auto& n : r.notes) os << "  note " << n << '\n';
    }
    const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });
    os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
    return os.str();
}

std::string report_json(const std::vector<CheckResult>& results) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        arr.push_back({{"theorem", r.name},
                       {"range", r.range},
                       {"status", r.passed ? "pass" : "fail"},
                       {"counterexample_count", r.counterexample_count},
                       {"counterexamples", r.counterexamples},
                       {"notes", r.notes},
                       {"discrepancies", r.discrepancies}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace fibdisp
