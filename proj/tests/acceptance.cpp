// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fibdisp/dispersion.hpp"
#include "fibdisp/numeric.hpp"
#include "fibdisp/point_set.hpp"
#include "fibdisp/search.hpp"
#include "fibdisp/splitting.hpp"
#include "fibdisp/verify.hpp"

using namespace fibdisp;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> details;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back("failed: " + what);
        }
    }
    void absorb(const CheckResult& r) {
        std::ostringstream os;
        os << (r.passed ? "ok " : "FAILED ") << r.name << ' ' << r.range;
        if (!r.passed) os << " (" << r.counterexample_count << " counterexamples)";
        details.push_back(os.str());
        for (const auto& c : r.counterexamples) details.push_back("  e.g. " + c);
        for (const auto& d : r.discrepancies) details.push_back("  discrepancy " + d);
        for (const auto& n : r.notes) details.push_back("  " + n);
        ok = ok && r.passed;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char budget[96];
    std::snprintf(budget, sizeof budget, "runtime %.2fs within %.0fs", secs, budget_seconds);
    o.require(secs < budget_seconds, budget);
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
}

std::set<std::int64_t> expected_generators(std::int64_t n) {
    std::set<std::int64_t> g;
    for (int m = 3; fib(m) <= n; ++m) {
        if (fib(m) == n) {
            g.insert(mod(fib(m - 2), n));
            g.insert(n - mod(fib(m - 2), n));
        }
    }
    for (int j = 3; 2 * fib(j) <= n; ++j) {
        if (2 * fib(j) == n) {
            g.insert(2 * fib(j - 2));
            g.insert(n - 2 * fib(j - 2));
        }
    }
    return g;
}

}  // namespace

int main() {
    criterion(1, "Fibonacci lattices have dispersion exactly 2/F_m", 10, [](Outcome& o) {
        for (int m = 3; m <= 16; ++m) {
            const Rational expect(2, fib(m));
            o.require(lattice_dispersion_2d(fib(m), fib(m - 2)).value == expect, "fast path m=" + std::to_string(m));
            if (m <= 11) {
                o.require(periodic_dispersion_2d(gen_fibonacci_lattice(m)).value == expect, "sweep m=" + std::to_string(m));
            }
        }
        o.details.push_back("fast path m=3..16, sweep m=3..11");
    });

    criterion(2, "every n-point set has dispersion >= 2/n", 30, [](Outcome& o) {
        o.absorb(check_lower_bound(1000, 32, 200, 20240611));
    });

    criterion(3, "optimal 2D lattices for n=2..200 are exactly the Fibonacci families", 60, [](Outcome& o) {
        const std::vector<std::int64_t> listed{2, 3, 4, 5, 6, 8, 10, 13, 16, 21, 26, 34, 42, 55, 68, 89, 110, 144, 178};
        std::vector<std::int64_t> with_hits;
        std::int64_t unclassified = 0;
        for (const auto& rep : search_range_2d(2, 200)) {
            if (rep.hits.empty()) continue;
            with_hits.push_back(rep.n);
            std::set<std::int64_t> got;
            for (const auto& h : rep.hits) {
                got.insert(h.generators[0]);
                if (h.cls == LatticeClass::Unclassified) ++unclassified;
            }
            o.require(got == expected_generators(rep.n), "generator set at n=" + std::to_string(rep.n));
            o.require(rep.revalidation_ok, "sweep revalidation at n=" + std::to_string(rep.n));
        }
        o.require(with_hits == listed, "set of n with optimal lattices");
        o.require(unclassified == 0, "no unclassified hits");
        o.details.push_back(std::to_string(with_hits.size()) + " values of n with optimal lattices, " +
                            std::to_string(unclassified) + " unclassified");
    });

    criterion(4, "nonperiodic dispersion of the Fibonacci lattice without the origin", 60, [](Outcome& o) {
        const std::int64_t origin[2] = {0, 0};
        for (int m = 6; m <= 14; ++m) {
            const auto v = nonperiodic_dispersion_2d(gen_fibonacci_lattice(m).without_point(origin)).value;
            const std::int64_t f = fib(m);
            const Rational closed(2 * (f - 1), f * f);
            const Rational displayed = fib_nonperiodic_formula(m);
            if (m >= 8 && m <= 12) o.require(v == closed, "2(F_m-1)/F_m^2 at m=" + std::to_string(m));
            if (m >= 8) o.require(v == displayed, "displayed maximum at m=" + std::to_string(m));
            if (m <= 7) {
                const Rational expected_display = m == 6 ? Rational(15, 64) : Rational(25, 169);
                o.require(displayed == expected_display, "displayed maximum value at m=" + std::to_string(m));
                std::string which = v == closed ? "2(F_m-1)/F_m^2 = " + closed.str()
                                    : v == displayed ? "the displayed maximum " + displayed.str()
                                                     : "neither";
                o.details.push_back("m=" + std::to_string(m) + ": solver gives " + v.str() + ", matching " + which +
                                    (v == closed ? "" : " (inconsistent with 2(F_m-1)/F_m^2 = " + closed.str() + ")"));
                o.require(v == closed || v == displayed, "m=" + std::to_string(m) + " matches a candidate");
            }
        }
    });

    criterion(5, "gap lemma suites", 120, [](Outcome& o) {
        o.absorb(check_three_gap(144));
        o.absorb(check_largest_split(144));
        o.absorb(check_predicted_splittings(144));
        o.absorb(check_ratio_windows(144));
        o.absorb(check_adjacent_gaps(100));
    });

    criterion(6, "no 3D lattice with 5 <= n <= 40 has dispersion 3/n", 600, [](Outcome& o) {
        o.absorb(check_no_optimal_3d(5, 40, 1));
    });

    criterion(7, "distortion threshold of the Fibonacci lattice", 60, [](Outcome& o) {
        const auto six = distortion_threshold(6);
        o.require(six.threshold == Rational(1, 5), "threshold at m=6 is 1/5");
        const auto disp = [](const Rational& xi) {
            return periodic_dispersion_2d(gen_distorted_fibonacci({6, xi, Rational(0)})).value;
        };
        o.require(disp(Rational(1, 5)) == Rational(1, 4), "dispersion 1/4 at xi=1/5");
        o.require(disp(Rational(1, 5) + Rational(1, 100)) > Rational(1, 4), "dispersion above 1/4 at xi=21/100");
        const auto p9 = predicted_threshold(9), p12 = predicted_threshold(12);
        char line[128];
        std::snprintf(line, sizeof line, "predicted m=6: %s = %.6f, m=9: %s = %.6f, m=12: %s = %.6f",
                      six.predicted.str().c_str(), six.predicted.to_double(), p9.str().c_str(), p9.to_double(),
                      p12.str().c_str(), p12.to_double());
        o.details.push_back(line);
        o.require(six.predicted < p9 && p9 < p12, "predictions increase");
        o.require(p12.to_double() < 0.236068, "predictions stay below 0.236068");
    });

    criterion(8, "fast paths agree exactly with the generic solvers", 300, [](Outcome& o) {
        o.absorb(check_fast_paths(60, 12, true));
    });

    criterion(9, "column counts and the Fibonacci permutation", 10, [](Outcome& o) {
        o.absorb(check_column_structure(5, 12));
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "NOT ACCEPTED", failures);
    return failures == 0 ? 0 : 1;
}
