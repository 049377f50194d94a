#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fibdisp/numeric.hpp"
#include "fibdisp/point_set.hpp"
#include "fibdisp/search.hpp"
#include "fibdisp/splitting.hpp"
#include "oracles.hpp"

using namespace fibdisp;

namespace {

std::vector<std::vector<std::int64_t>> hit_generators(const SearchReport& r) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& h : r.hits) out.push_back(h.generators);
    return out;
}

using G = std::vector<std::vector<std::int64_t>>;

}  // namespace

TEST_CASE("2D search examples") {
    CHECK(hit_generators(search_optimal_2d(13)) == G{{5}, {8}});
    CHECK(hit_generators(search_optimal_2d(7)).empty());
    CHECK(hit_generators(search_optimal_2d(10)) == G{{4}, {6}});
    CHECK(hit_generators(search_optimal_2d(89)) == G{{34}, {55}});
    CHECK(hit_generators(search_optimal_2d(2)) == G{{1}});
    CHECK(hit_generators(search_optimal_2d(4)) == G{{2}});

    const auto r = search_optimal_2d(13);
    CHECK(r.rows.size() == 12);
    CHECK(r.candidates_examined == 6);
    CHECK(r.revalidated);
    CHECK(r.revalidation_ok);
    for (const auto& h : r.hits) {
        CHECK(h.dispersion == Rational(2, 13));
        CHECK(h.cls == LatticeClass::Fibonacci);
    }
    CHECK_THROWS_AS(search_optimal_2d(1), std::domain_error);
}

TEST_CASE("2D search against the grid oracle") {
    for (std::int64_t n = 2; n <= 10; ++n) {
        G expect;
        for (std::int64_t q = 1; q < n; ++q) {
            if (oracle::grid_dispersion(gen_integration_lattice({n, {q}})) == Rational(2, n)) expect.push_back({q});
        }
        CHECK(hit_generators(search_optimal_2d(n)) == expect);
    }
}

TEST_CASE("classification") {
    CHECK(classify_optimal(13, 8) == LatticeClass::Fibonacci);
    CHECK(classify_optimal(13, 5) == LatticeClass::Fibonacci);
    CHECK(classify_optimal(16, 6) == LatticeClass::TwiceFibonacci);
    CHECK(classify_optimal(10, 6) == LatticeClass::TwiceFibonacci);
    CHECK(classify_optimal(6, 2) == LatticeClass::TwiceFibonacci);
    CHECK(classify_optimal(4, 2) == LatticeClass::TwiceFibonacci);
    CHECK(classify_optimal(2, 1) == LatticeClass::Fibonacci);
    CHECK(classify_optimal(13, 4) == LatticeClass::Unclassified);
    CHECK(to_string(LatticeClass::TwiceFibonacci) == "twice_fibonacci");
}

TEST_CASE("range search hits exactly the two families") {
    const auto reports = search_range_2d(2, 200);
    REQUIRE(reports.size() == 199);
    std::vector<std::int64_t> with_hits;
    for (const auto& r : reports) {
        for (const auto& h : r.hits) CHECK(h.cls != LatticeClass::Unclassified);
        if (!r.hits.empty()) with_hits.push_back(r.n);
        CHECK(r.revalidation_ok);

        Rational lowest = r.rows.front().dispersion;
        for (const auto& row : r.rows) lowest = std::min(lowest, row.dispersion);
        CHECK(lowest >= Rational(2, r.n));
    }
    CHECK(with_hits ==
          std::vector<std::int64_t>{2, 3, 4, 5, 6, 8, 10, 13, 16, 21, 26, 34, 42, 55, 68, 89, 110, 144, 178});
}

TEST_CASE("search results do not depend on the worker count") {
    for (std::int64_t n : {34, 55, 60, 97}) {
        const auto a = search_optimal_2d(n, 1);
        const auto b = search_optimal_2d(n, 4);
        CHECK(a.rows == b.rows);
        CHECK(a.hits == b.hits);
    }
    const auto a = search_range_2d(2, 40, 1);
    const auto b = search_range_2d(2, 40, 3);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].rows == b[i].rows);

    CHECK(search_optimal_3d(9, 1).rows == search_optimal_3d(9, 3).rows);
}

TEST_CASE("3D search") {
    CHECK(hit_generators(search_optimal_3d(2)).empty());
    CHECK(hit_generators(search_optimal_3d(3)).size() == 9);
    const auto four = search_optimal_3d(4);
    CHECK(hit_generators(four) == G{{1, 1}, {1, 3}, {3, 1}, {3, 3}});
    CHECK(four.rows.size() == 16);
    CHECK(four.revalidation_ok);
    for (std::int64_t n = 5; n <= 12; ++n) CHECK(hit_generators(search_optimal_3d(n)).empty());

    // Every orbit member carries the value of its representative.
    const auto seven = search_optimal_3d(7);
    for (const auto& row : seven.rows) {
        CHECK(row.dispersion == lattice_dispersion_3d(7, row.generators[0], row.generators[1]).value);
        if (row.generators[0] == 2) CHECK(row.dispersion > Rational(3, 7));
    }
}

TEST_CASE("distortion threshold") {
    CHECK(predicted_threshold(6) == Rational(1, 5));
    CHECK(predicted_threshold(9) == Rational(3, 13));
    CHECK(predicted_threshold(12) == Rational(21, 89));

    const auto r = distortion_threshold(6);
    CHECK(r.threshold == Rational(1, 5));
    CHECK(r.validated);
    CHECK(r.refuted);
    CHECK(periodic_dispersion_2d(gen_distorted_fibonacci({6, Rational(1, 5), Rational(0)})).value == Rational(1, 4));
    CHECK(periodic_dispersion_2d(gen_distorted_fibonacci({6, Rational(21, 100), Rational(0)})).value >
          Rational(1, 4));
    CHECK(periodic_dispersion_2d(gen_distorted_fibonacci({6, Rational(0), Rational(0)})).value == Rational(2, 8));

    const auto sweep = distortion_threshold(6, ThresholdMode::Sweep, Rational(1, 20));
    CHECK(sweep.threshold == Rational(1, 5));
    CHECK(sweep.refuted);

    // Grid oracle for the distorted set at the threshold.
    CHECK(oracle::grid_dispersion(gen_distorted_fibonacci({6, Rational(1, 5), Rational(0)})) == Rational(1, 4));

    const auto nine = distortion_threshold(9);
    CHECK(nine.validated);
    CHECK(nine.refuted);
    CHECK(predicted_threshold(6).to_double() < predicted_threshold(9).to_double());
    CHECK(predicted_threshold(9).to_double() < predicted_threshold(12).to_double());
    CHECK(predicted_threshold(12).to_double() < 0.236068);

    CHECK_THROWS_AS(distortion_threshold(7), std::domain_error);
    CHECK_THROWS_AS(distortion_threshold(6, ThresholdMode::Sweep, Rational(0)), std::domain_error);
}
