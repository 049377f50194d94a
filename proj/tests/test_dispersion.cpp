#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "fibdisp/cyclic_gaps.hpp"
#include "fibdisp/dispersion.hpp"
#include "fibdisp/numeric.hpp"
#include "fibdisp/structure.hpp"
#include "oracles.hpp"

using namespace fibdisp;

namespace {

const std::vector<std::int64_t> kOrigin{0, 0};

void check_witness(const GridPointSet& p, const DispersionResult& r) {
    CHECK(r.witness.area() == r.value);
    CHECK(box_is_empty(p, r.witness));
    for (const auto& ax : r.witness.axes) {
        CHECK(ax.lo.sign() >= 0);
        CHECK(ax.lo < Rational(1));
        CHECK(ax.len.sign() > 0);
        CHECK(ax.len <= Rational(1));
    }
}

TorusBox inflate(const TorusBox& b, const Rational& eps) {
    TorusBox out = b;
    for (auto& ax : out.axes) {
        ax.lo = (ax.lo - eps / Rational(2)).frac();
        ax.len = std::min(Rational(1), ax.len + eps);
    }
    return out;
}

}  // namespace

TEST_CASE("periodic dispersion examples") {
    const auto f7 = gen_fibonacci_lattice(7);
    const auto r = periodic_dispersion_2d(f7);
    CHECK(r.value == Rational(2, 13));
    CHECK(r.algorithm == Algorithm::Generic2d);
    check_witness(f7, r);

    const GridPointSet single(2, 1, {0, 0});
    const auto s = periodic_dispersion_2d(single);
    CHECK(s.value == Rational(1));
    CHECK(s.witness.axes[0].len == Rational(1));
    CHECK(s.witness.axes[1].len == Rational(1));
    check_witness(single, s);

    const auto l4 = gen_integration_lattice({4, {1}});
    CHECK(oracle::grid_dispersion(l4) == Rational(9, 16));
    const auto r4 = periodic_dispersion_2d(l4);
    CHECK(r4.value == Rational(9, 16));
    CHECK(r4.witness.axes[0].len == Rational(3, 4));
    CHECK(r4.witness.axes[1].len == Rational(3, 4));

    CHECK(periodic_dispersion_2d(gen_integration_lattice({10, {4}})).value == Rational(1, 5));

    CHECK_THROWS_AS(periodic_dispersion_2d(GridPointSet(2, 5, {})), std::domain_error);
    CHECK(periodic_dispersion_2d(GridPointSet(3, 1, {0, 0, 0})).algorithm == Algorithm::GenericNd);
}

TEST_CASE("nonperiodic dispersion examples") {
    const auto f8 = gen_fibonacci_lattice(8).without_point(kOrigin);
    const auto r8 = nonperiodic_dispersion_2d(f8);
    CHECK(r8.value == Rational(40, 441));
    check_witness(f8, r8);
    for (int a = 0; a < 2; ++a) CHECK_FALSE(r8.witness.wraps(a));

    const GridPointSet half(2, 2, {1, 1});
    CHECK(nonperiodic_dispersion_2d(half).value == Rational(1, 2));

    const auto f9 = gen_fibonacci_lattice(9).without_point(kOrigin);
    CHECK(nonperiodic_dispersion_2d(f9).value == Rational(66, 1156));
}

TEST_CASE("nonperiodic solver matches the grid oracle at m = 5, 6, 7") {
    for (int m = 5; m <= 7; ++m) {
        const auto p = gen_fibonacci_lattice(m).without_point(kOrigin);
        CHECK(nonperiodic_dispersion_2d(p).value == oracle::grid_dispersion(p, false));
    }
}

TEST_CASE("d-dimensional brute force") {
    const GridPointSet single(3, 1, {0, 0, 0});
    CHECK(periodic_dispersion_nd(single).value == Rational(1));

    const auto f6 = gen_fibonacci_lattice(6);
    CHECK(periodic_dispersion_nd(f6).value == Rational(2, 8));

    const auto l = gen_integration_lattice({4, {1, 3}});
    const auto r = periodic_dispersion_nd(l);
    CHECK(r.value == oracle::grid_dispersion(l));
    CHECK(r.value == Rational(3, 4));
    CHECK(r.value >= Rational(3, 4));
    check_witness(l, r);
}

TEST_CASE("box_is_empty") {
    const auto f7 = gen_fibonacci_lattice(7);
    const auto r = periodic_dispersion_2d(f7);
    CHECK(box_is_empty(f7, r.witness));
    CHECK_FALSE(box_is_empty(f7, inflate(r.witness, Rational(1, 1000))));

    TorusBox flat{{{Rational(0), Rational(1)}, {Rational(1, 3), Rational(0)}}};
    CHECK(box_is_empty(f7, flat));

    // Wrapping box around the corner holding (0,0) on its boundary only.
    const GridPointSet p(2, 4, {0, 0, 2, 2});
    CHECK(box_is_empty(p, TorusBox{{{Rational(1, 4), Rational(3, 4)}, {Rational(0), Rational(1)}}}) == false);
    CHECK(box_is_empty(p, TorusBox{{{Rational(0), Rational(1, 2)}, {Rational(0), Rational(1)}}}));
    CHECK_FALSE(box_is_empty(p, TorusBox{{{Rational(3, 4), Rational(1, 2)}, {Rational(3, 4), Rational(1, 2)}}}));
}

TEST_CASE("solvers agree with the grid oracle on random sets") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 150; ++iter) {
        const std::int64_t den = std::uniform_int_distribution<std::int64_t>(2, 9)(rng);
        const int count = std::uniform_int_distribution<int>(1, static_cast<int>(std::min<std::int64_t>(den * den, 8)))(rng);
        const auto p = oracle::random_set(rng, count, den);
        const auto fast = periodic_dispersion_2d(p);
        const auto ref = periodic_dispersion_2d_reference(p);
        const auto nd = periodic_dispersion_nd(p);
        const auto expected = oracle::grid_dispersion(p);
        CHECK(fast.value == expected);
        CHECK(fast == ref);
        CHECK(nd.value == expected);
        check_witness(p, fast);
        check_witness(p, nd);

        const auto np = nonperiodic_dispersion_2d(p);
        CHECK(np.value == oracle::grid_dispersion(p, false));
        CHECK(np.value <= fast.value);
        check_witness(p, np);
    }
}

TEST_CASE("3D brute force agrees with the grid oracle") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 25; ++iter) {
        const std::int64_t den = std::uniform_int_distribution<std::int64_t>(2, 4)(rng);
        const int count = std::uniform_int_distribution<int>(1, 5)(rng);
        const auto p = oracle::random_set(rng, count, den, 3);
        const auto r = periodic_dispersion_nd(p);
        CHECK(r.value == oracle::grid_dispersion(p));
        check_witness(p, r);
    }
}

TEST_CASE("optimized sweep equals the O(n^3) reference, witnesses included") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        const std::int64_t den = std::uniform_int_distribution<std::int64_t>(2, 40)(rng);
        const int count = std::uniform_int_distribution<int>(1, static_cast<int>(std::min<std::int64_t>(den * den, 30)))(rng);
        const auto p = oracle::random_set(rng, count, den);
        CHECK(periodic_dispersion_2d(p) == periodic_dispersion_2d_reference(p));
    }
}

TEST_CASE("lower bound 2/n on random sets") {
    std::mt19937_64 rng(1);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = std::uniform_int_distribution<int>(2, 32)(rng);
        const std::int64_t den = std::uniform_int_distribution<std::int64_t>(n, 64)(rng);
        const auto p = oracle::random_set(rng, n, den);
        CHECK(periodic_dispersion_2d(p).value >= Rational(2, n));
    }
}

TEST_CASE("dispersion is invariant under torus symmetries") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 40; ++iter) {
        const int dim = iter % 4 == 0 ? 3 : 2;
        const std::int64_t den = std::uniform_int_distribution<std::int64_t>(3, dim == 3 ? 6 : 24)(rng);
        const int cells = static_cast<int>(dim == 3 ? den * den * den : den * den);
        const int count = std::uniform_int_distribution<int>(1, std::min(cells, dim == 3 ? 8 : 21))(rng);
        const auto p = oracle::random_set(rng, count, den, dim);
        const Rational base = periodic_dispersion_2d(p).value;

        std::vector<Rational> shift;
        for (int a = 0; a < dim; ++a) shift.emplace_back(std::uniform_int_distribution<std::int64_t>(0, 11)(rng), 7);
        std::vector<int> order(static_cast<std::size_t>(dim));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);

        for (const Symmetry& t : {Symmetry{Translation{shift}}, Symmetry{AxisPermutation{order}},
                                  Symmetry{Reflection{0}}, Symmetry{Reflection{dim - 1}}}) {
            const auto q = transform(p, t);
            CHECK(q.size() == p.size());
            CHECK(periodic_dispersion_2d(q).value == base);
        }
    }
}

TEST_CASE("big-integer area path") {
    // den^2 overflows 64 bits; the solver switches to arbitrary precision.
    const std::int64_t den = std::int64_t{1} << 40;
    const GridPointSet p(2, den, {0, 0, den / 2, den / 2});
    // Whole torus minus the lines x = 0 and y = 1/2.
    const auto r = periodic_dispersion_2d(p);
    CHECK(r.value == Rational(1));
    CHECK(r == periodic_dispersion_2d(GridPointSet(2, 2, {0, 0, 1, 1})));
    CHECK(nonperiodic_dispersion_2d(p).value == Rational(1, 2));
}

TEST_CASE("cyclic gap set keeps the max gap consistent") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 100; ++iter) {
        const std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 60)(rng);
        CyclicGapSet g(n);
        CHECK(g.max_gap() == CyclicGapSet::Gap{0, n});
        std::vector<std::int64_t> values;
        for (int k = 0; k < 40; ++k) {
            const std::int64_t v = std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng);
            const bool fresh = std::find(values.begin(), values.end(), v) == values.end();
            CHECK(g.insert(v) == fresh);
            values.push_back(v);
            const auto expected = oracle::naive_gaps(values, n);
            CHECK(g.max_gap().length == *std::max_element(expected.begin(), expected.end()));
            std::int64_t total = 0;
            for (const auto& [len, count] : g.histogram()) total += len * count;
            CHECK(total == n);
        }
    }
}

TEST_CASE("column count profile") {
    const auto f7 = gen_fibonacci_lattice(7);
    CHECK(column_count_profile(f7, Rational(2, 13)) == CountProfile{2, 2});
    CHECK(column_count_profile(f7, Rational(1, 13)) == CountProfile{1, 1});
    CHECK(column_count_profile(GridPointSet(2, 1, {0, 0}), Rational(1, 2)) == CountProfile{0, 1});
    CHECK(column_count_profile(f7, Rational(1)) == CountProfile{13, 13});
    CHECK_THROWS_AS(column_count_profile(f7, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(column_count_profile(f7, Rational(3, 2)), std::domain_error);

    for (int m = 5; m <= 12; ++m) {
        CHECK(column_count_profile(gen_fibonacci_lattice(m), Rational(2, fib(m))) == CountProfile{2, 2});
    }

    // Window sweep against direct sampling on a fine grid.
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 30; ++iter) {
        const auto p = oracle::random_set(rng, 6, 10);
        const Rational w(std::uniform_int_distribution<std::int64_t>(1, 20)(rng), 20);
        std::int64_t lo = 100, hi = -1;
        for (std::int64_t x = 0; x < 40; ++x) {  // steps of 1/40 hit every breakpoint and gap
            std::int64_t c = 0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                const Rational t = (p.coordinate(i, 0) - Rational(x, 40)).frac();
                if (t < w) ++c;
            }
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        CHECK(column_count_profile(p, w) == CountProfile{lo, hi});
    }
}

TEST_CASE("structure check") {
    const auto rep = structure_check(gen_fibonacci_lattice(7));
    CHECK(rep.kind == GridKind::Regular);
    CHECK(rep.xi1 == Rational(0));
    REQUIRE(rep.permutation.has_value());
    for (std::int64_t k = 0; k < 13; ++k) CHECK((*rep.permutation)[static_cast<std::size_t>(k)] == (5 * k) % 13);

    const auto d = structure_check(gen_distorted_fibonacci({6, Rational(1, 5), 0}));
    CHECK(d.kind == GridKind::TwoGrids);
    CHECK(d.xi1 == Rational(0));
    CHECK(d.xi2 == (Rational(1) + Rational(1, 5)) / Rational(8));

    const GridPointSet irregular(2, 12, {0, 0, 4, 6, 6, 3});
    CHECK(structure_check(irregular).kind == GridKind::Irregular);

    // Shifted Fibonacci lattice: still regular, offset recovered.
    const auto shifted = transform(gen_fibonacci_lattice(6), Translation{{Rational(1, 20), Rational(1, 30)}});
    const auto s = structure_check(shifted);
    CHECK(s.kind == GridKind::Regular);
    CHECK(s.xi1 == Rational(1, 20));
    REQUIRE(s.permutation.has_value());
    for (std::int64_t k = 0; k < 8; ++k) CHECK((*s.permutation)[static_cast<std::size_t>(k)] == (3 * k) % 8);

    // Two grids with equal offsets: every x-coordinate doubled.
    const GridPointSet doubled(2, 4, {0, 0, 0, 2, 2, 1, 2, 3});
    const auto dd = structure_check(doubled);
    CHECK(dd.kind == GridKind::TwoGrids);
    CHECK(dd.xi1 == dd.xi2);
}
