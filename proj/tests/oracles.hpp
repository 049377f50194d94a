#pragma once

// Test-only brute-force oracles, deliberately independent of the library's
// sweep and gap-set machinery.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "fibdisp/point_set.hpp"
#include "fibdisp/rational.hpp"

namespace oracle {

using fibdisp::GridPointSet;
using fibdisp::Rational;

// Largest empty box over every grid-aligned box: lo in {0..D-1}, len in
// {1..D} per axis (non-wrapping boxes only when periodic == false).
// Exhaustive because maximal boxes have grid-aligned faces or full width.
inline Rational grid_dispersion(const GridPointSet& p, bool periodic = true) {
    const std::int64_t D = p.den();
    const int d = p.dim();
    std::vector<std::int64_t> lo(static_cast<std::size_t>(d)), len(static_cast<std::size_t>(d));
    std::int64_t best = 0;

    auto inside = [&](std::int64_t c, std::int64_t l, std::int64_t w) {
        const std::int64_t t = ((c - l) % D + D) % D;
        return t > 0 && t < w;
    };
    std::function<void(int, std::int64_t)> rec = [&](int axis, std::int64_t vol) {
        if (axis == d) {
            if (vol <= best) return;
            for (std::size_t i = 0; i < p.size(); ++i) {
                bool in = true;
                for (int a = 0; a < d && in; ++a) in = inside(p.coord(i, a), lo[a], len[a]);
                if (in) return;
            }
            best = vol;
            return;
        }
        for (std::int64_t l = 0; l < D; ++l) {
            for (std::int64_t w = 1; w <= D; ++w) {
                if (!periodic && l + w > D) break;
                lo[axis] = l;
                len[axis] = w;
                rec(axis + 1, vol * w);
            }
        }
    };
    rec(0, 1);
    std::int64_t scale = 1;
    for (int a = 0; a < d; ++a) scale *= D;
    return {best, scale};
}

// Cyclic gaps between the sorted distinct values (one value -> {n}).
inline std::vector<std::int64_t> naive_gaps(std::vector<std::int64_t> v, std::int64_t n) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<std::int64_t> g;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::int64_t next = i + 1 < v.size() ? v[i + 1] : v[0] + n;
        g.push_back(next - v[i]);
    }
    return g;
}

// Random planar set of `count` distinct points on the grid 1/den.
inline GridPointSet random_set(std::mt19937_64& rng, int count, std::int64_t den, int dim = 2) {
    std::uniform_int_distribution<std::int64_t> u(0, den - 1);
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::int64_t> coords;
    while (static_cast<int>(seen.size()) < count) {
        std::vector<std::int64_t> p;
        for (int a = 0; a < dim; ++a) p.push_back(u(rng));
        if (seen.insert(p).second) coords.insert(coords.end(), p.begin(), p.end());
    }
    return {dim, den, std::move(coords)};
}

}  // namespace oracle
