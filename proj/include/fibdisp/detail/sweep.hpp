#pragma once

// Grid-unit machinery shared by the dispersion solvers. Boxes are kept in
// integer units of 1/den: lo is stored doubled (lo_half = 2 * lo) so the
// off-grid full-wrap anchor (a midpoint between two columns) stays integral.
// Area is std::int64_t when den^d fits, BigInt otherwise.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <type_traits>
#include <vector>

#include "fibdisp/cyclic_gaps.hpp"
#include "fibdisp/dispersion.hpp"
#include "fibdisp/numeric.hpp"

namespace fibdisp::detail {

struct Column {
    std::int64_t x = 0;
    std::vector<std::int64_t> ys;
};

template <class Area>
struct GridBox {
    Area area{};
    std::vector<std::int64_t> lo_half;
    std::vector<std::int64_t> len;
    bool valid = false;
};

// Larger area wins; equal areas go to the lexicographically smaller
// (lo_half, len) key.
template <class Area, class Seq>
void offer(GridBox<Area>& best, const std::type_identity_t<Area>& area, const Seq& lo_half, const Seq& len) {
    if (best.valid) {
        if (area < best.area) return;
        if (area == best.area) {
            if (std::lexicographical_compare(best.lo_half.begin(), best.lo_half.end(),
                                             lo_half.begin(), lo_half.end())) {
                return;
            }
            if (std::equal(best.lo_half.begin(), best.lo_half.end(), lo_half.begin(), lo_half.end()) &&
                !std::lexicographical_compare(len.begin(), len.end(), best.len.begin(), best.len.end())) {
                return;
            }
        }
    }
    best.area = area;
    best.lo_half.assign(lo_half.begin(), lo_half.end());
    best.len.assign(len.begin(), len.end());
    best.valid = true;
}

template <class Area>
void offer(GridBox<Area>& best, const std::type_identity_t<Area>& area, std::initializer_list<std::int64_t> lo_half,
           std::initializer_list<std::int64_t> len) {
    offer<Area, std::initializer_list<std::int64_t>>(best, area, lo_half, len);
}

// Columns sorted by x; duplicate points are not expected.
std::vector<Column> columns_of(const GridPointSet& p);

// Off-grid anchor (doubled units) for a full wrap along an axis whose
// occupied coordinates are the sorted distinct values `occupied`.
inline std::int64_t off_grid_anchor(const std::vector<std::int64_t>& occupied, std::int64_t den) {
    if (occupied.size() >= 2) return occupied[0] + occupied[1];
    if (occupied.empty()) return 0;
    return mod(2 * occupied[0] + den, 2 * den);
}

// Largest empty periodic box for the planar point set given by columns.
template <class Area>
GridBox<Area> sweep_periodic_2d(const std::vector<Column>& cols, std::int64_t den) {
    GridBox<Area> best;
    if (cols.empty()) {
        offer(best, Area(den) * Area(den), {0, 0}, {den, den});
        return best;
    }
    const std::size_t count = cols.size();
    for (std::size_t i = 0; i < count; ++i) {
        const std::int64_t a = cols[i].x;
        CyclicGapSet gaps(den);
        for (std::size_t j = 1; j < count; ++j) {
            const Column& c = cols[(i + j) % count];
            const std::int64_t w = torus_distance(a, c.x, den);
            const auto g = gaps.max_gap();
            offer(best, Area(w) * Area(g.length), {2 * a, 2 * g.start}, {w, g.length});
            for (auto y : c.ys) gaps.insert(y);
        }
        const auto g = gaps.max_gap();
        offer(best, Area(den) * Area(g.length), {2 * a, 2 * g.start}, {den, g.length});
    }

    CyclicGapSet all(den);
    std::vector<std::int64_t> xs;
    for (const auto& c : cols) {
        xs.push_back(c.x);
        for (auto y : c.ys) all.insert(y);
    }
    const auto g = all.max_gap();
    offer(best, Area(den) * Area(g.length), {off_grid_anchor(xs, den), 2 * g.start}, {den, g.length});
    return best;
}

template <class Area>
Rational area_over(const Area& area, std::int64_t den, int dim) {
    BigInt scale = 1;
    for (int i = 0; i < dim; ++i) scale *= den;
    return {BigInt(area), scale};
}

template <class Area>
DispersionResult to_result(const GridBox<Area>& b, std::int64_t den, Algorithm alg) {
    DispersionResult r;
    const int dim = static_cast<int>(b.len.size());
    r.value = area_over(b.area, den, dim);
    for (int i = 0; i < dim; ++i) {
        r.witness.axes.push_back({Rational(b.lo_half[i], 2 * den), Rational(b.len[i], den)});
    }
    r.algorithm = alg;
    return r;
}

}  // namespace fibdisp::detail
