#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fibdisp/point_set.hpp"
#include "fibdisp/rational.hpp"

namespace fibdisp {

struct CountProfile {
    std::int64_t min = 0;
    std::int64_t max = 0;
    friend bool operator==(const CountProfile&, const CountProfile&) = default;
};

// Min and max over x in [0,1) of the number of points whose first
// coordinate lies in the periodic window [x, x + w). Requires 0 < w <= 1.
CountProfile column_count_profile(const GridPointSet& p, const Rational& w);

enum class GridKind {
    Regular,      // x-coordinates are xi + k/n
    TwoGrids,     // union of xi_1 + 2k/n and xi_2 + 2k/n (n even)
    Irregular,
};

struct StructureReport {
    GridKind kind = GridKind::Irregular;
    Rational xi1;  // offset of the (first) grid
    Rational xi2;  // second offset, TwoGrids only
    // For a regular grid whose y-coordinates also form a regular grid:
    // the point in x-slot k sits in y-slot permutation[k].
    std::optional<std::vector<std::int64_t>> permutation;
};

StructureReport structure_check(const GridPointSet& p);

}  // namespace fibdisp
