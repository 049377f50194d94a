#pragma once

// Exact largest empty axis-parallel boxes.
//
// Periodic boxes live on the torus and may wrap around any axis. Boxes are
// closed; only the open interior has to avoid the point set, so points on
// the boundary are allowed. All solvers return the lexicographically
// smallest (lo_1, ..., lo_d, len_1, ..., len_{d-1}) witness among the boxes
// of maximal volume, so results are deterministic.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fibdisp/point_set.hpp"
#include "fibdisp/rational.hpp"

namespace fibdisp {

struct AxisExtent {
    Rational lo;   // in [0, 1)
    Rational len;  // in (0, 1]; 1 is the full wrap
    friend bool operator==(const AxisExtent&, const AxisExtent&) = default;
};

struct TorusBox {
    std::vector<AxisExtent> axes;

    Rational area() const;
    bool wraps(int axis) const { return axes[axis].lo + axes[axis].len > Rational(1); }
    friend bool operator==(const TorusBox&, const TorusBox&) = default;
};

enum class Algorithm { Generic2d, Nonperiodic2d, GenericNd, LatticeFast2d, Lattice3d };

std::string_view to_string(Algorithm a);

struct DispersionResult {
    Rational value;
    TorusBox witness;
    Algorithm algorithm = Algorithm::Generic2d;
    friend bool operator==(const DispersionResult&, const DispersionResult&) = default;
};

// Largest empty periodic box of a planar set; O(n^2 log n) sweep.
// Sets of other dimensions are forwarded to periodic_dispersion_nd.
DispersionResult periodic_dispersion_2d(const GridPointSet& p);

// O(n^3) reference for periodic_dispersion_2d (independent gap scan per
// edge pair). Same witness rule.
DispersionResult periodic_dispersion_2d_reference(const GridPointSet& p);

// Largest empty box inside [0,1]^2 (no wrapping).
DispersionResult nonperiodic_dispersion_2d(const GridPointSet& p);

// Brute force over per-axis edge pairs, any dimension.
DispersionResult periodic_dispersion_nd(const GridPointSet& p);

// true iff no point lies in the open interior of b (wrap aware).
bool box_is_empty(const GridPointSet& p, const TorusBox& b);

// Single-line record "<value> <lo>+<len> ... <algorithm>".
std::string to_record(const DispersionResult& r);
// {"value": ..., "witness": [{"lo": ..., "len": ...}, ...], "algorithm": ...}
std::string to_json(const DispersionResult& r);

}  // namespace fibdisp
