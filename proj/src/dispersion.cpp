#include "fibdisp/dispersion.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fibdisp/detail/sweep.hpp"

namespace fibdisp {

Rational TorusBox::area() const {
    Rational a(1);
    for (const auto& ax : axes) a *= ax.len;
    return a;
}

std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Generic2d: return "generic2d";
        case Algorithm::Nonperiodic2d: return "nonperiodic2d";
        case Algorithm::GenericNd: return "genericNd";
        case Algorithm::LatticeFast2d: return "latticeFast2d";
        case Algorithm::Lattice3d: return "lattice3d";
    }
    return "unknown";
}

namespace detail {

std::vector<Column> columns_of(const GridPointSet& p) {
    std::map<std::int64_t, std::vector<std::int64_t>> by_x;
    for (std::size_t i = 0; i < p.size(); ++i) by_x[p.coord(i, 0)].push_back(p.coord(i, 1));
    std::vector<Column> cols;
    cols.reserve(by_x.size());
    for (auto& [x, ys] : by_x) cols.push_back({x, std::move(ys)});
    return cols;
}

}  // namespace detail

namespace {

using detail::Column;
using detail::GridBox;
using detail::offer;

void require_points(const GridPointSet& p) {
    if (p.empty()) throw std::domain_error("dispersion of an empty point set is undefined");
}

void require_planar(const GridPointSet& p) {
    if (p.dim() != 2) throw std::domain_error("planar solver called on a non-planar set");
}

bool area_fits_int64(std::int64_t den, int dim) {
    return checked_pow(den, dim).has_value();
}

// Longest gap (smallest start on ties) of the occupied cells of a bitmap.
CyclicGapSet::Gap scan_max_gap(const std::vector<char>& occupied) {
    const auto den = static_cast<std::int64_t>(occupied.size());
    std::int64_t first = -1, prev = -1;
    CyclicGapSet::Gap best{0, 0};
    for (std::int64_t y = 0; y < den; ++y) {
        if (!occupied[static_cast<std::size_t>(y)]) continue;
        if (prev < 0) {
            first = y;
        } else if (y - prev > best.length) {
            best = {prev, y - prev};
        }
        prev = y;
    }
    if (prev < 0) return {0, den};
    const std::int64_t wrap = torus_distance(prev, first, den);
    if (wrap > best.length || (wrap == best.length && prev < best.start)) best = {prev, wrap};
    return best;
}

template <class Area>
GridBox<Area> reference_2d(const std::vector<Column>& cols, std::int64_t den) {
    GridBox<Area> best;
    std::vector<char> occupied(static_cast<std::size_t>(den));
    auto fill = [&](auto&& interior) {
        std::fill(occupied.begin(), occupied.end(), 0);
        for (const auto& c : cols) {
            if (!interior(c.x)) continue;
            for (auto y : c.ys) occupied[static_cast<std::size_t>(y)] = 1;
        }
        return scan_max_gap(occupied);
    };

    for (const auto& left : cols) {
        const std::int64_t a = left.x;
        for (const auto& right : cols) {
            const std::int64_t w = right.x == a ? den : torus_distance(a, right.x, den);
            const auto g = fill([&](std::int64_t x) {
                const std::int64_t t = mod(x - a, den);
                return t > 0 && t < w;
            });
            offer<Area>(best, Area(w) * Area(g.length), {2 * a, 2 * g.start}, {w, g.length});
        }
    }
    std::vector<std::int64_t> xs;
    for (const auto& c : cols) xs.push_back(c.x);
    const auto g = fill([](std::int64_t) { return true; });
    offer<Area>(best, Area(den) * Area(g.length), {detail::off_grid_anchor(xs, den), 2 * g.start},
                {den, g.length});
    return best;
}

template <class Area>
GridBox<Area> nonperiodic_2d(const std::vector<Column>& cols, std::int64_t den) {
    // Candidate x-edges: 0, the occupied columns, and den.
    std::vector<const Column*> edge_cols;
    std::vector<std::int64_t> edges;
    if (cols.front().x != 0) {
        edges.push_back(0);
        edge_cols.push_back(nullptr);
    }
    for (const auto& c : cols) {
        edges.push_back(c.x);
        edge_cols.push_back(&c);
    }
    edges.push_back(den);
    edge_cols.push_back(nullptr);

    GridBox<Area> best;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        CyclicGapSet gaps(den);
        gaps.insert(0);  // the boundaries y = 0 and y = 1 coincide on the circle
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const std::int64_t w = edges[j] - edges[i];
            const auto g = gaps.max_gap();
            offer<Area>(best, Area(w) * Area(g.length), {2 * edges[i], 2 * g.start}, {w, g.length});
            if (edge_cols[j]) {
                for (auto y : edge_cols[j]->ys) gaps.insert(y);
            }
        }
    }
    return best;
}

template <class Area>
class BruteForceNd {
public:
    explicit BruteForceNd(const GridPointSet& p) : p_(p), den_(p.den()), dim_(p.dim()) {
        for (int a = 0; a < dim_; ++a) {
            std::vector<std::int64_t> v;
            for (std::size_t i = 0; i < p.size(); ++i) v.push_back(p.coord(i, a));
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            distinct_.push_back(std::move(v));
        }
        full_volume_ = Area(1);
        for (int a = 0; a < dim_; ++a) full_volume_ *= Area(den_);
    }

    GridBox<Area> run() {
        std::vector<std::size_t> all(p_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        lo_.assign(static_cast<std::size_t>(dim_), 0);
        len_.assign(static_cast<std::size_t>(dim_), 0);
        recurse(0, all, Area(1));
        return best_;
    }

private:
    void recurse(int axis, const std::vector<std::size_t>& inside, const Area& partial) {
        const auto ax = static_cast<std::size_t>(axis);
        if (axis == dim_ - 1) {
            std::vector<char> occupied(static_cast<std::size_t>(den_));
            for (auto i : inside) occupied[static_cast<std::size_t>(p_.coord(i, axis))] = 1;
            const auto g = scan_max_gap(occupied);
            lo_[ax] = 2 * g.start;
            len_[ax] = g.length;
            offer<Area>(best_, partial * Area(g.length), lo_, len_);
            return;
        }
        Area rest(1);
        for (int a = axis + 1; a < dim_; ++a) rest *= Area(den_);

        auto descend = [&](std::int64_t lo_half, std::int64_t w, auto&& interior) {
            const Area next = partial * Area(w);
            if (best_.valid && next * rest < best_.area) return;
            std::vector<std::size_t> kept;
            for (auto i : inside) {
                if (interior(p_.coord(i, axis))) kept.push_back(i);
            }
            lo_[ax] = lo_half;
            len_[ax] = w;
            recurse(axis + 1, kept, next);
        };

        for (auto a : distinct_[ax]) {
            for (auto b : distinct_[ax]) {
                const std::int64_t w = b == a ? den_ : torus_distance(a, b, den_);
                descend(2 * a, w, [&](std::int64_t c) {
                    const std::int64_t t = mod(c - a, den_);
                    return t > 0 && t < w;
                });
            }
        }
        descend(detail::off_grid_anchor(distinct_[ax], den_), den_, [](std::int64_t) { return true; });
    }

    const GridPointSet& p_;
    std::int64_t den_;
    int dim_;
    std::vector<std::vector<std::int64_t>> distinct_;
    Area full_volume_;
    std::vector<std::int64_t> lo_, len_;
    GridBox<Area> best_;
};

}  // namespace

DispersionResult periodic_dispersion_2d(const GridPointSet& p) {
    require_points(p);
    if (p.dim() != 2) return periodic_dispersion_nd(p);
    const auto cols = detail::columns_of(p);
    if (area_fits_int64(p.den(), 2)) {
        return detail::to_result(detail::sweep_periodic_2d<std::int64_t>(cols, p.den()), p.den(),
                                 Algorithm::Generic2d);
    }
    return detail::to_result(detail::sweep_periodic_2d<BigInt>(cols, p.den()), p.den(),
                             Algorithm::Generic2d);
}

DispersionResult periodic_dispersion_2d_reference(const GridPointSet& p) {
    require_points(p);
    require_planar(p);
    const auto cols = detail::columns_of(p);
    if (area_fits_int64(p.den(), 2)) {
        return detail::to_result(reference_2d<std::int64_t>(cols, p.den()), p.den(), Algorithm::Generic2d);
    }
    return detail::to_result(reference_2d<BigInt>(cols, p.den()), p.den(), Algorithm::Generic2d);
}

DispersionResult nonperiodic_dispersion_2d(const GridPointSet& p) {
    require_points(p);
    require_planar(p);
    const auto cols = detail::columns_of(p);
    if (area_fits_int64(p.den(), 2)) {
        return detail::to_result(nonperiodic_2d<std::int64_t>(cols, p.den()), p.den(),
                                 Algorithm::Nonperiodic2d);
    }
    return detail::to_result(nonperiodic_2d<BigInt>(cols, p.den()), p.den(), Algorithm::Nonperiodic2d);
}

DispersionResult periodic_dispersion_nd(const GridPointSet& p) {
    require_points(p);
    if (area_fits_int64(p.den(), p.dim())) {
        return detail::to_result(BruteForceNd<std::int64_t>(p).run(), p.den(), Algorithm::GenericNd);
    }
    return detail::to_result(BruteForceNd<BigInt>(p).run(), p.den(), Algorithm::GenericNd);
}

bool box_is_empty(const GridPointSet& p, const TorusBox& b) {
    if (b.axes.size() != static_cast<std::size_t>(p.dim())) {
        throw std::invalid_argument("box dimension does not match point set");
    }
    for (const auto& ax : b.axes) {
        if (ax.len.sign() <= 0) return true;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        bool interior = true;
        for (int a = 0; a < p.dim() && interior; ++a) {
            const Rational t = (p.coordinate(i, a) - b.axes[a].lo).frac();
            interior = t.sign() > 0 && t < b.axes[a].len;
        }
        if (interior) return false;
    }
    return true;
}

std::string to_record(const DispersionResult& r) {
    std::ostringstream os;
    os << r.value;
    for (const auto& ax : r.witness.axes) os << ' ' << ax.lo << '+' << ax.len;
    os << ' ' << to_string(r.algorithm);
    return os.str();
}

std::string to_json(const DispersionResult& r) {
    nlohmann::ordered_json j;
    j["value"] = r.value.str();
    j["witness"] = nlohmann::ordered_json::array();
    for (const auto& ax : r.witness.axes) j["witness"].push_back({{"lo", ax.lo.str()}, {"len", ax.len.str()}});
    j["algorithm"] = to_string(r.algorithm);
    return j.dump();
}

}  // namespace fibdisp
