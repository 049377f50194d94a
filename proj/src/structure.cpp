#include "fibdisp/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fibdisp/numeric.hpp"

namespace fibdisp {

CountProfile column_count_profile(const GridPointSet& p, const Rational& w) {
    if (p.dim() != 2) throw std::domain_error("column_count_profile needs a planar set");
    if (w.sign() <= 0 || w > Rational(1)) throw std::domain_error("window width must lie in (0, 1]");

    // Work on a grid fine enough for coordinates, window ends and midpoints.
    const BigInt unit_big = lcm(BigInt(p.den()), w.den()) * 2;
    if (unit_big > BigInt(std::int64_t{1} << 40)) throw std::overflow_error("window grid too fine");
    const auto unit = unit_big.convert_to<std::int64_t>();
    const std::int64_t scale = unit / p.den();
    const std::int64_t width = (w * Rational(unit)).num().convert_to<std::int64_t>();

    std::vector<std::int64_t> xs;
    for (std::size_t i = 0; i < p.size(); ++i) xs.push_back(p.coord(i, 0) * scale);

    // The count is constant between consecutive breakpoints x = c and x = c - w.
    std::vector<std::int64_t> breaks;
    for (auto c : xs) {
        breaks.push_back(c);
        breaks.push_back(mod(c - width, unit));
    }
    if (breaks.empty()) breaks.push_back(0);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::vector<std::int64_t> probes = breaks;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        const std::int64_t a = breaks[i];
        const std::int64_t b = i + 1 < breaks.size() ? breaks[i + 1] : breaks[0] + unit;
        if (b - a >= 2) probes.push_back(mod(a + (b - a) / 2, unit));
    }

    CountProfile out{static_cast<std::int64_t>(p.size()) + 1, -1};
    for (auto x : probes) {
        std::int64_t count = 0;
        for (auto c : xs) {
            if (mod(c - x, unit) < width) ++count;
        }
        out.min = std::min(out.min, count);
        out.max = std::max(out.max, count);
    }
    return out;
}

namespace {

// If the sorted values form {offset + k*den/n}, returns the offset.
std::optional<std::int64_t> regular_offset(const std::vector<std::int64_t>& sorted, std::int64_t den) {
    const auto n = static_cast<std::int64_t>(sorted.size());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if ((sorted[i] - sorted[i - 1]) * n != den) return std::nullopt;
    }
    if (sorted.front() * n >= den) return std::nullopt;
    return sorted.front();
}

}  // namespace

StructureReport structure_check(const GridPointSet& p) {
    if (p.dim() != 2) throw std::domain_error("structure_check needs a planar set");
    StructureReport rep;
    const auto n = static_cast<std::int64_t>(p.size());
    const std::int64_t den = p.den();
    if (n == 0) return rep;

    std::vector<std::int64_t> xs, ys;
    for (std::size_t i = 0; i < p.size(); ++i) {
        xs.push_back(p.coord(i, 0));
        ys.push_back(p.coord(i, 1));
    }
    std::vector<std::int64_t> sx = xs, sy = ys;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());

    if (auto xi = regular_offset(sx, den)) {
        rep.kind = GridKind::Regular;
        rep.xi1 = rep.xi2 = Rational(*xi, den);
        if (auto eta = regular_offset(sy, den)) {
            std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < p.size(); ++i) {
                // slot = (value - offset) * n / den, exact on a regular grid
                const std::int64_t kx = (xs[i] - *xi) * n / den;
                const std::int64_t ky = (ys[i] - *eta) * n / den;
                perm[static_cast<std::size_t>(kx)] = ky;
            }
            rep.permutation = std::move(perm);
        }
        return rep;
    }

    if (n % 2 == 0) {
        // Residues modulo 2/n and slots floor(x n / 2), compared via x * n.
        const std::int64_t half = n / 2;
        std::map<std::int64_t, std::vector<std::int64_t>> by_residue;  // residue*n -> slots
        bool ok = true;
        for (auto x : sx) {
            const std::int64_t scaled = x * half;  // x/den * n/2, in units of 1/den
            by_residue[scaled % den].push_back(scaled / den);
        }
        auto full_slots = [&](std::vector<std::int64_t> s, std::int64_t copies) {
            std::sort(s.begin(), s.end());
            if (static_cast<std::int64_t>(s.size()) != half * copies) return false;
            for (std::int64_t k = 0; k < half * copies; ++k) {
                if (s[static_cast<std::size_t>(k)] != k / copies) return false;
            }
            return true;
        };
        std::vector<Rational> offsets;
        if (by_residue.size() == 2) {
            for (auto& [res, slots] : by_residue) {
                ok = ok && full_slots(slots, 1);
                offsets.emplace_back(res, den * half);
            }
        } else if (by_residue.size() == 1) {
            auto& [res, slots] = *by_residue.begin();
            ok = full_slots(slots, 2);
            offsets.assign(2, Rational(res, den * half));
        } else {
            ok = false;
        }
        if (ok) {
            rep.kind = GridKind::TwoGrids;
            rep.xi1 = offsets[0];
            rep.xi2 = offsets[1];
            return rep;
        }
    }
    return rep;
}

}  // namespace fibdisp
