#include "fibdisp/splitting.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fibdisp/cyclic_gaps.hpp"
#include "fibdisp/detail/sweep.hpp"
#include "fibdisp/numeric.hpp"

namespace fibdisp {

namespace {

void require_sequence_args(std::int64_t n, std::int64_t q, std::int64_t ell) {
    if (n < 2) throw std::domain_error("sequence modulus must be >= 2");
    if (q < 0 || q >= n) throw std::domain_error("sequence step must lie in [0, n)");
    if (ell < 1 || ell > n) throw std::domain_error("sequence length must lie in 1..n");
}

std::int64_t y_at(std::int64_t k, std::int64_t q, std::int64_t n) {
    return static_cast<std::int64_t>((static_cast<__int128>(k) * q) % n);
}

Splitting from_histogram(const std::map<std::int64_t, std::int64_t, std::greater<>>& hist) {
    if (hist.size() > 3) throw std::logic_error("more than three gap lengths");
    std::vector<SplitEntry> e;
    for (const auto& [d, a] : hist) e.push_back({d, a});
    return Splitting(std::move(e));
}

CyclicGapSet gaps_of_prefix(std::int64_t n, std::int64_t q, std::int64_t ell) {
    CyclicGapSet g(n);
    for (std::int64_t k = 0; k < ell; ++k) g.insert(y_at(k, q, n));
    return g;
}

}  // namespace

Splitting::Splitting(std::vector<SplitEntry> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() > 3) {
        throw std::invalid_argument("a splitting has one to three entries");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].distance <= 0 || entries_[i].multiplicity <= 0) {
            throw std::invalid_argument("splitting entries must be positive");
        }
        if (i && entries_[i].distance >= entries_[i - 1].distance) {
            throw std::invalid_argument("splitting distances must be strictly decreasing");
        }
    }
}

std::int64_t Splitting::total() const {
    std::int64_t t = 0;
    for (const auto& e : entries_) t += e.distance * e.multiplicity;
    return t;
}

std::string Splitting::str() const {
    std::ostringstream os;
    os << total() << " =";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        os << (i ? " + " : " ") << entries_[i].multiplicity << '*' << entries_[i].distance;
    }
    return os.str();
}

YSequence y_sequence(std::int64_t n, std::int64_t q, std::int64_t ell) {
    require_sequence_args(n, q, ell);
    YSequence s{n, q, ell, {}, {}};
    for (std::int64_t k = 0; k < ell; ++k) s.values.push_back(y_at(k, q, n));
    s.distinct_sorted = s.values;
    std::sort(s.distinct_sorted.begin(), s.distinct_sorted.end());
    s.distinct_sorted.erase(std::unique(s.distinct_sorted.begin(), s.distinct_sorted.end()),
                            s.distinct_sorted.end());
    return s;
}

Splitting splitting_of(std::int64_t n, std::int64_t q, std::int64_t ell) {
    require_sequence_args(n, q, ell);
    return from_histogram(gaps_of_prefix(n, q, ell).histogram());
}

std::int64_t max_gap(std::int64_t n, std::int64_t q, std::int64_t ell) {
    if (ell == 0) return n;
    require_sequence_args(n, q, ell);
    return gaps_of_prefix(n, q, ell).max_gap().length;
}

bool verify_three_gap(std::int64_t n, std::int64_t q) {
    require_sequence_args(n, q, 1);
    CyclicGapSet g(n);
    for (std::int64_t ell = 1; ell <= n; ++ell) {
        g.insert(y_at(ell - 1, q, n));
        const auto& h = g.histogram();
        if (h.size() > 3) return false;
        if (h.size() == 3) {
            auto it = h.begin();
            const std::int64_t d1 = it->first;
            const std::int64_t d2 = (++it)->first;
            const std::int64_t d3 = (++it)->first;
            if (d1 != d2 + d3) return false;
        }
    }
    return true;
}

LargestSplitReport verify_largest_split(std::int64_t n, std::int64_t q) {
    require_sequence_args(n, q, 1);
    LargestSplitReport rep;
    CyclicGapSet g(n);
    g.insert(0);
    for (std::int64_t ell = 1; ell < n; ++ell) {
        const std::int64_t v = y_at(ell, q, n);
        if (g.contains(v)) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        if (g.gap_containing(v).length != g.max_gap().length && rep.holds) {
            rep.holds = false;
            rep.first_failure = ell;
        }
        g.insert(v);
    }
    return rep;
}

PredictedSplitting predicted_splitting(std::int64_t n, std::int64_t q, int k, std::int64_t j) {
    if (q < 1 || 2 * q > n) throw std::domain_error("predicted_splitting needs 1 <= q and 2q <= n");
    if (k < 3 || k > fib_index(n)) throw std::domain_error("predicted_splitting: k outside 3..fib_index(n)");
    if (j < 1 || j > fib(k - 2)) throw std::domain_error("predicted_splitting: j outside 1..F(k-2)");

    const auto F = [](int i) { return static_cast<__int128>(fib(i)); };
    const __int128 N = n, Q = q;
    const int sign = k % 2 == 1 ? 1 : -1;
    const __int128 d1 = sign * (F(k - 3) * Q - F(k - 5) * N);
    const __int128 d2 = sign * (F(k - 4) * N - F(k - 2) * Q);
    const __int128 d3 = sign * (F(k - 1) * Q - F(k - 3) * N);
    const __int128 a1 = j;
    const __int128 a2 = F(k - 1) - j;
    const __int128 a3 = F(k - 2) - j;

    PredictedSplitting out;
    for (auto [d, a] : {std::pair{d1, a1}, std::pair{d2, a2}, std::pair{d3, a3}}) {
        if (d == 0 || a == 0) continue;
        out.entries.push_back({static_cast<std::int64_t>(d), static_cast<std::int64_t>(a)});
    }
    out.sorted_decreasing = std::is_sorted(out.entries.begin(), out.entries.end(),
                                           [](const SplitEntry& x, const SplitEntry& y) {
                                               return x.distance > y.distance;
                                           });
    return out;
}

bool same_gap_multiset(const std::vector<SplitEntry>& a, const std::vector<SplitEntry>& b) {
    auto merge = [](const std::vector<SplitEntry>& v) {
        std::map<std::int64_t, std::int64_t> m;
        for (const auto& e : v) m[e.distance] += e.multiplicity;
        return m;
    };
    return merge(a) == merge(b);
}

bool ratio_window_check(std::int64_t n, std::int64_t q) {
    if (q < 1 || 2 * q > n) throw std::domain_error("ratio_window_check needs 1 <= q and 2q <= n");
    const __int128 N = n, Q = q;
    const int m = fib_index(n);
    for (int k = 3; k <= m; ++k) {
        const __int128 fk = fib(k), fk1 = fib(k - 1), fk2 = fib(k - 2), fk3 = fib(k - 3);
        bool ok;
        if (k % 2 == 1) {
            // F(k)/F(k-2) <= n/q <= F(k-1)/F(k-3)
            ok = fk * Q <= N * fk2 && N * fk3 <= fk1 * Q;
        } else {
            // F(k-1)/F(k-3) <= n/q <= F(k)/F(k-2)
            ok = fk1 * Q <= N * fk3 && N * fk2 <= fk * Q;
        }
        if (!ok) return false;
    }
    return true;
}

bool adjacency_check(std::int64_t n, std::int64_t q, std::int64_t ell) {
    require_sequence_args(n, q, ell);
    const auto g = gaps_of_prefix(n, q, ell);
    const auto& h = g.histogram();
    if (h.size() < 2) throw std::domain_error("adjacency_check needs at least two gap lengths");
    const std::int64_t d1 = h.begin()->first;
    const std::int64_t d2 = std::next(h.begin())->first;
    const auto gaps = g.gaps();
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        const auto a = gaps[i].length;
        const auto b = gaps[(i + 1) % gaps.size()].length;
        if ((a == d1 && b >= d2) || (b == d1 && a >= d2)) return true;
    }
    return false;
}

DispersionResult lattice_dispersion_2d(std::int64_t n, std::int64_t q) {
    if (n < 2) throw std::domain_error("lattice needs n >= 2");
    if (q < 1 || q >= n) throw std::domain_error("lattice generator must lie in 1..n-1");
    if (!checked_mul(n, n)) throw std::overflow_error("lattice too large for the 64-bit fast path");

    // Boxes spanning the column window 1..ell (left edge on column 0) see the
    // gaps of {kq : k = 1..ell}; every other window is a translate.
    detail::GridBox<std::int64_t> best;
    CyclicGapSet g(n);
    offer<std::int64_t>(best, n, {0, 0}, {1, n});
    for (std::int64_t ell = 1; ell < n; ++ell) {
        g.insert(y_at(ell, q, n));
        const std::int64_t w = ell + 1 < n ? ell + 1 : n;
        const auto gap = g.max_gap();
        offer<std::int64_t>(best, w * gap.length, {0, 2 * gap.start}, {w, gap.length});
    }
    g.insert(0);
    const auto gap = g.max_gap();
    offer<std::int64_t>(best, n * gap.length, {1, 2 * gap.start}, {n, gap.length});
    return detail::to_result(best, n, Algorithm::LatticeFast2d);
}

DispersionResult lattice_dispersion_3d(std::int64_t n, std::int64_t q1, std::int64_t q2) {
    if (n < 2) throw std::domain_error("lattice needs n >= 2");
    if (q1 < 0 || q1 >= n || q2 < 0 || q2 >= n) throw std::domain_error("lattice generators must lie in [0, n)");
    if (!checked_pow(n, 3)) throw std::overflow_error("lattice too large for the 64-bit fast path");

    // Column-window reduction along the first axis: the window 1..ell
    // contributes (ell + 1) times the largest empty planar box of the
    // projected points {(k q1, k q2) : k = 1..ell}.
    std::vector<detail::Column> cols;
    auto add = [&](std::int64_t k) {
        const std::int64_t x = y_at(k, q1, n);
        const std::int64_t y = y_at(k, q2, n);
        auto it = std::lower_bound(cols.begin(), cols.end(), x,
                                   [](const detail::Column& c, std::int64_t v) { return c.x < v; });
        if (it == cols.end() || it->x != x) it = cols.insert(it, detail::Column{x, {}});
        if (std::find(it->ys.begin(), it->ys.end(), y) == it->ys.end()) it->ys.push_back(y);
    };

    detail::GridBox<std::int64_t> best;
    offer<std::int64_t>(best, n * n, {0, 0, 0}, {1, n, n});
    auto window = [&](std::int64_t w, std::int64_t lo_half) {
        const auto plane = detail::sweep_periodic_2d<std::int64_t>(cols, n);
        offer<std::int64_t>(best, w * plane.area, {lo_half, plane.lo_half[0], plane.lo_half[1]},
                            {w, plane.len[0], plane.len[1]});
    };
    for (std::int64_t ell = 1; ell < n; ++ell) {
        add(ell);
        window(ell + 1 < n ? ell + 1 : n, 0);
    }
    add(0);
    window(n, 1);
    return detail::to_result(best, n, Algorithm::Lattice3d);
}

Rational fib_dispersion_formula(int m) {
    if (m < 3) throw std::domain_error("fib_dispersion_formula needs m >= 3");
    BigInt best = 0;
    for (int k = 3; k <= m; ++k) best = std::max(best, BigInt(fib_big(k) * fib_big(m - k + 3)));
    const BigInt fm = fib_big(m);
    return {best, fm * fm};
}

Rational fib_nonperiodic_formula(int m) {
    if (m < 5) throw std::domain_error("fib_nonperiodic_formula needs m >= 5");
    const BigInt fm = fib_big(m);
    BigInt best = 2 * (fm - 1);
    for (int j = 4; j <= m - 1; ++j) best = std::max(best, BigInt(fib_big(j) * fib_big(m + 3 - j)));
    return {best, fm * fm};
}

std::vector<SplittingRow> splitting_table(std::int64_t n, std::int64_t q, std::int64_t ell_max) {
    require_sequence_args(n, q, std::max<std::int64_t>(ell_max, 1));
    std::vector<SplittingRow> rows;
    CyclicGapSet g(n);
    for (std::int64_t ell = 1; ell <= ell_max; ++ell) {
        g.insert(y_at(ell - 1, q, n));
        SplittingRow row{ell, from_histogram(g.histogram()), std::nullopt, std::nullopt};
        if (ell < n) {
            const std::int64_t v = y_at(ell, q, n);
            row.new_value = v;
            row.split_gap_len = g.contains(v) ? 0 : g.gap_containing(v).length;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace fibdisp
