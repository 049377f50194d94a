#include "fibdisp/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>

#include "fibdisp/dispersion.hpp"
#include "fibdisp/numeric.hpp"
#include "fibdisp/point_set.hpp"
#include "fibdisp/splitting.hpp"

namespace fibdisp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool by_generators(const SearchRow& a, const SearchRow& b) { return a.generators < b.generators; }

void collect_hits(SearchReport& rep) {
    std::sort(rep.rows.begin(), rep.rows.end(), by_generators);
    for (const auto& r : rep.rows) {
        if (r.optimal) rep.hits.push_back(r);
    }
}

}  // namespace

std::string_view to_string(LatticeClass c) {
    switch (c) {
        case LatticeClass::None: return "none";
        case LatticeClass::Fibonacci: return "fibonacci";
        case LatticeClass::TwiceFibonacci: return "twice_fibonacci";
        case LatticeClass::Unclassified: return "unclassified";
    }
    return "?";
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count && !failed; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

LatticeClass classify_optimal(std::int64_t n, std::int64_t q) {
    if (auto m = fibonacci_index_of(n)) {
        const std::int64_t a = mod(fib(*m - 2), n);
        if (q == a || q == n - a) return LatticeClass::Fibonacci;
    }
    if (n % 2 == 0) {
        // F(1) = F(2) = 1, so n = 2 has two candidate indices.
        for (int j = 1; j <= 92 && fib(j) <= n / 2; ++j) {
            if (fib(j) != n / 2) continue;
            const std::int64_t a = mod(2 * fib(j - 2), n);
            if (a != 0 && (q == a || q == n - a)) return LatticeClass::TwiceFibonacci;
        }
    }
    return LatticeClass::Unclassified;
}

SearchReport search_optimal_2d(std::int64_t n, int jobs) {
    if (n < 2) throw std::domain_error("search needs n >= 2");
    const auto t0 = Clock::now();
    SearchReport rep;
    rep.n = n;
    rep.dim = 2;
    const Rational target(2, n);

    const std::int64_t half = n / 2;
    std::vector<Rational> disp(static_cast<std::size_t>(half));
    parallel_for(disp.size(), jobs, [&](std::size_t i) {
        disp[i] = lattice_dispersion_2d(n, static_cast<std::int64_t>(i) + 1).value;
    });
    rep.candidates_examined = half;

    for (std::int64_t q = 1; q <= half; ++q) {
        const auto& d = disp[static_cast<std::size_t>(q - 1)];
        std::vector<std::int64_t> gens{q};
        if (n - q != q) gens.push_back(n - q);
        for (std::int64_t g : gens) {
            SearchRow row{{g}, d, d == target, LatticeClass::None};
            if (row.optimal) row.cls = classify_optimal(n, g);
            rep.rows.push_back(std::move(row));
        }
    }
    collect_hits(rep);

    if (n <= 60) {
        rep.revalidated = true;
        for (const auto& h : rep.hits) {
            const auto lat = gen_integration_lattice({n, h.generators});
            if (periodic_dispersion_2d(lat).value != target) rep.revalidation_ok = false;
        }
    }
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

std::vector<SearchReport> search_range_2d(std::int64_t n_lo, std::int64_t n_hi, int jobs) {
    if (n_lo < 2 || n_hi < n_lo) throw std::domain_error("search range must satisfy 2 <= lo <= hi");
    std::vector<SearchReport> out(static_cast<std::size_t>(n_hi - n_lo + 1));
    parallel_for(out.size(), jobs, [&](std::size_t i) {
        out[i] = search_optimal_2d(n_lo + static_cast<std::int64_t>(i), 1);
    });
    return out;
}

SearchReport search_optimal_3d(std::int64_t n, int jobs) {
    if (n < 2) throw std::domain_error("search needs n >= 2");
    const auto t0 = Clock::now();
    SearchReport rep;
    rep.n = n;
    rep.dim = 3;
    const Rational target(3, n);

    // Representatives up to q -> n - q on either axis and swapping the axes.
    std::vector<std::pair<std::int64_t, std::int64_t>> reps;
    for (std::int64_t a = 0; a <= n / 2; ++a) {
        for (std::int64_t b = a; b <= n / 2; ++b) reps.emplace_back(a, b);
    }
    std::vector<Rational> disp(reps.size());
    parallel_for(reps.size(), jobs, [&](std::size_t i) {
        disp[i] = lattice_dispersion_3d(n, reps[i].first, reps[i].second).value;
    });
    rep.candidates_examined = static_cast<std::int64_t>(reps.size());

    std::map<std::vector<std::int64_t>, Rational> all;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto [a, b] = reps[i];
        for (std::int64_t x : {a, (n - a) % n}) {
            for (std::int64_t y : {b, (n - b) % n}) {
                all.emplace(std::vector<std::int64_t>{x, y}, disp[i]);
                all.emplace(std::vector<std::int64_t>{y, x}, disp[i]);
            }
        }
    }
    for (auto& [g, d] : all) rep.rows.push_back({g, d, d == target, LatticeClass::None});
    collect_hits(rep);

    if (n <= 12) {
        rep.revalidated = true;
        for (const auto& h : rep.hits) {
            const auto lat = gen_integration_lattice({n, h.generators});
            if (periodic_dispersion_nd(lat).value != target) rep.revalidation_ok = false;
        }
    }
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

Rational predicted_threshold(int m) {
    if (m < 5) throw std::domain_error("threshold prediction needs m >= 5");
    std::optional<Rational> best;
    for (int k = 4; k <= m - 1; ++k) {
        const BigInt fk = fib_big(k), fr = fib_big(m - k + 3);
        const Rational v(2 * fib_big(m) - fk * fr, fr);
        if (!best || v < *best) best = v;
    }
    return *best;
}

ThresholdResult distortion_threshold(int m, ThresholdMode mode, const Rational& step) {
    if (m < 3) throw std::domain_error("distortion needs m >= 3");
    if (fib(m) % 2 != 0) throw std::domain_error("distortion needs an even number of points");
    if (step.sign() <= 0) throw std::domain_error("threshold step must be positive");

    ThresholdResult res;
    res.m = m;
    res.step = step;
    res.predicted = predicted_threshold(m);
    const Rational target(2, fib(m));
    const auto disp_at = [&](const Rational& xi) {
        return periodic_dispersion_2d(gen_distorted_fibonacci({m, xi, Rational(0)})).value;
    };

    if (mode == ThresholdMode::Exact) {
        res.threshold = res.predicted;
        res.validated = res.threshold < Rational(1) && disp_at(res.threshold) == target;
        const Rational above = res.threshold + step;
        res.refuted = above < Rational(1) && disp_at(above) > target;
        return res;
    }

    // Walk up from 0 and stop at the first multiple that breaks optimality.
    Rational xi(0);
    for (; xi < Rational(1); xi = xi + step) {
        if (disp_at(xi) != target) {
            res.refuted = true;
            break;
        }
        res.threshold = xi;
        res.validated = true;
    }
    return res;
}

}  // namespace fibdisp
