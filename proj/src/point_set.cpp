#include "fibdisp/point_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fibdisp/numeric.hpp"

namespace fibdisp {

namespace {

std::vector<std::vector<std::int64_t>> sorted_points(const GridPointSet& p, std::int64_t scale) {
    std::vector<std::vector<std::int64_t>> pts;
    pts.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto s = p.point(i);
        std::vector<std::int64_t> v(s.begin(), s.end());
        for (auto& c : v) c *= scale;
        pts.push_back(std::move(v));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace

GridPointSet::GridPointSet(int dim, std::int64_t den, std::vector<std::int64_t> coords,
                           std::vector<std::string> labels)
    : dim_(dim), den_(den), coords_(std::move(coords)), labels_(std::move(labels)) {
    if (dim_ < 1) throw std::invalid_argument("point set dimension must be positive");
    if (den_ < 1) throw std::invalid_argument("point set denominator must be positive");
    if (coords_.size() % static_cast<std::size_t>(dim_) != 0) {
        throw std::invalid_argument("coordinate count is not a multiple of the dimension");
    }
    if (!labels_.empty() && labels_.size() != size()) {
        throw std::invalid_argument("label count does not match point count");
    }
    for (auto c : coords_) {
        if (c < 0 || c >= den_) throw std::invalid_argument("coordinate outside [0, 1)");
    }
    auto pts = sorted_points(*this, 1);
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
        throw std::invalid_argument("duplicate point in point set");
    }
}

bool GridPointSet::contains(std::span<const std::int64_t> p) const {
    if (p.size() != static_cast<std::size_t>(dim_)) return false;
    for (std::size_t i = 0; i < size(); ++i) {
        if (std::equal(p.begin(), p.end(), point(i).begin())) return true;
    }
    return false;
}

GridPointSet GridPointSet::rescaled(std::int64_t new_den) const {
    if (new_den < 1 || new_den % den_ != 0) {
        throw std::invalid_argument("rescale target must be a multiple of the denominator");
    }
    const std::int64_t s = new_den / den_;
    std::vector<std::int64_t> c = coords_;
    for (auto& v : c) v *= s;
    return {dim_, new_den, std::move(c), labels_};
}

GridPointSet GridPointSet::without_point(std::span<const std::int64_t> p) const {
    std::vector<std::int64_t> c;
    std::vector<std::string> l;
    for (std::size_t i = 0; i < size(); ++i) {
        auto q = point(i);
        if (p.size() == q.size() && std::equal(p.begin(), p.end(), q.begin())) continue;
        c.insert(c.end(), q.begin(), q.end());
        if (!labels_.empty()) l.push_back(labels_[i]);
    }
    return {dim_, den_, std::move(c), std::move(l)};
}

GridPointSet GridPointSet::without_label(const std::string& label) const {
    std::vector<std::int64_t> c;
    std::vector<std::string> l;
    for (std::size_t i = 0; i < size(); ++i) {
        if (!labels_.empty() && labels_[i] == label) continue;
        auto q = point(i);
        c.insert(c.end(), q.begin(), q.end());
        if (!labels_.empty()) l.push_back(labels_[i]);
    }
    return {dim_, den_, std::move(c), std::move(l)};
}

bool operator==(const GridPointSet& a, const GridPointSet& b) {
    if (a.dim() != b.dim() || a.size() != b.size()) return false;
    const std::int64_t l = std::lcm(a.den(), b.den());
    return sorted_points(a, l / a.den()) == sorted_points(b, l / b.den());
}

GridPointSet gen_fibonacci_lattice(int m) {
    if (m < 3) throw std::domain_error("Fibonacci lattice needs m >= 3");
    return gen_integration_lattice({fib(m), {fib(m - 2)}});
}

GridPointSet gen_integration_lattice(const LatticeSpec& spec) {
    const std::int64_t n = spec.n;
    if (n < 2) throw std::domain_error("integration lattice needs n >= 2");
    if (spec.generators.empty()) throw std::domain_error("integration lattice needs a generator");
    for (auto q : spec.generators) {
        if (q < 0 || q >= n) throw std::domain_error("lattice generator outside [0, n)");
    }
    if (spec.generators.size() == 1 && spec.generators[0] == 0) {
        throw std::domain_error("two-dimensional lattice generator must lie in 1..n-1");
    }
    const int dim = static_cast<int>(spec.generators.size()) + 1;
    std::vector<std::int64_t> c;
    std::vector<std::string> labels;
    c.reserve(static_cast<std::size_t>(n * dim));
    for (std::int64_t k = 0; k < n; ++k) {
        c.push_back(k);
        for (auto q : spec.generators) c.push_back(static_cast<std::int64_t>(
            (static_cast<__int128>(k) * q) % n));
        labels.push_back(std::to_string(k));
    }
    return {dim, n, std::move(c), std::move(labels)};
}

GridPointSet gen_distorted_fibonacci(const DistortedFibSpec& spec) {
    if (spec.m < 3) throw std::domain_error("distorted Fibonacci lattice needs m >= 3");
    const std::int64_t fm = fib(spec.m);
    if (fm % 2 != 0) {
        throw std::invalid_argument("distorted Fibonacci lattice needs an even F(m)");
    }
    for (const Rational* r : {&spec.xi, &spec.eta}) {
        if (r->sign() < 0 || *r >= Rational(1)) {
            throw std::domain_error("distortion shift must lie in [0, 1)");
        }
    }
    const BigInt s_big = lcm(spec.xi.den(), spec.eta.den());
    if (s_big > BigInt(std::int64_t{1} << 40)) throw std::overflow_error("distortion denominator too large");
    const auto s = s_big.convert_to<std::int64_t>();
    const auto den = checked_mul(fm, s);
    if (!den) throw std::overflow_error("distorted lattice denominator overflows");
    const std::int64_t dx = (spec.xi * Rational(s)).num().convert_to<std::int64_t>();
    const std::int64_t dy = (spec.eta * Rational(s)).num().convert_to<std::int64_t>();
    const std::int64_t q = fib(spec.m - 2);

    std::vector<std::int64_t> c;
    std::vector<std::string> labels;
    for (std::int64_t k = 0; k < fm; ++k) {
        std::int64_t x = k * s;
        std::int64_t y = ((k * q) % fm) * s;
        if (k % 2 == 1) {
            x = mod(x + dx, *den);
            y = mod(y + dy, *den);
        }
        c.push_back(x);
        c.push_back(y);
        labels.push_back(std::to_string(k));
    }
    return {2, *den, std::move(c), std::move(labels)};
}

namespace {

struct Apply {
    const GridPointSet& p;

    GridPointSet operator()(const Translation& t) const {
        if (t.shift.size() != static_cast<std::size_t>(p.dim())) {
            throw std::invalid_argument("translation vector has wrong dimension");
        }
        BigInt l = p.den();
        for (const auto& r : t.shift) l = lcm(l, r.den());
        if (l > BigInt(std::int64_t{1} << 40)) throw std::overflow_error("translated grid too fine");
        const auto den = l.convert_to<std::int64_t>();
        GridPointSet q = p.rescaled(den);
        std::vector<std::int64_t> offs;
        for (const auto& r : t.shift) {
            offs.push_back((r.frac() * Rational(den)).num().convert_to<std::int64_t>());
        }
        std::vector<std::int64_t> c = q.coords();
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = mod(c[i] + offs[i % offs.size()], den);
        }
        return {p.dim(), den, std::move(c), p.labels()};
    }

    GridPointSet operator()(const AxisPermutation& t) const {
        std::vector<int> check = t.order;
        std::sort(check.begin(), check.end());
        std::vector<int> ident(static_cast<std::size_t>(p.dim()));
        std::iota(ident.begin(), ident.end(), 0);
        if (check != ident) throw std::invalid_argument("axis order is not a permutation");
        std::vector<std::int64_t> c;
        c.reserve(p.coords().size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (int a : t.order) c.push_back(p.coord(i, a));
        }
        return {p.dim(), p.den(), std::move(c), p.labels()};
    }

    GridPointSet operator()(const Reflection& t) const {
        if (t.axis < 0 || t.axis >= p.dim()) throw std::invalid_argument("reflection axis out of range");
        std::vector<std::int64_t> c = p.coords();
        for (std::size_t i = 0; i < p.size(); ++i) {
            auto& v = c[i * static_cast<std::size_t>(p.dim()) + static_cast<std::size_t>(t.axis)];
            v = mod(-v, p.den());
        }
        return {p.dim(), p.den(), std::move(c), p.labels()};
    }
};

}  // namespace

GridPointSet transform(const GridPointSet& p, const Symmetry& t) {
    return std::visit(Apply{p}, t);
}

}  // namespace fibdisp
