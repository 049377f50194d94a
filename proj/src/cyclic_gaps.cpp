#include "fibdisp/cyclic_gaps.hpp"

#include <cassert>
#include <stdexcept>

#include "fibdisp/numeric.hpp"

namespace fibdisp {

CyclicGapSet::CyclicGapSet(std::int64_t modulus) : modulus_(modulus) {
    if (modulus_ <= 0) throw std::domain_error("gap set modulus must be positive");
}

void CyclicGapSet::add_gap(std::int64_t start, std::int64_t length) {
    by_length_.emplace(-length, start);
    ++hist_[length];
}

void CyclicGapSet::remove_gap(std::int64_t start, std::int64_t length) {
    by_length_.erase({-length, start});
    auto it = hist_.find(length);
    if (--it->second == 0) hist_.erase(it);
}

bool CyclicGapSet::insert(std::int64_t v) {
    if (v < 0 || v >= modulus_) throw std::out_of_range("gap set value outside [0, modulus)");
    if (values_.empty()) {
        values_.insert(v);
        add_gap(v, modulus_);
        return true;
    }
    auto [it, fresh] = values_.insert(v);
    if (!fresh) return false;

    auto next = std::next(it) == values_.end() ? values_.begin() : std::next(it);
    auto prev = it == values_.begin() ? std::prev(values_.end()) : std::prev(it);
    const std::int64_t lo = *prev;
    const std::int64_t hi = *next;
    remove_gap(lo, torus_distance(lo, hi, modulus_));
    add_gap(lo, torus_distance(lo, v, modulus_));
    add_gap(v, torus_distance(v, hi, modulus_));
#ifndef NDEBUG
    check_consistency();
#endif
    return true;
}

CyclicGapSet::Gap CyclicGapSet::max_gap() const {
    if (by_length_.empty()) return {0, modulus_};
    const auto& [neg_len, start] = *by_length_.begin();
    return {start, -neg_len};
}

CyclicGapSet::Gap CyclicGapSet::gap_containing(std::int64_t v) const {
    if (values_.empty()) return {0, modulus_};
    auto next = values_.upper_bound(v);
    if (next == values_.end()) next = values_.begin();
    auto prev = values_.lower_bound(v);
    prev = prev == values_.begin() ? std::prev(values_.end()) : std::prev(prev);
    return {*prev, torus_distance(*prev, *next, modulus_)};
}

std::vector<CyclicGapSet::Gap> CyclicGapSet::gaps() const {
    std::vector<Gap> out;
    if (values_.empty()) {
        out.push_back({0, modulus_});
        return out;
    }
    for (auto it = values_.begin(); it != values_.end(); ++it) {
        auto next = std::next(it) == values_.end() ? values_.begin() : std::next(it);
        out.push_back({*it, torus_distance(*it, *next, modulus_)});
    }
    return out;
}

void CyclicGapSet::check_consistency() const {
    Gap best{0, 0};
    for (const auto& g : gaps()) {
        if (g.length > best.length) best = g;
    }
    assert(best == max_gap() && "incremental max gap diverged from recomputation");
    (void)best;
}

}  // namespace fibdisp
