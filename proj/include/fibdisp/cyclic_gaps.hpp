#pragma once

// Ordered set of distinct values on the circle Z/modulus with the multiset
// of gaps between circular neighbours. Insertion is O(log n): a new value
// replaces the gap containing it by two.
//
// Conventions: an empty set has a single gap {start 0, length modulus};
// a set with one value v has the gap {v, modulus}.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace fibdisp {

class CyclicGapSet {
public:
    struct Gap {
        std::int64_t start = 0;
        std::int64_t length = 0;
        friend bool operator==(const Gap&, const Gap&) = default;
    };

    explicit CyclicGapSet(std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    std::size_t distinct() const { return values_.size(); }
    bool contains(std::int64_t v) const { return values_.count(v) != 0; }

    // Returns false (and changes nothing) when v is already present.
    bool insert(std::int64_t v);

    // Longest gap; ties go to the smallest start.
    Gap max_gap() const;

    // The gap that v falls into strictly (v must not be present).
    Gap gap_containing(std::int64_t v) const;

    // Gap length -> number of gaps of that length, longest first.
    const std::map<std::int64_t, std::int64_t, std::greater<>>& histogram() const { return hist_; }

    // Gaps in circular order starting from the smallest value.
    std::vector<Gap> gaps() const;

    const std::set<std::int64_t>& values() const { return values_; }

private:
    void add_gap(std::int64_t start, std::int64_t length);
    void remove_gap(std::int64_t start, std::int64_t length);
    void check_consistency() const;

    std::int64_t modulus_;
    std::set<std::int64_t> values_;
    std::set<std::pair<std::int64_t, std::int64_t>> by_length_;  // (-length, start)
    std::map<std::int64_t, std::int64_t, std::greater<>> hist_;
};

}  // namespace fibdisp
