#pragma once

// Finite point sets on the d-torus [0,1)^d stored on a common integer grid.
//
// A point (u_1, ..., u_d) with integer u_i in [0, den) stands for
// (u_1/den, ..., u_d/den). Duplicate points are rejected at construction.

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fibdisp/rational.hpp"

namespace fibdisp {

class GridPointSet {
public:
    GridPointSet(int dim, std::int64_t den, std::vector<std::int64_t> coords,
                 std::vector<std::string> labels = {});

    int dim() const { return dim_; }
    std::int64_t den() const { return den_; }
    std::size_t size() const { return coords_.size() / static_cast<std::size_t>(dim_); }
    bool empty() const { return coords_.empty(); }

    std::span<const std::int64_t> point(std::size_t i) const {
        return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
    }
    std::int64_t coord(std::size_t i, int axis) const {
        return coords_[i * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(axis)];
    }
    Rational coordinate(std::size_t i, int axis) const { return {coord(i, axis), den_}; }
    const std::vector<std::int64_t>& coords() const { return coords_; }

    // Empty when the set carries no labels.
    const std::vector<std::string>& labels() const { return labels_; }

    bool contains(std::span<const std::int64_t> p) const;

    // Same points on the finer grid new_den (a multiple of den()).
    GridPointSet rescaled(std::int64_t new_den) const;

    // Drops the point equal to p; no-op when absent.
    GridPointSet without_point(std::span<const std::int64_t> p) const;
    // Drops every point carrying the given label.
    GridPointSet without_label(const std::string& label) const;

    // Set equality of the represented points (grid and order independent).
    friend bool operator==(const GridPointSet& a, const GridPointSet& b);

private:
    int dim_;
    std::int64_t den_;
    std::vector<std::int64_t> coords_;
    std::vector<std::string> labels_;
};

struct LatticeSpec {
    std::int64_t n = 0;
    std::vector<std::int64_t> generators;  // (q) in 2D, (q1, q2) in 3D
};

struct DistortedFibSpec {
    int m = 0;
    Rational xi;
    Rational eta;
};

// {(k, k F(m-2) mod F(m)) / F(m)}. Requires m >= 3.
GridPointSet gen_fibonacci_lattice(int m);

// {(k, k q_1 mod n, ...) / n : k = 0..n-1}. Generators need not be coprime to n.
GridPointSet gen_integration_lattice(const LatticeSpec& spec);

// Fibonacci lattice with every odd-indexed point shifted by (xi, eta) / F(m).
// Requires F(m) even and xi, eta in [0, 1).
GridPointSet gen_distorted_fibonacci(const DistortedFibSpec& spec);

// Torus symmetries.
struct Translation {
    std::vector<Rational> shift;
};
struct AxisPermutation {
    std::vector<int> order;  // new axis i takes old axis order[i]
};
struct Reflection {
    int axis = 0;  // x -> 1 - x (mod 1)
};
using Symmetry = std::variant<Translation, AxisPermutation, Reflection>;

GridPointSet transform(const GridPointSet& p, const Symmetry& t);

}  // namespace fibdisp
