#pragma once

#include <cstdint>
#include <optional>

#include "fibdisp/rational.hpp"

namespace fibdisp {

// Fibonacci numbers with F(1) = F(2) = 1, extended downward by the same
// recursion: F(0) = 0, F(-1) = 1, F(-2) = -1.
// Throws std::domain_error for k < -2, std::overflow_error for k > 92.
std::int64_t fib(int k);

// Arbitrary-precision variant for k >= -2.
BigInt fib_big(int k);

// The unique m >= 3 with F(m) <= n < F(m+1). Requires n >= 2.
int fib_index(std::int64_t n);

// Index m with F(m) == n and m >= 3, if n is a Fibonacci number >= 2.
std::optional<int> fibonacci_index_of(std::int64_t n);

// Oriented distance from a to b on the circle of circumference n:
// b - a if b > a, n + b - a if b < a, and n if a == b.
std::int64_t torus_distance(std::int64_t a, std::int64_t b, std::int64_t n);

// Non-negative residue of a modulo n (n > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

// 64-bit helpers returning nullopt on overflow.
std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b);
std::optional<std::int64_t> checked_pow(std::int64_t base, int exp);

}  // namespace fibdisp
