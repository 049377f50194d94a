#include "fibdisp/numeric.hpp"

#include <stdexcept>
#include <string>

namespace fibdisp {

std::int64_t fib(int k) {
    if (k < -2) {
        throw std::domain_error("fib: index " + std::to_string(k) + " below -2");
    }
    if (k > 92) {
        throw std::overflow_error("fib: F(" + std::to_string(k) + ") exceeds 64 bits");
    }
    if (k == -2) return -1;
    if (k == -1) return 1;
    std::int64_t a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        std::int64_t t = a + b;
        a = b;
        b = t;
    }
    return a;
}

BigInt fib_big(int k) {
    if (k < -2) {
        throw std::domain_error("fib: index " + std::to_string(k) + " below -2");
    }
    if (k == -2) return -1;
    if (k == -1) return 1;
    BigInt a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        BigInt t = a + b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

int fib_index(std::int64_t n) {
    if (n < 2) {
        throw std::domain_error("fib_index: n must be >= 2");
    }
    int m = 3;
    while (fib(m + 1) <= n) ++m;
    return m;
}

std::optional<int> fibonacci_index_of(std::int64_t n) {
    if (n < 2) return std::nullopt;
    int m = fib_index(n);
    if (fib(m) == n) return m;
    return std::nullopt;
}

std::int64_t torus_distance(std::int64_t a, std::int64_t b, std::int64_t n) {
    if (n <= 0) {
        throw std::domain_error("torus_distance: modulus must be positive");
    }
    if (b > a) return b - a;
    if (b < a) return n + b - a;
    return n;
}

std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
    return r;
}

std::optional<std::int64_t> checked_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        auto next = checked_mul(r, base);
        if (!next) return std::nullopt;
        r = *next;
    }
    return r;
}

}  // namespace fibdisp
