#include "fibdisp/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fibdisp {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt Rational::floor() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_.sign() < 0 && q * den_ != num_) {
        q -= 1;
    }
    return q;
}

Rational Rational::frac() const {
    return *this - Rational(floor());
}

double Rational::to_double() const {
    return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) {
        throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    }
    BigInt v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
        }
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt p = parse_integer(s.substr(0, slash), text);
        BigInt q = parse_integer(s.substr(slash + 1), text);
        if (q.is_zero()) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        r = Rational(std::move(p), std::move(q));
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) {
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        }
        BigInt whole = ip.empty() ? BigInt(0) : parse_integer(ip, text);
        BigInt frac = fp.empty() ? BigInt(0) : parse_integer(fp, text);
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(fp.size()));
        r = Rational(whole * scale + frac, scale);
    } else {
        r = Rational(parse_integer(s, text));
    }
    return negative ? -r : r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

}  // namespace fibdisp
