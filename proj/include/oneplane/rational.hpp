#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace oneplane {

/// Exact rational arithmetic for the charge ledger. Numerator and
/// denominator are kept coprime with the denominator positive. The rule
/// constants all have denominator 6, but the equal-split rules can produce
/// other denominators on drawings outside the proof's hypotheses, so a full
/// rational is required. Intermediates use 128-bit products; the magnitudes
/// occurring in a discharge run stay far below that.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    static Rational sixths(std::int64_t n) { return Rational(n, 6); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const { return raw(-num_, den_); }

    Rational& operator+=(const Rational& o) {
        return assign_i128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        return assign_i128(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return assign_i128(i128(num_) * o.den_, i128(den_) * o.num_);
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    bool negative() const { return num_ < 0; }
    bool zero() const { return num_ == 0; }

    /// "p/q" with q omitted when 1; the ledger export format.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    using i128 = __int128;

    static Rational raw(std::int64_t n, std::int64_t d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Rational& assign_i128(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 a = n < 0 ? -n : n;
        i128 b = d;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        assert(n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX && "Rational overflow");
        num_ = static_cast<std::int64_t>(n == 0 ? 0 : n);
        den_ = static_cast<std::int64_t>(n == 0 ? 1 : d);
        return *this;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace oneplane
