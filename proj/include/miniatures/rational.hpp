#pragma once

// Exact rational arithmetic over arbitrary-precision integers.
//
// Every quantity the library computes (volumes, averages, similarity
// ratios) is an exact fraction; no floating point enters any computation.
// Doubles appear only in display helpers.
//
// Invariants: gcd(|num|, den) = 1 and den >= 1 at all times; zero is 0/1.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace miniatures {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(BigInt n) : num_(std::move(n)) {}
    Rational(long long n) : num_(n) {}
    Rational(int n) : num_(n) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // reduced canonical form makes equality field-wise
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "p" or "p/q" (q > 0 after reduction; "3/-6" is accepted and normalized).
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(BigInt(std::string(text)));
            BigInt p{std::string(text.substr(0, slash))};
            BigInt q{std::string(text.substr(slash + 1))};
            return Rational(std::move(p), std::move(q));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        }
    }

    /// Display-only conversion; exact up to double precision for any magnitude.
    double to_double() const {
        BigInt q = num_ / den_;
        BigInt r = num_ % den_;
        // r/den in [-1,1); scale into 2^53 so the fractional part keeps full precision
        BigInt scaled = (r << 53) / den_;
        return q.convert_to<double>() + scaled.convert_to<double>() / 9007199254740992.0;
    }

private:
    struct already_reduced {};
    Rational(BigInt n, BigInt d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_{0};
    BigInt den_{1};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned e) {
    Rational result(1);
    Rational b = base;
    while (e) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// Fixed-precision decimal rendering for human-readable tables (display only).
inline std::string to_decimal_string(const Rational& r, int significant_digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, r.to_double());
    return buf;
}

}  // namespace miniatures
