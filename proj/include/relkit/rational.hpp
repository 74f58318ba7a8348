#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "relkit/errors.hpp"

namespace relkit {

// Exact rational number over checked 64-bit integers.
//
// Always stored in lowest terms with a positive denominator, so defaulted
// field equality is exact value equality. Intermediate products are taken
// in 128-bit arithmetic; a result that does not fit back into 64 bits
// throws RationalOverflow instead of wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    // NOLINT: implicit on purpose. INT64_MIN is rejected so negation stays total.
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {
        if (n == std::numeric_limits<std::int64_t>::min())
            throw RationalOverflow("Rational: INT64_MIN is not representable");
    }
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (d == 0) throw ZeroDenominator("Rational: zero denominator");
        normalize_small();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw ZeroDenominator("Rational: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;  // lowest terms preserved; INT64_MIN never stored (see make)
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational&) const = default;

    // Comparisons go through 128-bit cross multiplication and never throw.
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "2/3", "-4/3", or just "2" for integers.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Accepts "n", "n/d", with optional leading sign on the numerator.
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    using i128 = __int128;
    using u128 = unsigned __int128;

    static u128 abs128(i128 v) { return v < 0 ? u128(-v) : u128(v); }

    static u128 gcd128(u128 a, u128 b) {
        while (b != 0) {
            u128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(i128 n, i128 d) {
        if (d == 0) throw ZeroDenominator("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n != 0) {
            u128 g = gcd128(abs128(n), u128(d));
            n /= i128(g);
            d /= i128(g);
        } else {
            d = 1;
        }
        // Reject INT64_MIN as well so unary negation stays total.
        constexpr i128 lo = -i128(std::numeric_limits<std::int64_t>::max());
        constexpr i128 hi = i128(std::numeric_limits<std::int64_t>::max());
        if (n < lo || n > hi || d > hi)
            throw RationalOverflow("Rational: value does not fit in 64 bits after reduction");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    void normalize_small() { *this = make(num_, den_); }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw Error("Rational::parse: malformed rational '" + std::string(text) + "'"); };
    std::size_t slash = text.find('/');
    auto to_i64 = [&](std::string_view part) -> std::int64_t {
        if (part.empty()) fail();
        bool neg = false;
        std::size_t i = 0;
        if (part[0] == '+' || part[0] == '-') {
            neg = part[0] == '-';
            i = 1;
            if (part.size() == 1) fail();
        }
        i128 v = 0;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') fail();
            v = v * 10 + (part[i] - '0');
            if (v > i128(std::numeric_limits<std::int64_t>::max())) fail();
        }
        return static_cast<std::int64_t>(neg ? -v : v);
    };
    if (slash == std::string_view::npos) return Rational(to_i64(text));
    return Rational(to_i64(text.substr(0, slash)), to_i64(text.substr(slash + 1)));
}

}  // namespace relkit
