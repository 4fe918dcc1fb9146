#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "tropattack/errors.hpp"

namespace tropattack {

namespace detail {

using Wide = __int128;

inline Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

inline Wide wide_gcd(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t narrow_checked(Wide v, const char* what) {
    if (v > Wide(std::numeric_limits<std::int64_t>::max()) ||
        v < Wide(std::numeric_limits<std::int64_t>::min())) {
        throw OverflowError(std::string(what) + ": value exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

// Element of the max-plus semiring: an exact rational in lowest terms with a
// positive denominator, or -inf. -inf is encoded as num == 0 && den == 0, so
// structural equality coincides with value equality. All arithmetic is
// overflow-checked and throws OverflowError instead of wrapping.
class TropScalar {
public:
    constexpr TropScalar() = default;  // rational zero, the otimes unit

    TropScalar(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design

    static TropScalar neg_inf() {
        TropScalar s;
        s.den_ = 0;
        return s;
    }

    static TropScalar ratio(long long num, long long den) {
        if (den == 0) throw InputError("ratio: zero denominator");
        detail::Wide n = num;
        detail::Wide d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::Wide g = detail::wide_gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        TropScalar s;
        s.num_ = detail::narrow_checked(n, "ratio");
        s.den_ = detail::narrow_checked(d, "ratio");
        return s;
    }

    bool is_neg_inf() const { return den_ == 0; }
    bool is_finite() const { return den_ != 0; }
    bool is_integer() const { return den_ == 1; }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    // Value as a plain integer; requires den == 1.
    std::int64_t as_integer() const {
        if (den_ != 1) throw InputError("as_integer: not an integer value");
        return num_;
    }

    friend bool operator==(const TropScalar&, const TropScalar&) = default;

    // Total order on R u {-inf} with -inf least.
    friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
        if (a.den_ == 0 || b.den_ == 0) {
            if (a.den_ == b.den_) return std::strong_ordering::equal;
            return a.den_ == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        detail::Wide lhs = detail::Wide(a.num_) * b.den_;
        detail::Wide rhs = detail::Wide(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Tropical addition: max.
inline TropScalar trop_add(const TropScalar& a, const TropScalar& b) {
    return a < b ? b : a;
}

// Tropical multiplication: ordinary addition, with -inf absorbing.
inline TropScalar trop_mul(const TropScalar& a, const TropScalar& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return TropScalar::neg_inf();
    if (a.den() == 1 && b.den() == 1) {
        std::int64_t sum = 0;
        if (__builtin_add_overflow(a.num(), b.num(), &sum)) {
            throw OverflowError("trop_mul: integer sum exceeds 64-bit range");
        }
        return TropScalar(sum);
    }
    detail::Wide ad = a.den();
    detail::Wide bd = b.den();
    detail::Wide g = detail::wide_gcd(ad, bd);
    detail::Wide num = detail::Wide(a.num()) * (bd / g) + detail::Wide(b.num()) * (ad / g);
    detail::Wide den = ad * (bd / g);
    detail::Wide g2 = detail::wide_gcd(num, den);
    if (g2 > 1) {
        num /= g2;
        den /= g2;
    }
    return TropScalar::ratio(detail::narrow_checked(num, "trop_mul"),
                             detail::narrow_checked(den, "trop_mul"));
}

// Tropical multiplicative inverse: ordinary negation. Undefined for -inf.
inline TropScalar trop_neg(const TropScalar& a) {
    if (a.is_neg_inf()) throw InputError("trop_neg: -inf has no tropical inverse");
    if (a.num() == std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("trop_neg: value exceeds 64-bit range");
    }
    return TropScalar::ratio(-a.num(), a.den());
}

// Tropical scalar power: k-fold ordinary multiple. For -inf the power is
// -inf when k > 0 and the otimes unit 0 when k == 0.
inline TropScalar trop_pow(const TropScalar& a, long long k) {
    if (a.is_neg_inf()) {
        if (k > 0) return TropScalar::neg_inf();
        if (k == 0) return TropScalar(0);
        throw InputError("trop_pow: negative power of -inf");
    }
    detail::Wide num = detail::Wide(a.num()) * k;
    detail::Wide den = a.den();
    detail::Wide g = detail::wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return TropScalar::ratio(detail::narrow_checked(num, "trop_pow"),
                             detail::narrow_checked(den, "trop_pow"));
}

// Ordinary rational quotient a / b; both operands finite, b nonzero.
inline TropScalar rational_div(const TropScalar& a, const TropScalar& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) throw InputError("rational_div: -inf operand");
    if (b.num() == 0) throw InputError("rational_div: division by zero");
    detail::Wide num = detail::Wide(a.num()) * b.den();
    detail::Wide den = detail::Wide(a.den()) * b.num();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    detail::Wide g = detail::wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return TropScalar::ratio(detail::narrow_checked(num, "rational_div"),
                             detail::narrow_checked(den, "rational_div"));
}

inline std::string to_string(const TropScalar& s) {
    if (s.is_neg_inf()) return "-inf";
    if (s.den() == 1) return std::to_string(s.num());
    return std::to_string(s.num()) + "/" + std::to_string(s.den());
}

}  // namespace tropattack
