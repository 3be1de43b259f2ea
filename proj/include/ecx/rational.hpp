#pragma once

#include <cstdint>
#include <string>

#include "ecx/errors.hpp"

namespace ecx {

using int128 = __int128;

namespace detail {

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) raise(errc::arithmetic_overflow, "rational add");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) raise(errc::arithmetic_overflow, "rational sub");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) raise(errc::arithmetic_overflow, "rational mul");
    return r;
}

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u != 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

} // namespace detail

/* Exact rational with 128-bit numerator/denominator and overflow-checked
 * operations. Denominator is kept positive and the fraction reduced, so
 * equality is plain member comparison. Desk-scale counts (capped pair
 * enumerations) stay far inside the 128-bit range; anything larger fails
 * loudly instead of silently losing exactness. */
class rational {
public:
    rational() = default;

    rational(int128 num, int128 den) {
        if (den == 0) raise(errc::division_by_zero, "rational with zero denominator");
        if (den < 0) {
            num = detail::checked_sub(0, num);
            den = detail::checked_sub(0, den);
        }
        int128 g = detail::gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num_ = num;
        den_ = den;
    }

    static rational from_int(int128 v) { return rational(v, 1); }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    rational operator+(const rational& o) const {
        return rational(detail::checked_add(detail::checked_mul(num_, o.den_),
                                            detail::checked_mul(o.num_, den_)),
                        detail::checked_mul(den_, o.den_));
    }
    rational operator-(const rational& o) const {
        return rational(detail::checked_sub(detail::checked_mul(num_, o.den_),
                                            detail::checked_mul(o.num_, den_)),
                        detail::checked_mul(den_, o.den_));
    }
    rational operator*(const rational& o) const {
        return rational(detail::checked_mul(num_, o.num_), detail::checked_mul(den_, o.den_));
    }
    rational operator/(const rational& o) const {
        if (o.num_ == 0) raise(errc::division_by_zero, "rational division by zero");
        return rational(detail::checked_mul(num_, o.den_), detail::checked_mul(den_, o.num_));
    }

    rational abs() const { return num_ < 0 ? rational(-num_, den_) : *this; }

    bool operator==(const rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const rational& o) const { return !(*this == o); }
    bool operator<(const rational& o) const {
        return detail::checked_mul(num_, o.den_) < detail::checked_mul(o.num_, den_);
    }
    bool operator<=(const rational& o) const { return !(o < *this); }
    bool operator>(const rational& o) const { return o < *this; }
    bool operator>=(const rational& o) const { return !(*this < o); }

    double to_double() const { return double(num_) / double(den_); }

    std::string to_string() const {
        return detail::int128_to_string(num_) + "/" + detail::int128_to_string(den_);
    }

private:
    int128 num_ = 0;
    int128 den_ = 1;
};

} // namespace ecx
