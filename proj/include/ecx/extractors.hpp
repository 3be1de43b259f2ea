#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecx/curve.hpp"
#include "ecx/errors.hpp"

namespace ecx {

/* k-bit output; value < 2^k with k carried explicitly. */
struct BitString {
    uint64_t value = 0;
    int k = 0;

    bool operator==(const BitString&) const = default;

    /* Standard binary, most significant bit first. */
    std::string to_binary_string() const {
        std::string s(k, '0');
        for (int i = 0; i < k; ++i)
            if (value >> (k - 1 - i) & 1) s[i] = '1';
        return s;
    }
};

/* First k coefficients of an abscissa over F_{p^n}, each in [0, p). */
struct CoeffVector {
    std::vector<uint64_t> coeffs;

    bool operator==(const CoeffVector&) const = default;

    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(coeffs[i]);
        }
        return s + "]";
    }
};

/* k least significant bits of the canonical representative in [0, p). */
inline BitString lsb_k(const Fp& x, int k) {
    int nbits = x.field().bit_length();
    if (k < 1 || k > nbits)
        raise(errc::invalid_k, "k = " + std::to_string(k) + " outside [1, " + std::to_string(nbits) + "]");
    uint64_t mask = k >= 64 ? ~uint64_t(0) : (uint64_t(1) << k) - 1;
    return BitString{x.value() & mask, k};
}

inline BitString L_k(const Point<PrimeField>& P, int k) {
    if (P.is_infinity())
        raise(errc::abscissa_undefined, "L_k at the point at infinity");
    return lsb_k(P.x(), k);
}

/* First k coefficients of x(P) in the polynomial basis; requires k < n. */
inline CoeffVector D_k(const Point<ExtField>& P, int k) {
    if (P.is_infinity())
        raise(errc::abscissa_undefined, "D_k at the point at infinity");
    int n = P.curve().field().degree();
    if (k < 1 || k >= n)
        raise(errc::invalid_k, "k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + ")");
    const std::vector<uint64_t>& c = P.x().coeffs();
    return CoeffVector{std::vector<uint64_t>(c.begin(), c.begin() + k)};
}

inline BitString ext1(const Point<PrimeField>& P, const Point<PrimeField>& Q, int k) {
    Point<PrimeField> S = P.curve().add(P, Q);
    if (S.is_infinity())
        raise(errc::abscissa_undefined, "P + Q is the point at infinity");
    return lsb_k(S.x(), k);
}

inline CoeffVector ext2(const Point<ExtField>& P, const Point<ExtField>& Q, int k) {
    int n = P.curve().field().degree();
    if (k < 1 || k >= n)
        raise(errc::invalid_k, "k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + ")");
    Point<ExtField> S = P.curve().add(P, Q);
    if (S.is_infinity())
        raise(errc::abscissa_undefined, "P + Q is the point at infinity");
    return D_k(S, k);
}

} // namespace ecx
