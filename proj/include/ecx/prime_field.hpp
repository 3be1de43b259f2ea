#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ecx/errors.hpp"

namespace ecx {

namespace detail {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)(((unsigned __int128)a * b) % m);
}

inline uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/* Deterministic Miller-Rabin; the witness set covers all n < 2^64. */
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline int bit_length_u64(uint64_t v) { return v == 0 ? 0 : 64 - std::countl_zero(v); }

/* Square roots in any finite field of odd characteristic (Tonelli-Shanks).
 * `Field` must expose cardinality(), from_index(), one() and element
 * multiplication/equality. Returns 0, 1 or 2 roots in ascending index order.
 */
template <class Field, class Elem>
Elem pow_elem(const Field&, Elem base, uint64_t exp) {
    Elem acc = base.field_one();
    while (exp) {
        if (exp & 1) acc = acc * base;
        base = base * base;
        exp >>= 1;
    }
    return acc;
}

template <class Field>
std::vector<typename Field::Element> sqrt_tonelli(const Field& F, const typename Field::Element& a) {
    using Elem = typename Field::Element;
    std::vector<Elem> roots;
    if (a.is_zero()) {
        roots.push_back(a);
        return roots;
    }
    const uint64_t q = F.cardinality();
    const Elem one = F.from_index(1);
    Elem ls = pow_elem(F, a, (q - 1) / 2);
    if (!(ls == one)) return roots; // non-residue

    uint64_t m = q - 1;
    int s = std::countr_zero(m);
    m >>= s;

    // deterministic scan for a quadratic non-residue
    Elem z = one;
    for (uint64_t idx = 2; idx < q; ++idx) {
        z = F.from_index(idx);
        if (!z.is_zero() && !(pow_elem(F, z, (q - 1) / 2) == one)) break;
    }

    Elem c = pow_elem(F, z, m);
    Elem t = pow_elem(F, a, m);
    Elem r = pow_elem(F, a, (m + 1) / 2);
    int e = s;
    while (!(t == one)) {
        Elem t2 = t;
        int i = 0;
        while (!(t2 == one)) {
            t2 = t2 * t2;
            ++i;
        }
        Elem b = c;
        for (int j = 0; j < e - i - 1; ++j) b = b * b;
        r = r * b;
        c = b * b;
        t = t * c;
        e = i;
    }

    Elem neg_r = -r;
    if (r == neg_r) {
        roots.push_back(r);
    } else if (F.index_of(r) < F.index_of(neg_r)) {
        roots.push_back(r);
        roots.push_back(neg_r);
    } else {
        roots.push_back(neg_r);
        roots.push_back(r);
    }
    return roots;
}

} // namespace detail

class PrimeField;

/* Canonical residue in [0, p). Carries a pointer to its field; operations on
 * elements of different fields fail loudly. */
class Fp {
public:
    Fp() = default;

    uint64_t value() const { return v_; }
    const PrimeField& field() const {
        if (!f_) raise(errc::field_mismatch, "detached field element");
        return *f_;
    }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator/(const Fp& o) const;
    Fp operator-() const;
    Fp inv() const;
    Fp field_one() const;

    bool operator==(const Fp& o) const;
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v_); }

private:
    friend class PrimeField;
    Fp(uint64_t v, const PrimeField* f) : v_(v), f_(f) {}

    uint64_t v_ = 0;
    const PrimeField* f_ = nullptr;
};

/* F_p for prime p with 5 < p < 2^62. Double-width intermediates keep every
 * product exact below the modulus cap. */
class PrimeField {
public:
    using Element = Fp;

    static constexpr uint64_t max_modulus = uint64_t(1) << 62;

    explicit PrimeField(uint64_t p) : p_(p) {
        if (p <= 5) raise(errc::invalid_parameter, "modulus must exceed 5, got " + std::to_string(p));
        if (p >= max_modulus) raise(errc::invalid_parameter, "modulus must be below 2^62");
        if (!detail::is_prime_u64(p)) raise(errc::invalid_parameter, std::to_string(p) + " is not prime");
    }

    uint64_t modulus() const { return p_; }
    uint64_t cardinality() const { return p_; }
    int bit_length() const { return detail::bit_length_u64(p_); }

    Fp element(uint64_t v) const { return Fp(v % p_, this); }
    Fp zero() const { return Fp(0, this); }
    Fp one() const { return Fp(1, this); }

    Fp from_index(uint64_t idx) const { return Fp(idx % p_, this); }
    uint64_t index_of(const Fp& a) const { return a.value(); }

    Fp add(const Fp& a, const Fp& b) const {
        check(a, b);
        uint64_t s = a.value() + b.value();
        if (s >= p_) s -= p_;
        return Fp(s, this);
    }
    Fp sub(const Fp& a, const Fp& b) const {
        check(a, b);
        uint64_t s = a.value() >= b.value() ? a.value() - b.value() : a.value() + p_ - b.value();
        return Fp(s, this);
    }
    Fp mul(const Fp& a, const Fp& b) const {
        check(a, b);
        return Fp(detail::mulmod(a.value(), b.value(), p_), this);
    }
    Fp neg(const Fp& a) const {
        check(a);
        return Fp(a.value() == 0 ? 0 : p_ - a.value(), this);
    }
    Fp inv(const Fp& a) const {
        check(a);
        if (a.value() == 0) raise(errc::division_by_zero, "inverse of zero in F_" + std::to_string(p_));
        return Fp(detail::powmod(a.value(), p_ - 2, p_), this);
    }
    Fp pow(const Fp& a, uint64_t e) const {
        check(a);
        return Fp(detail::powmod(a.value(), e, p_), this);
    }

    /* Both square roots {r, p-r} for a residue (ascending), {0} for zero,
     * empty for a non-residue. */
    std::vector<Fp> sqrt(const Fp& a) const {
        check(a);
        return detail::sqrt_tonelli(*this, a);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return !(*this == o); }

    std::string to_string() const { return "F_" + std::to_string(p_); }

private:
    void check(const Fp& a) const {
        if (a.f_ == nullptr || a.f_->p_ != p_)
            raise(errc::field_mismatch, "element does not belong to F_" + std::to_string(p_));
    }
    void check(const Fp& a, const Fp& b) const {
        check(a);
        check(b);
    }

    uint64_t p_;
};

inline Fp Fp::operator+(const Fp& o) const { return field().add(*this, o); }
inline Fp Fp::operator-(const Fp& o) const { return field().sub(*this, o); }
inline Fp Fp::operator*(const Fp& o) const { return field().mul(*this, o); }
inline Fp Fp::operator/(const Fp& o) const { return field().mul(*this, field().inv(o)); }
inline Fp Fp::operator-() const { return field().neg(*this); }
inline Fp Fp::inv() const { return field().inv(*this); }
inline Fp Fp::field_one() const { return field().one(); }

inline bool Fp::operator==(const Fp& o) const {
    if (f_ == nullptr || o.f_ == nullptr || f_->modulus() != o.f_->modulus())
        raise(errc::field_mismatch, "comparing elements of different fields");
    return v_ == o.v_;
}

} // namespace ecx
