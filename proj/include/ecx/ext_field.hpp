#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecx/errors.hpp"
#include "ecx/prime_field.hpp"

namespace ecx {

namespace detail {

/* Little-endian coefficient vectors over F_p. Helpers keep explicit lengths;
 * normalize() strips leading zeros. */
using poly = std::vector<uint64_t>;

inline int poly_deg(const poly& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

inline void poly_normalize(poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline poly poly_mul(const poly& a, const poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t t = mulmod(a[i], b[j], p);
            r[i + j] = (r[i + j] + t) % p;
        }
    }
    return r;
}

/* Remainder and quotient of a by b (b nonzero). */
inline void poly_divmod(poly a, const poly& b, uint64_t p, poly& quot, poly& rem) {
    int db = poly_deg(b);
    if (db < 0) raise(errc::division_by_zero, "polynomial division by zero");
    uint64_t lead_inv = powmod(b[db], p - 2, p);
    int da = poly_deg(a);
    quot.assign(da >= db ? da - db + 1 : 0, 0);
    while (da >= db) {
        uint64_t c = mulmod(a[da], lead_inv, p);
        quot[da - db] = c;
        for (int j = 0; j <= db; ++j) {
            uint64_t t = mulmod(c, b[j], p);
            uint64_t idx = da - db + j;
            a[idx] = (a[idx] + p - t) % p;
        }
        da = poly_deg(a);
    }
    a.resize(da + 1);
    rem = a;
}

inline poly poly_rem(const poly& a, const poly& b, uint64_t p) {
    poly q, r;
    poly_divmod(a, b, p, q, r);
    return r;
}

/* Extended Euclid: returns g = gcd(a, m) and u with u*a = g (mod m). */
inline void poly_egcd(poly a, poly m, uint64_t p, poly& g, poly& u) {
    poly r0 = std::move(m), r1 = std::move(a);
    poly s0 = {}, s1 = {1};
    poly_normalize(r0);
    poly_normalize(r1);
    while (poly_deg(r1) >= 0) {
        poly q, rem;
        poly_divmod(r0, r1, p, q, rem);
        poly qs = poly_mul(q, s1, p);
        poly s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
            uint64_t x = i < s0.size() ? s0[i] : 0;
            uint64_t y = i < qs.size() ? qs[i] : 0;
            s2[i] = (x + p - y % p) % p;
        }
        poly_normalize(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    g = std::move(r0);
    u = std::move(s0);
}

} // namespace detail

class ExtField;

/* Element of F_{p^n}: exactly n coefficients over F_p in the polynomial basis
 * {1, x, ..., x^{n-1}}, little-endian. */
class Fq {
public:
    Fq() = default;

    const std::vector<uint64_t>& coeffs() const { return c_; }
    const ExtField& field() const {
        if (!f_) raise(errc::field_mismatch, "detached field element");
        return *f_;
    }
    bool is_zero() const {
        for (uint64_t c : c_)
            if (c != 0) return false;
        return true;
    }

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const;
    Fq operator-() const;
    Fq inv() const;
    Fq field_one() const;

    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

private:
    friend class ExtField;
    Fq(std::vector<uint64_t> c, const ExtField* f) : c_(std::move(c)), f_(f) {}

    std::vector<uint64_t> c_;
    const ExtField* f_ = nullptr;
};

/* F_{p^n} in the polynomial basis modulo a monic irreducible of degree n.
 * Irreducibility is verified at construction by trial division against every
 * monic polynomial of degree <= n/2; ample at desk scale and loud otherwise.
 */
class ExtField {
public:
    using Element = Fq;

    static constexpr uint64_t irreducibility_work_cap = 4u << 20;

    /* modulus: n+1 little-endian coefficients, leading coefficient 1. */
    ExtField(uint64_t p, std::vector<uint64_t> modulus) : base_(p) {
        if (modulus.size() < 2)
            raise(errc::invalid_parameter, "modulus must have degree >= 1");
        for (auto& c : modulus) c %= p;
        if (modulus.back() != 1)
            raise(errc::invalid_parameter, "modulus must be monic");
        n_ = int(modulus.size()) - 1;
        mod_ = std::move(modulus);
        check_irreducible();
    }

    const PrimeField& base() const { return base_; }
    uint64_t p() const { return base_.modulus(); }
    int degree() const { return n_; }
    const std::vector<uint64_t>& modulus_coeffs() const { return mod_; }

    /* p^n, required to fit in 64 bits (enumeration-scale fields only). */
    uint64_t cardinality() const {
        unsigned __int128 card = 1;
        for (int i = 0; i < n_; ++i) {
            card *= p();
            if (card > ~uint64_t(0))
                raise(errc::enumeration_too_large, "field cardinality exceeds 64 bits");
        }
        return uint64_t(card);
    }

    /* Accepts up to n coefficients (shorter input is zero-padded). */
    Fq element(std::vector<uint64_t> coeffs) const {
        if (int(coeffs.size()) > n_)
            raise(errc::invalid_parameter, "coefficient vector longer than extension degree");
        coeffs.resize(n_, 0);
        for (auto& c : coeffs) c %= p();
        return Fq(std::move(coeffs), this);
    }
    Fq from_base(uint64_t v) const {
        std::vector<uint64_t> c(n_, 0);
        c[0] = v % p();
        return Fq(std::move(c), this);
    }
    Fq zero() const { return from_base(0); }
    Fq one() const { return from_base(1); }

    Fq from_index(uint64_t idx) const {
        std::vector<uint64_t> c(n_, 0);
        for (int i = 0; i < n_; ++i) {
            c[i] = idx % p();
            idx /= p();
        }
        return Fq(std::move(c), this);
    }
    uint64_t index_of(const Fq& a) const {
        check(a);
        unsigned __int128 idx = 0;
        for (int i = n_ - 1; i >= 0; --i) idx = idx * p() + a.c_[i];
        if (idx > ~uint64_t(0)) raise(errc::enumeration_too_large, "element index exceeds 64 bits");
        return uint64_t(idx);
    }

    Fq add(const Fq& a, const Fq& b) const {
        check(a, b);
        std::vector<uint64_t> c(n_);
        for (int i = 0; i < n_; ++i) {
            uint64_t s = a.c_[i] + b.c_[i];
            c[i] = s >= p() ? s - p() : s;
        }
        return Fq(std::move(c), this);
    }
    Fq sub(const Fq& a, const Fq& b) const {
        check(a, b);
        std::vector<uint64_t> c(n_);
        for (int i = 0; i < n_; ++i)
            c[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + p() - b.c_[i];
        return Fq(std::move(c), this);
    }
    Fq neg(const Fq& a) const {
        check(a);
        std::vector<uint64_t> c(n_);
        for (int i = 0; i < n_; ++i) c[i] = a.c_[i] == 0 ? 0 : p() - a.c_[i];
        return Fq(std::move(c), this);
    }
    Fq mul(const Fq& a, const Fq& b) const {
        check(a, b);
        detail::poly prod = detail::poly_mul(a.c_, b.c_, p());
        detail::poly rem = detail::poly_rem(prod, mod_, p());
        rem.resize(n_, 0);
        return Fq(std::move(rem), this);
    }
    Fq inv(const Fq& a) const {
        check(a);
        if (a.is_zero()) raise(errc::division_by_zero, "inverse of zero in " + to_string());
        detail::poly g, u;
        detail::poly ac = a.c_;
        detail::poly_normalize(ac);
        detail::poly_egcd(ac, mod_, p(), g, u);
        // gcd with an irreducible modulus is a nonzero constant
        if (detail::poly_deg(g) != 0)
            raise(errc::invalid_parameter, "modulus is not irreducible (gcd degree > 0)");
        uint64_t scale = detail::powmod(g[0], p() - 2, p());
        detail::poly res = detail::poly_rem(u, mod_, p());
        for (auto& c : res) c = detail::mulmod(c, scale, p());
        res.resize(n_, 0);
        return Fq(std::move(res), this);
    }
    Fq pow(const Fq& a, uint64_t e) const {
        check(a);
        return detail::pow_elem(*this, a, e);
    }

    /* Tr(a) = a + a^p + ... + a^{p^{n-1}}, an element of F_p. */
    Fp trace(const Fq& a) const {
        check(a);
        Fq acc = a;
        Fq frob = a;
        for (int i = 1; i < n_; ++i) {
            frob = pow(frob, p());
            acc = add(acc, frob);
        }
        for (int i = 1; i < n_; ++i)
            if (acc.c_[i] != 0) throw std::logic_error("trace left the base field");
        return base_.element(acc.c_[0]);
    }

    std::vector<Fq> sqrt(const Fq& a) const {
        check(a);
        return detail::sqrt_tonelli(*this, a);
    }

    bool operator==(const ExtField& o) const {
        return p() == o.p() && mod_ == o.mod_;
    }
    bool operator!=(const ExtField& o) const { return !(*this == o); }

    std::string to_string() const {
        return "F_{" + std::to_string(p()) + "^" + std::to_string(n_) + "}";
    }

private:
    void check(const Fq& a) const {
        if (a.f_ == nullptr || !(*a.f_ == *this))
            raise(errc::field_mismatch, "element does not belong to " + to_string());
        if (int(a.c_.size()) != n_)
            raise(errc::field_mismatch, "coefficient vector has wrong length");
    }
    void check(const Fq& a, const Fq& b) const {
        check(a);
        check(b);
    }

    void check_irreducible() const {
        if (n_ == 1) return;
        unsigned __int128 work = 0;
        for (int d = 1; d <= n_ / 2; ++d) {
            unsigned __int128 count = 1;
            for (int i = 0; i < d; ++i) count *= p();
            work += count;
        }
        if (work > irreducibility_work_cap)
            raise(errc::enumeration_too_large,
                  "irreducibility check too large for this p and n");
        for (int d = 1; d <= n_ / 2; ++d) {
            uint64_t count = 1;
            for (int i = 0; i < d; ++i) count *= p();
            for (uint64_t idx = 0; idx < count; ++idx) {
                detail::poly div(d + 1, 0);
                uint64_t t = idx;
                for (int i = 0; i < d; ++i) {
                    div[i] = t % p();
                    t /= p();
                }
                div[d] = 1;
                detail::poly rem = detail::poly_rem(mod_, div, p());
                if (detail::poly_deg(rem) < 0) {
                    std::string ds = "[";
                    for (size_t i = 0; i < div.size(); ++i)
                        ds += (i ? "," : "") + std::to_string(div[i]);
                    raise(errc::invalid_parameter, "modulus is reducible, divisor " + ds + "]");
                }
            }
        }
    }

    PrimeField base_;
    int n_;
    detail::poly mod_;
};

inline Fq Fq::operator+(const Fq& o) const { return field().add(*this, o); }
inline Fq Fq::operator-(const Fq& o) const { return field().sub(*this, o); }
inline Fq Fq::operator*(const Fq& o) const { return field().mul(*this, o); }
inline Fq Fq::operator/(const Fq& o) const { return field().mul(*this, field().inv(o)); }
inline Fq Fq::operator-() const { return field().neg(*this); }
inline Fq Fq::inv() const { return field().inv(*this); }
inline Fq Fq::field_one() const { return field().one(); }

inline bool Fq::operator==(const Fq& o) const {
    if (f_ == nullptr || o.f_ == nullptr || !(*f_ == *o.f_))
        raise(errc::field_mismatch, "comparing elements of different fields");
    return c_ == o.c_;
}

} // namespace ecx
