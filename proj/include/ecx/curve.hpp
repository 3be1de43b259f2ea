#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ecx/errors.hpp"
#include "ecx/ext_field.hpp"
#include "ecx/prime_field.hpp"

namespace ecx {

inline constexpr uint64_t default_enum_cap = 1000000;

template <class Field>
class Point;

/* Short Weierstrass curve y^2 = x^3 + a*x + b over F_p or F_{p^n}, affine
 * coordinates. Audit mode re-checks the curve equation after every group
 * operation; construction rejects singular curves. */
template <class Field>
class Curve {
public:
    using Elem = typename Field::Element;

    Curve(const Field& field, Elem a, Elem b, bool audit_mode = true)
        : f_(&field), a_(std::move(a)), b_(std::move(b)), audit_(audit_mode) {
        Elem four = scale(4), twenty_seven = scale(27);
        Elem disc = four * a_ * a_ * a_ + twenty_seven * b_ * b_;
        if (disc.is_zero())
            raise(errc::singular_curve, "4a^3 + 27b^2 = 0 over " + f_->to_string());
    }

    const Field& field() const { return *f_; }
    const Elem& a() const { return a_; }
    const Elem& b() const { return b_; }
    bool audit_mode() const { return audit_; }

    bool operator==(const Curve& o) const {
        return *f_ == *o.f_ && a_ == o.a_ && b_ == o.b_;
    }

    Point<Field> infinity() const;
    Point<Field> point(Elem x, Elem y) const;

    Elem rhs(const Elem& x) const { return (x * x + a_) * x + b_; }
    bool on_curve(const Elem& x, const Elem& y) const { return y * y == rhs(x); }

    Point<Field> add(const Point<Field>& P, const Point<Field>& Q) const;
    Point<Field> negate(const Point<Field>& P) const;
    Point<Field> scalar_mul(uint64_t k, const Point<Field>& P) const;

    /* All affine points plus the identity, identity first then affine points
     * in (x, y) index order. */
    std::vector<Point<Field>> enumerate_points(uint64_t cap = default_enum_cap) const;

    std::string to_string() const {
        return "y^2 = x^3 + " + a_.to_string() + "*x + " + b_.to_string() + " over " + f_->to_string();
    }

private:
    Elem scale(uint64_t k) const {
        if constexpr (std::is_same_v<Field, PrimeField>)
            return f_->element(k);
        else
            return f_->from_base(k);
    }

    const Field* f_;
    Elem a_, b_;
    bool audit_;
};

template <class Field>
class Point {
public:
    using Elem = typename Field::Element;

    Point() = default;

    bool is_infinity() const { return inf_; }

    /* The abscissa/ordinate are undefined at the identity. */
    const Elem& x() const {
        if (inf_) raise(errc::abscissa_undefined, "x() of the point at infinity");
        return x_;
    }
    const Elem& y() const {
        if (inf_) raise(errc::abscissa_undefined, "y() of the point at infinity");
        return y_;
    }
    const Curve<Field>& curve() const {
        if (!c_) raise(errc::curve_mismatch, "detached point");
        return *c_;
    }

    bool operator==(const Point& o) const {
        if (!c_ || !o.c_ || !(*c_ == *o.c_))
            raise(errc::curve_mismatch, "comparing points on different curves");
        if (inf_ || o.inf_) return inf_ == o.inf_;
        return x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const Point& o) const { return !(*this == o); }

    Point operator+(const Point& o) const { return curve().add(*this, o); }
    Point operator-() const { return curve().negate(*this); }

    /* (is_infinity, x index, y index): a total order used for deterministic
     * reporting; the identity sorts first. */
    std::tuple<int, uint64_t, uint64_t> sort_key() const {
        if (inf_) return {0, 0, 0};
        const Field& f = curve().field();
        return {1, f.index_of(x_), f.index_of(y_)};
    }

    std::string to_string() const {
        if (inf_) return "infinity";
        return "(" + x_.to_string() + ", " + y_.to_string() + ")";
    }

private:
    friend class Curve<Field>;
    Point(const Curve<Field>* c) : c_(c), inf_(true) {}
    Point(const Curve<Field>* c, Elem x, Elem y)
        : c_(c), inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    const Curve<Field>* c_ = nullptr;
    bool inf_ = true;
    Elem x_, y_;
};

template <class Field>
Point<Field> Curve<Field>::infinity() const {
    return Point<Field>(this);
}

template <class Field>
Point<Field> Curve<Field>::point(Elem x, Elem y) const {
    if (!on_curve(x, y))
        raise(errc::not_on_curve,
              "(" + x.to_string() + ", " + y.to_string() + ") does not satisfy " + to_string());
    return Point<Field>(this, std::move(x), std::move(y));
}

template <class Field>
Point<Field> Curve<Field>::add(const Point<Field>& P, const Point<Field>& Q) const {
    if (!P.c_ || !(*P.c_ == *this) || !Q.c_ || !(*Q.c_ == *this))
        raise(errc::curve_mismatch, "adding points on different curves");
    if (P.inf_) return Q.inf_ ? Point<Field>(this) : Point<Field>(this, Q.x_, Q.y_);
    if (Q.inf_) return Point<Field>(this, P.x_, P.y_);

    Elem lambda;
    if (P.x_ == Q.x_) {
        if ((P.y_ + Q.y_).is_zero()) return Point<Field>(this); // inverse pair (covers y = 0)
        // tangent slope
        lambda = (scale(3) * P.x_ * P.x_ + a_) / (scale(2) * P.y_);
    } else {
        lambda = (Q.y_ - P.y_) / (Q.x_ - P.x_);
    }
    Elem x3 = lambda * lambda - P.x_ - Q.x_;
    Elem y3 = lambda * (P.x_ - x3) - P.y_;
    Point<Field> R(this, std::move(x3), std::move(y3));
    if (audit_ && !on_curve(R.x_, R.y_))
        raise(errc::not_on_curve, "group law produced an off-curve point (internal)");
    return R;
}

template <class Field>
Point<Field> Curve<Field>::negate(const Point<Field>& P) const {
    if (!P.c_ || !(*P.c_ == *this))
        raise(errc::curve_mismatch, "negating a point on a different curve");
    if (P.inf_) return Point<Field>(this);
    return Point<Field>(this, P.x_, -P.y_);
}

template <class Field>
Point<Field> Curve<Field>::scalar_mul(uint64_t k, const Point<Field>& P) const {
    if (!P.c_ || !(*P.c_ == *this))
        raise(errc::curve_mismatch, "scalar multiple of a point on a different curve");
    Point<Field> acc(this);
    Point<Field> base = P;
    while (k) {
        if (k & 1) acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return acc;
}

template <class Field>
std::vector<Point<Field>> Curve<Field>::enumerate_points(uint64_t cap) const {
    uint64_t q = f_->cardinality();
    if (q > cap)
        raise(errc::enumeration_too_large,
              "field cardinality " + std::to_string(q) + " exceeds cap " + std::to_string(cap));
    std::vector<Point<Field>> pts;
    pts.push_back(infinity());
    for (uint64_t i = 0; i < q; ++i) {
        Elem x = f_->from_index(i);
        for (const Elem& y : f_->sqrt(rhs(x)))
            pts.push_back(Point<Field>(this, x, y));
    }
    return pts;
}

/* Cyclic subgroup with its full element list; elements[i] = [i]G, so the list
 * doubles as a discrete-log table. */
template <class Field>
struct Subgroup {
    const Curve<Field>* curve = nullptr;
    Point<Field> generator;
    uint64_t order = 0;
    std::vector<Point<Field>> elements;
};

template <class Field>
Subgroup<Field> subgroup_from_generator(const Point<Field>& G, uint64_t cap = default_enum_cap) {
    const Curve<Field>& c = G.curve();
    Subgroup<Field> sub;
    sub.curve = &c;
    sub.generator = G;
    sub.elements.push_back(c.infinity());
    if (!G.is_infinity()) {
        Point<Field> acc = G;
        while (!acc.is_infinity()) {
            sub.elements.push_back(acc);
            if (sub.elements.size() > cap)
                raise(errc::enumeration_too_large,
                      "subgroup order exceeds cap " + std::to_string(cap));
            acc = c.add(acc, G);
        }
    }
    sub.order = sub.elements.size();
    return sub;
}

namespace detail {

/* Walk <P> collecting sort keys; abort (empty result) once the subgroup is
 * longer than `limit`. */
template <class Field>
std::set<std::tuple<int, uint64_t, uint64_t>> subgroup_signature(const Point<Field>& P,
                                                                 uint64_t limit) {
    std::set<std::tuple<int, uint64_t, uint64_t>> sig;
    const Curve<Field>& c = P.curve();
    sig.insert(c.infinity().sort_key());
    Point<Field> acc = P;
    while (!acc.is_infinity()) {
        sig.insert(acc.sort_key());
        if (sig.size() > limit) return {};
        acc = c.add(acc, P);
    }
    return sig;
}

} // namespace detail

/* All distinct cyclic subgroups of exactly the requested order, sorted by
 * their smallest non-identity element; each is reported with its smallest
 * generator. */
template <class Field>
std::vector<Subgroup<Field>> find_subgroups(const Curve<Field>& curve, uint64_t order,
                                            uint64_t cap = default_enum_cap) {
    std::vector<Subgroup<Field>> out;
    if (order == 0) return out;
    std::vector<Point<Field>> pts = curve.enumerate_points(cap);
    if (order == 1) {
        out.push_back(subgroup_from_generator(curve.infinity(), cap));
        return out;
    }
    std::set<std::set<std::tuple<int, uint64_t, uint64_t>>> seen;
    std::vector<Subgroup<Field>> found;
    for (const Point<Field>& P : pts) {
        if (P.is_infinity()) continue;
        auto sig = detail::subgroup_signature(P, order);
        if (sig.size() != order) continue;
        if (!seen.insert(sig).second) continue;
        Subgroup<Field> sub = subgroup_from_generator(P, cap);
        // canonical generator: smallest element of exact order
        Point<Field> best = P;
        for (const Point<Field>& G : sub.elements) {
            if (G.is_infinity()) continue;
            if (detail::subgroup_signature(G, order).size() != order) continue;
            if (G.sort_key() < best.sort_key()) best = G;
        }
        if (!(best == P)) sub = subgroup_from_generator(best, cap);
        found.push_back(std::move(sub));
    }
    // sort by the lexicographically smallest non-identity element
    auto min_key = [](const Subgroup<Field>& s) {
        auto key = s.elements[1].sort_key();
        for (uint64_t i = 2; i < s.order; ++i) key = std::min(key, s.elements[i].sort_key());
        return key;
    };
    std::sort(found.begin(), found.end(), [&](const Subgroup<Field>& a, const Subgroup<Field>& b) {
        return min_key(a) < min_key(b);
    });
    return found;
}

/* |#E - (q + 1)| <= 2*sqrt(q), checked in integers. */
inline bool hasse_bound_holds(uint64_t count, uint64_t q) {
    __int128 d = (__int128)count - (__int128)q - 1;
    return d * d <= (__int128)4 * q;
}

/* Order of a single point by repeated addition. */
template <class Field>
uint64_t point_order(const Point<Field>& P, uint64_t cap = default_enum_cap) {
    const Curve<Field>& c = P.curve();
    if (P.is_infinity()) return 1;
    uint64_t ord = 1;
    Point<Field> acc = P;
    while (!acc.is_infinity()) {
        acc = c.add(acc, P);
        if (++ord > cap) raise(errc::enumeration_too_large, "point order exceeds cap");
    }
    return ord;
}

} // namespace ecx
