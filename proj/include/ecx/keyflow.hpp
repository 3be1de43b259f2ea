#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ecx/curve.hpp"
#include "ecx/errors.hpp"
#include "ecx/extractors.hpp"

namespace ecx {

enum class dh_mode { single, two_source };

inline const char* dh_mode_name(dh_mode m) {
    return m == dh_mode::single ? "single" : "two_source";
}

template <class Field>
struct DhExchange {
    Point<Field> generator;
    uint64_t order = 0;
    uint64_t secret_a = 0;
    uint64_t secret_b = 0;
    Point<Field> public_a; // [a]G
    Point<Field> public_b; // [b]G
    Point<Field> shared;   // [ab]G, derived identically by both parties
};

template <class Field>
struct DhTranscript {
    using key_type = std::conditional_t<std::is_same_v<Field, PrimeField>, BitString, CoeffVector>;

    dh_mode mode = dh_mode::single;
    int k = 0;
    DhExchange<Field> exchange1;
    std::optional<DhExchange<Field>> exchange2;
    key_type key;
};

namespace detail {

template <class Field>
DhExchange<Field> run_exchange(const Point<Field>& G, uint64_t a, uint64_t b, uint64_t cap) {
    const Curve<Field>& curve = G.curve();
    DhExchange<Field> ex;
    ex.generator = G;
    ex.order = point_order(G, cap);
    if (a < 1 || a >= ex.order || b < 1 || b >= ex.order)
        raise(errc::invalid_parameter, "secrets must lie in [1, " + std::to_string(ex.order) + ")");
    ex.secret_a = a;
    ex.secret_b = b;
    ex.public_a = curve.scalar_mul(a, G);
    ex.public_b = curve.scalar_mul(b, G);
    Point<Field> alice = curve.scalar_mul(a, ex.public_b);
    Point<Field> bob = curve.scalar_mul(b, ex.public_a);
    if (!(alice == bob)) throw std::logic_error("DH parties disagree on the shared point");
    ex.shared = alice;
    return ex;
}

} // namespace detail

struct DhSecondParams {
    uint64_t a2 = 0;
    uint64_t b2 = 0;
};

/* Key agreement demo with the extractor as the derivation step. In
 * two-source mode the second exchange runs on `G2` (defaulting to the same
 * generator and secrets) and the key is the two-source extraction of the two
 * shared points. A shared point (or point sum) at the identity aborts with
 * retry guidance instead of emitting sentinel bits. */
template <class Field>
DhTranscript<Field> dh_derive(const Point<Field>& G, uint64_t a, uint64_t b, int k, dh_mode mode,
                              std::type_identity_t<std::optional<Point<Field>>> G2 = std::nullopt,
                              std::optional<DhSecondParams> secrets2 = std::nullopt,
                              uint64_t cap = default_enum_cap) {
    DhTranscript<Field> tr;
    tr.mode = mode;
    tr.k = k;
    tr.exchange1 = detail::run_exchange(G, a, b, cap);

    if (mode == dh_mode::single) {
        if (tr.exchange1.shared.is_infinity())
            raise(errc::derivation_failed,
                  "shared point is the identity (a*b = 0 mod order); pick different secrets");
        if constexpr (std::is_same_v<Field, PrimeField>)
            tr.key = L_k(tr.exchange1.shared, k);
        else
            tr.key = D_k(tr.exchange1.shared, k);
        return tr;
    }

    Point<Field> gen2 = G2.value_or(G);
    DhSecondParams s2 = secrets2.value_or(DhSecondParams{a, b});
    tr.exchange2 = detail::run_exchange(gen2, s2.a2, s2.b2, cap);
    const Point<Field>& K1 = tr.exchange1.shared;
    const Point<Field>& K2 = tr.exchange2->shared;
    if (K1.is_infinity() || K2.is_infinity())
        raise(errc::derivation_failed,
              "a shared point is the identity; pick different secrets");
    try {
        if constexpr (std::is_same_v<Field, PrimeField>)
            tr.key = ext1(K1, K2, k);
        else
            tr.key = ext2(K1, K2, k);
    } catch (const error& err) {
        if (err.code() == errc::abscissa_undefined)
            raise(errc::derivation_failed,
                  "the two shared points are inverses; re-randomize one exchange");
        throw;
    }
    return tr;
}

/* Counter-driven demo stream: step i emits the two-source extraction of
 * ([s]G1, [t]G2) and advances both scalars by one, wrapping inside
 * [1, order). Pairs summing to the identity are skipped and counted. Demo
 * only; this is not a secure generator. */
template <class Field>
struct PrngState {
    Subgroup<Field> sub1;
    Subgroup<Field> sub2;
    uint64_t s = 1;
    uint64_t t = 1;
    int k = 0;
    uint64_t step = 0;    // outputs emitted so far
    uint64_t skipped = 0; // identity-sum pairs passed over
};

template <class Field>
PrngState<Field> make_prng(Subgroup<Field> sub1, Subgroup<Field> sub2, int k, uint64_t s0 = 1,
                           uint64_t t0 = 1) {
    if (sub1.order < 2 || sub2.order < 2)
        raise(errc::invalid_parameter, "both subgroups must have order >= 2");
    if (!(*sub1.curve == *sub2.curve))
        raise(errc::curve_mismatch, "subgroups live on different curves");
    if (s0 < 1 || s0 >= sub1.order || t0 < 1 || t0 >= sub2.order)
        raise(errc::invalid_parameter, "initial scalars must lie in [1, order)");
    if constexpr (std::is_same_v<Field, PrimeField>) {
        int nbits = sub1.curve->field().bit_length();
        if (k < 1 || k > nbits) raise(errc::invalid_k, "k outside [1, " + std::to_string(nbits) + "]");
    } else {
        int n = sub1.curve->field().degree();
        if (k < 1 || k >= n) raise(errc::invalid_k, "k outside [1, " + std::to_string(n) + ")");
    }
    PrngState<Field> st;
    st.sub1 = std::move(sub1);
    st.sub2 = std::move(sub2);
    st.s = s0;
    st.t = t0;
    st.k = k;
    return st;
}

/* Bits emitted per step: k over a prime field, the bit width of p^k - 1 for
 * the base-p encoding of a coefficient vector. */
template <class Field>
int prng_output_bits(const PrngState<Field>& st) {
    if constexpr (std::is_same_v<Field, PrimeField>) {
        return st.k;
    } else {
        const ExtField& f = st.sub1.curve->field();
        unsigned __int128 top = 1;
        for (int i = 0; i < st.k; ++i) {
            top *= f.p();
            if (top > ~uint64_t(0)) raise(errc::enumeration_too_large, "p^k exceeds 64 bits");
        }
        return detail::bit_length_u64(uint64_t(top - 1));
    }
}

template <class Field>
std::pair<BitString, PrngState<Field>> prng_next(PrngState<Field> st) {
    const uint64_t period = std::lcm(st.sub1.order - 1, st.sub2.order - 1);
    auto advance = [](uint64_t v, uint64_t order) { return v + 1 == order ? 1 : v + 1; };
    for (uint64_t tries = 0; tries <= period; ++tries) {
        const Point<Field>& P = st.sub1.elements[st.s];
        const Point<Field>& Q = st.sub2.elements[st.t];
        st.s = advance(st.s, st.sub1.order);
        st.t = advance(st.t, st.sub2.order);
        Point<Field> S = st.sub1.curve->add(P, Q);
        if (S.is_infinity()) {
            ++st.skipped;
            continue;
        }
        BitString out;
        if constexpr (std::is_same_v<Field, PrimeField>) {
            out = ext1(P, Q, st.k);
        } else {
            CoeffVector v = ext2(P, Q, st.k);
            const ExtField& f = st.sub1.curve->field();
            uint64_t idx = 0;
            for (int i = st.k - 1; i >= 0; --i) idx = idx * f.p() + v.coeffs[i];
            out = BitString{idx, prng_output_bits(st)};
        }
        ++st.step;
        return {out, std::move(st)};
    }
    raise(errc::derivation_failed, "every pair along the scalar orbit sums to the identity");
}

/* Packs k-bit outputs most-significant-bit-first; the final partial byte is
 * zero-padded. */
class BitPacker {
public:
    void append(const BitString& b) {
        for (int i = b.k - 1; i >= 0; --i) push_bit((b.value >> i) & 1);
    }
    std::vector<uint8_t> finish() const { return bytes_; }

private:
    void push_bit(uint64_t bit) {
        if (used_ == 0) bytes_.push_back(0);
        bytes_.back() |= uint8_t(bit << (7 - used_));
        used_ = (used_ + 1) % 8;
    }
    std::vector<uint8_t> bytes_;
    int used_ = 0;
};

} // namespace ecx
