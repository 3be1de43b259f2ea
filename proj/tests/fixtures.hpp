#pragma once

// Pinned desk-scale curves shared across the suites. Orders and generators
// were found by exhaustive enumeration and are re-verified by the tests that
// use them.

#include <array>
#include <cstdint>

#include "ecx/ecx.hpp"

namespace fixtures {

// y^2 = x^3 + x + 6 over F_11: 13 points, prime order, G = (2, 7).
struct F11Curve {
    ecx::PrimeField field{11};
    ecx::Curve<ecx::PrimeField> curve{field, field.element(1), field.element(6)};

    ecx::Point<ecx::PrimeField> gen() const { return curve.point(field.element(2), field.element(7)); }
};

// y^2 = x^3 + x + 7 over F_11: 15 = 3 * 5 points, one subgroup each of
// order 3 (gen (4, 3)) and order 5 (gen (1, 3)).
struct F11CompositeCurve {
    ecx::PrimeField field{11};
    ecx::Curve<ecx::PrimeField> curve{field, field.element(1), field.element(7)};

    ecx::Point<ecx::PrimeField> gen_order3() const {
        return curve.point(field.element(4), field.element(3));
    }
    ecx::Point<ecx::PrimeField> gen_order5() const {
        return curve.point(field.element(1), field.element(3));
    }
};

// y^2 = x^3 + x + 6 over F_{7^2} (modulus x^2 + 1): 55 = 5 * 11 points.
struct F49Curve {
    ecx::ExtField field{7, {1, 0, 1}};
    ecx::Curve<ecx::ExtField> curve{field, field.from_base(1), field.from_base(6)};

    ecx::Point<ecx::ExtField> gen_order5() const {
        return curve.point(field.element({0, 0}), field.element({0, 1}));
    }
    ecx::Point<ecx::ExtField> gen_order11() const {
        return curve.point(field.element({1, 0}), field.element({1, 0}));
    }
    ecx::Point<ecx::ExtField> gen_order55() const {
        return curve.point(field.element({0, 1}), field.element({0, 1}));
    }
};

// y^2 = x^3 + 3 over F_{7^3} (modulus x^3 + 3): 364 = 4 * 7 * 13 points;
// cyclic subgroups of orders 7, 13 and 91. Exercises coefficient extraction
// with k = 2.
struct F343Curve {
    ecx::ExtField field{7, {3, 0, 0, 1}};
    ecx::Curve<ecx::ExtField> curve{field, field.from_base(0), field.from_base(3)};

    ecx::Point<ecx::ExtField> gen_order7() const {
        return curve.point(field.element({0, 0, 3}), field.element({1, 0, 0}));
    }
    ecx::Point<ecx::ExtField> gen_order13() const {
        return curve.point(field.element({1, 0, 0}), field.element({2, 0, 0}));
    }
    ecx::Point<ecx::ExtField> gen_order91() const {
        return curve.point(field.element({1, 3, 1}), field.element({4, 1, 2}));
    }
};

// Nonsingular curves with p <= 199 for the Hasse/Lagrange sweeps.
inline constexpr std::array<std::array<uint64_t, 3>, 22> hasse_curves{{
    {7, 1, 1},   {11, 1, 1},  {13, 1, 1},  {17, 1, 1},  {19, 1, 1},  {23, 1, 1},
    {29, 1, 1},  {31, 1, 2},  {37, 1, 1},  {41, 1, 1},  {43, 1, 1},  {47, 1, 1},
    {53, 1, 1},  {59, 1, 1},  {61, 1, 1},  {67, 1, 1},  {101, 1, 1}, {127, 1, 1},
    {151, 1, 1}, {173, 1, 1}, {197, 1, 1}, {199, 1, 1},
}};

} // namespace fixtures
