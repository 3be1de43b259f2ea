#include <gtest/gtest.h>

#include "ecx/rational.hpp"

using namespace ecx;

TEST(Rational, NormalizationAndComparison) {
    EXPECT_EQ(rational(10, 16), rational(5, 8));
    EXPECT_EQ(rational(-3, -9), rational(1, 3));
    EXPECT_EQ(rational(3, -9), rational(-1, 3));
    EXPECT_EQ(rational(0, 7), rational(0, 1));
    EXPECT_TRUE(rational(1, 3) < rational(1, 2));
    EXPECT_TRUE(rational(-1, 2) < rational(0, 1));
    EXPECT_TRUE(rational(2, 3) >= rational(2, 3));
}

TEST(Rational, ExactArithmetic) {
    rational a(1, 6), b(1, 10);
    EXPECT_EQ(a + b, rational(4, 15));
    EXPECT_EQ(a - b, rational(1, 15));
    EXPECT_EQ(a * b, rational(1, 60));
    EXPECT_EQ(a / b, rational(5, 3));
    EXPECT_EQ((a - a).num(), 0);
    EXPECT_EQ(rational(-7, 2).abs(), rational(7, 2));
}

TEST(Rational, ZeroDenominatorAndDivisionByZero) {
    EXPECT_THROW(rational(1, 0), error);
    EXPECT_THROW(rational(1, 2) / rational(0, 5), error);
}

TEST(Rational, OverflowFailsLoudly) {
    rational big(1, int128(1) << 100);
    try {
        rational r = big * big; // denominator would need 200 bits
        FAIL() << "expected ArithmeticOverflow, got " << r.to_string();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::arithmetic_overflow);
    }
}

TEST(Rational, StringAndDouble) {
    EXPECT_EQ(rational(119, 729).to_string(), "119/729");
    EXPECT_EQ(rational(-1, 4).to_string(), "-1/4");
    EXPECT_DOUBLE_EQ(rational(1, 4).to_double(), 0.25);
    // beyond-64-bit values still print exactly
    rational wide(int128(1) << 70, 1);
    EXPECT_EQ(wide.to_string(), "1180591620717411303424/1");
}
