#include <gtest/gtest.h>

#include <array>
#include <random>

#include "ncsym/errors.hpp"
#include "ncsym/scalars/division_ring.hpp"
#include "ncsym/scalars/quaternion.hpp"
#include "support.hpp"

using namespace ncsym;

static_assert(division_ring<rational>);
static_assert(division_ring<quaternion>);

namespace {

const quaternion I = quaternion::i(), J = quaternion::j(), K = quaternion::k();

// Oracle: multiply through the 4x4 left-multiplication matrix of a.
quaternion matrix_product(const quaternion& a, const quaternion& b) {
    const auto& p = a.components();
    const auto& q = b.components();
    const std::array<std::array<rational, 4>, 4> L{{
        {p[0], -p[1], -p[2], -p[3]},
        {p[1], p[0], -p[3], p[2]},
        {p[2], p[3], p[0], -p[1]},
        {p[3], -p[2], p[1], p[0]},
    }};
    std::array<rational, 4> r;
    for (int row = 0; row < 4; ++row)
        for (int c = 0; c < 4; ++c) r[row] += L[row][c] * q[c];
    return {r[0], r[1], r[2], r[3]};
}

} // namespace

TEST(Quaternion, MultiplicationTable) {
    EXPECT_EQ(I * J, K);
    EXPECT_EQ(J * I, -K);
    EXPECT_EQ(J * K, I);
    EXPECT_EQ(K * I, J);
    EXPECT_EQ(I * I, quaternion(-1));
    EXPECT_EQ(I * J * K, quaternion(-1));
    EXPECT_EQ((J - I) * (J - I), quaternion(-2));
}

TEST(Quaternion, Inverse) {
    EXPECT_EQ(inverse(quaternion(1)), quaternion(1));
    EXPECT_EQ(inverse(I), -I);
    EXPECT_EQ(inverse(J - I), rational(1, 2) * (I - J));
    EXPECT_THROW(inverse(quaternion()), division_by_zero);
}

TEST(Quaternion, ProductMatchesMatrixOracle) {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 300; ++n) {
        const auto a = testing_support::random_quaternion(rng), b = testing_support::random_quaternion(rng);
        ASSERT_EQ(a * b, matrix_product(a, b));
    }
}

TEST(Quaternion, NormIsMultiplicativeAndInverseReverses) {
    std::mt19937_64 rng(12);
    for (int n = 0; n < 200; ++n) {
        const auto a = testing_support::random_nonzero(rng), b = testing_support::random_nonzero(rng);
        ASSERT_EQ((a * b).norm(), a.norm() * b.norm());
        ASSERT_EQ(inverse(a * b), inverse(b) * inverse(a));
        ASSERT_EQ(a * inverse(a), quaternion(1));
    }
}

TEST(Quaternion, RealsAreCentral) {
    std::mt19937_64 rng(13);
    const quaternion c(rational(-7, 3));
    for (int n = 0; n < 200; ++n) {
        const auto q = testing_support::random_quaternion(rng);
        ASSERT_EQ(c * q, q * c);
    }
}

TEST(Quaternion, ToStringAndParse) {
    EXPECT_EQ(to_string(quaternion(0)), "0");
    EXPECT_EQ(to_string(rational(2) * I), "2i");
    EXPECT_EQ(to_string(quaternion(-1, -1, 1, -1)), "-1-i+j-k");
    EXPECT_EQ(to_string(quaternion(rational(1, 2), 0, rational(-3, 4), 0)), "1/2-3/4j");
    std::mt19937_64 rng(14);
    for (int n = 0; n < 100; ++n) {
        const auto q = testing_support::random_quaternion(rng);
        ASSERT_EQ(parse_quaternion(to_string(q)), q) << to_string(q);
    }
}

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("-6/4"), rational(-3, 2));
    EXPECT_EQ(to_fraction_string(rational(2)), "2/1");
    EXPECT_THROW(parse_rational("1/0"), division_by_zero);
    EXPECT_THROW(parse_rational("x"), parse_error);
    EXPECT_THROW(inverse(rational(0)), division_by_zero);
}
