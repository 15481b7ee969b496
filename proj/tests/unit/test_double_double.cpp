#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "mopquad/double_double.hpp"

using namespace mopquad;

TEST(DoubleDouble, TwoSumIsExact)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = u(rng) * std::ldexp(1.0, static_cast<int>(rng() % 40));
        const double b = u(rng);
        const dd s = ddx::two_sum(a, b);
        EXPECT_EQ(s.hi, a + b);
        // (a - s.hi) + b is exact when |b| is the smaller operand.
        if (std::abs(b) <= std::abs(a))
            EXPECT_EQ(s.lo, (a - s.hi) + b);
    }
}

TEST(DoubleDouble, TwoProdIsExact)
{
    const dd p = ddx::two_prod(1.0 + 0x1p-30, 1.0 + 0x1p-30);
    EXPECT_EQ(p.hi, 1.0 + 0x1p-29);
    EXPECT_EQ(p.lo, 0x1p-60);
}

TEST(DoubleDouble, RecoversLostBits)
{
    dd s = 1.0;
    for (int i = 0; i < 1000; ++i)
        s += dd(1e-20);
    EXPECT_EQ(s.hi, 1.0);
    EXPECT_NEAR(s.lo, 1e-17, 1e-30);
}

TEST(DoubleDouble, SqrtAndDivision)
{
    const dd r = sqrt(dd(2.0));
    const dd back = r * r - dd(2.0);
    EXPECT_LE(std::abs(to_double(back)), 1e-30);
    const dd third = dd(1.0) / dd(3.0);
    EXPECT_LE(std::abs(to_double(third * dd(3.0) - dd(1.0))), 1e-31);
    EXPECT_EQ(to_double(sqrt(dd(0.0))), 0.0);
}

TEST(DoubleDouble, Ordering)
{
    const dd a{1.0, 1e-20};
    const dd b{1.0, -1e-20};
    EXPECT_TRUE(b < a);
    EXPECT_TRUE(a > b);
    EXPECT_TRUE(a >= a);
    EXPECT_TRUE(abs(-a) == a);
}
