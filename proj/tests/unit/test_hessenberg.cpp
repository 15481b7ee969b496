#include <cmath>

#include <gtest/gtest.h>

#include "mopquad/catalog.hpp"
#include "mopquad/error.hpp"
#include "mopquad/hessenberg.hpp"
#include "mopquad/oracle.hpp"

using namespace mopquad;

TEST(Balance, HandExample)
{
    BandedHessenberg h;
    h.a = {1, 1};
    h.b = {7, 8, 9};
    h.c = {4, 9};
    h.d = {6};
    const BalancedSystem s = balance(h);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_DOUBLE_EQ(s.a_hat[0], 2);
    EXPECT_DOUBLE_EQ(s.a_hat[1], 3);
    EXPECT_EQ(s.a_hat, s.c_hat);
    EXPECT_DOUBLE_EQ(s.d_hat[0], 1);
    EXPECT_EQ(s.b_hat, h.b);
    EXPECT_DOUBLE_EQ(s.s1, 1);
    EXPECT_DOUBLE_EQ(s.s2, 2);
}

TEST(Balance, SymmetricInputIsFixedPoint)
{
    BandedHessenberg h;
    h.a = {2, 3, 5};
    h.b = {1, 2, 3, 4};
    h.c = {2, 3, 5};
    h.d = {0.5, -0.25};
    h.c_close = 1.0;
    const BalancedSystem s = balance(h);
    EXPECT_EQ(s.a_hat, h.a);
    EXPECT_EQ(s.c_hat, h.c);
    EXPECT_EQ(s.b_hat, h.b);
    EXPECT_EQ(s.d_hat, h.d);
    EXPECT_DOUBLE_EQ(s.s2, 1);
}

TEST(Balance, Class2Example)
{
    const BalancedSystem s = balance(class_mop(validate_spec(2, {-0.5, 0.5}, 4)).h);
    EXPECT_NEAR(s.a_hat[0], std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(s.a_hat[1], std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(s.a_hat[2], std::sqrt(6.5), 1e-15);
    EXPECT_EQ(s.a_hat, s.c_hat);
    EXPECT_DOUBLE_EQ(s.d_hat[0], 0.0);
    EXPECT_NEAR(s.d_hat[1], 3 / std::sqrt(3 * 6.5), 1e-15);
}

TEST(Balance, NonPositivePivot)
{
    BandedHessenberg h;
    h.a = {1, 1};
    h.b = {0, 0, 0};
    h.c = {1, -1};
    h.d = {0};
    try {
        balance(h);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonPositivePivot);
    }
}

TEST(Balance, InvariantsAllClasses)
{
    for (int c = 1; c <= kClassCount; ++c) {
        const RecurrenceSystem rs = class_mop(validate_spec(c, reference_params(c), 40));
        const BalancedSystem s = balance(rs.h);
        EXPECT_EQ(s.b_hat, rs.h.b);
        EXPECT_EQ(s.a_hat, s.c_hat);
        for (double x : s.a_hat) {
            EXPECT_TRUE(std::isfinite(x));
            EXPECT_GT(x, 0.0);
        }
        for (std::size_t i = 0; i < s.d_hat.size(); ++i) {
            EXPECT_TRUE(std::isfinite(s.d_hat[i]));
            EXPECT_EQ(std::signbit(s.d_hat[i]), std::signbit(rs.h.d[i])) << "class " << c << " i " << i;
        }
    }
}

TEST(Balance, SimilarityPreservesEigenvalues)
{
    for (int c = 1; c <= kClassCount; ++c) {
        const RecurrenceSystem rs = class_mop(validate_spec(c, reference_params(c), 12));
        const DenseEigen e1 = dense_eigen_dd(rs.h);
        const DenseEigen e2 = dense_eigen_dd(as_banded(balance(rs.h)));
        double scale = 0.0;
        for (double b : rs.h.b)
            scale = std::max(scale, std::abs(b));
        for (std::size_t j = 0; j < e1.values.size(); ++j)
            EXPECT_NEAR(to_double(e1.values[j]), to_double(e2.values[j]), 1e-10 * scale) << "class " << c;
    }
}
