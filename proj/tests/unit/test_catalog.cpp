#include <cmath>

#include <gtest/gtest.h>

#include "mopquad/catalog.hpp"
#include "mopquad/error.hpp"

using namespace mopquad;

namespace {

ErrorCode code_of(int cls, std::vector<double> p, int n)
{
    try {
        validate_spec(cls, p, n);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for class " << cls;
    return ErrorCode::Unsupported;
}

} // namespace

TEST(Catalog, ParamCounts)
{
    const int expected[] = {3, 2, 3, 2, 1, 2, 2, 4, 3};
    for (int c = 1; c <= kClassCount; ++c) {
        EXPECT_EQ(param_count(c), expected[c - 1]);
        EXPECT_EQ(reference_params(c).size(), static_cast<std::size_t>(expected[c - 1]));
    }
    EXPECT_EQ(param_count(0), -1);
    EXPECT_EQ(param_count(10), -1);
}

TEST(Catalog, ValidSpec)
{
    const MopSpec s = validate_spec(2, {-0.5, 0.5}, 20);
    EXPECT_EQ(s.class_id, 2);
    EXPECT_EQ(s.n, 20);
    for (int c = 1; c <= kClassCount; ++c)
        EXPECT_NO_THROW(validate_spec(c, reference_params(c), 10)) << "class " << c;
}

TEST(Catalog, IntegerDifferenceRejected)
{
    try {
        validate_spec(1, {-0.5, -0.2, 0.8}, 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParamDomain);
        EXPECT_NE(std::string(e.what()).find("alpha1-alpha2 must not be an integer"), std::string::npos);
    }
}

TEST(Catalog, EqualParametersRejected)
{
    EXPECT_EQ(code_of(3, {-0.5, 0.2, 0.2}, 10), ErrorCode::ParamDomain);
    EXPECT_EQ(code_of(4, {0.2, 0.2}, 3), ErrorCode::ParamDomain);
}

TEST(Catalog, OtherErrors)
{
    EXPECT_EQ(code_of(0, {}, 10), ErrorCode::UnknownClass);
    EXPECT_EQ(code_of(2, {-0.5}, 10), ErrorCode::ParamCount);
    EXPECT_EQ(code_of(2, {-0.5, 0.5}, 1), ErrorCode::BadN);
    EXPECT_EQ(code_of(5, {-1.5}, 10), ErrorCode::ParamDomain);
    EXPECT_EQ(code_of(6, {-0.5, -0.1}, 10), ErrorCode::ParamDomain);
    EXPECT_EQ(code_of(7, {0.0, 0.5}, 10), ErrorCode::ParamDomain);
}

TEST(Catalog, Class2Coefficients)
{
    const RecurrenceSystem rs = class_mop(validate_spec(2, {-0.5, 0.5}, 4));
    const std::vector<double> b = {0.5, 2.5, 3.5, 5.5};
    const std::vector<double> c = {0.5, 3.0, 6.5};
    // d_2 = 1 * (1 - 0.5) * (1 - 0.5 - 0.5) = 0.
    const std::vector<double> d = {0.0, 3.0};
    ASSERT_EQ(rs.h.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_DOUBLE_EQ(rs.h.b[i], b[i]);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_DOUBLE_EQ(rs.h.c[i], c[i]);
        EXPECT_DOUBLE_EQ(rs.h.a[i], 1.0);
    }
    for (std::size_t i = 0; i < 2; ++i)
        EXPECT_DOUBLE_EQ(rs.h.d[i], d[i]);
}

TEST(Catalog, Class2FMatrix)
{
    const RecurrenceSystem rs = class_mop(validate_spec(2, {-0.5, 0.5}, 4));
    EXPECT_NEAR(rs.f11, 1.7724538509055159, 1e-15);
    EXPECT_NEAR(rs.f21, 0.88622692545275801, 1e-15);
    EXPECT_NEAR(rs.f22, 0.88622692545275801, 1e-15);
}

TEST(Catalog, Class6FirstDiagonal)
{
    const RecurrenceSystem rs = class_mop(validate_spec(6, {-0.5, 0.5}, 2));
    EXPECT_DOUBLE_EQ(rs.h.b[0], 0.5);
}

TEST(Catalog, Class8FirstDiagonalIsSumForm)
{
    // b0 = ab/(cd) for a=1, b=1, c=3, d=2.
    const RecurrenceSystem rs = class_mop(validate_spec(8, {1.0, 1.0, 3.0, 2.0}, 4));
    EXPECT_NEAR(rs.h.b[0], 1.0 / 6.0, 1e-15);
}

TEST(Catalog, AsymptoticClass2)
{
    const long i = 1000;
    const AsymptoticForms f = asymptotic_reference(2, {-0.5, 0.5}, i);
    const double h = i / 2.0;
    EXPECT_DOUBLE_EQ(f.c, 3 * h * h);
    EXPECT_DOUBLE_EQ(f.d, h * h * h);
    EXPECT_DOUBLE_EQ(f.c_hat, std::sqrt(3.0) / 2 * i);
    EXPECT_DOUBLE_EQ(f.d_hat, i / 6.0);
}

TEST(Catalog, AsymptoticClass6)
{
    const long i = 100;
    const AsymptoticForms f = asymptotic_reference(6, {-0.5, 0.5}, i);
    const double x = static_cast<double>(i);
    EXPECT_DOUBLE_EQ(f.c, 3 * std::pow(x, 4));
    EXPECT_DOUBLE_EQ(f.d, std::pow(x, 6));
    EXPECT_DOUBLE_EQ(f.c_hat, std::sqrt(3.0) * x * x);
    EXPECT_DOUBLE_EQ(f.d_hat, x * x / 3);
}

TEST(Catalog, AsymptoticClass4)
{
    const AsymptoticForms f = asymptotic_reference(4, {0.2, 0.5}, 1000);
    EXPECT_NEAR(f.d, 1000 * (0.2 - 0.5) / 8, 1e-12);
    EXPECT_NEAR(f.d_hat, (0.2 - 0.5) / 4, 1e-15);
}

// The actual coefficients approach the asymptotic forms.
TEST(Catalog, CoefficientsApproachAsymptotics)
{
    for (int cls : {2, 3, 6}) {
        const auto p = reference_params(cls);
        const RecurrenceSystem rs = class_mop(validate_spec(cls, p, 4002));
        const long r = 4000; // row index of c[r-1] and d[r-2]
        const AsymptoticForms f = asymptotic_reference(cls, p, r);
        EXPECT_NEAR(rs.h.c[r - 1] / f.c, 1.0, 5e-3) << "class " << cls;
        EXPECT_NEAR(rs.h.d[r - 2] / f.d, 1.0, 5e-3) << "class " << cls;
    }
}
