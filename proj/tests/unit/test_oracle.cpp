#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "frozen_values.hpp"
#include "mopquad/catalog.hpp"
#include "mopquad/error.hpp"
#include "mopquad/hessenberg.hpp"
#include "mopquad/oracle.hpp"
#include "mopquad/quadrature.hpp"

using namespace mopquad;

namespace {

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

} // namespace

TEST(DenseEigen, Diagonal)
{
    BandedHessenberg h;
    h.b = {3, 1, 2};
    h.a = {0, 0};
    h.c = {0, 0};
    h.d = {0};
    const DenseEigen e = dense_eigen_dd(h);
    EXPECT_EQ(to_double(e.values[0]), 1.0);
    EXPECT_EQ(to_double(e.values[1]), 2.0);
    EXPECT_EQ(to_double(e.values[2]), 3.0);
}

TEST(DenseEigen, TwoByTwoTo25Digits)
{
    BandedHessenberg h;
    h.b = {0.5, 2.5};
    h.a = {1.0};
    h.c = {0.5};
    const DenseEigen e = dense_eigen_dd(h);
    const dd s6 = sqrt(dd(6.0));
    const dd lo = (dd(3.0) - s6) / dd(2.0);
    const dd hi = (dd(3.0) + s6) / dd(2.0);
    EXPECT_LE(std::abs(to_double(e.values[0] - lo)), 1e-25);
    EXPECT_LE(std::abs(to_double(e.values[1] - hi)), 1e-25 * 3);
}

TEST(DenseEigen, MacdonaldMatchesPipeline)
{
    const MopSpec spec = validate_spec(6, reference_params(6), 20);
    const DenseEigen e = dense_eigen_dd(class_mop(spec).h);
    const QuadratureRule r = gauss_mop(spec);
    for (std::size_t j = 0; j < r.nodes.size(); ++j)
        EXPECT_NEAR(r.nodes[j], to_double(e.values[j]), 1e-10 * (1 + std::abs(r.nodes[j])));
}

TEST(DenseEigen, TooLarge)
{
    const BandedHessenberg h = class_mop(validate_spec(2, {-0.5, 0.5}, 40)).h;
    EXPECT_THROW(dense_eigen_dd(h), Error);
}

TEST(Condition, SymmetricIsOne)
{
    BandedHessenberg h;
    h.b = {1, 2, 3, 4};
    h.a = h.c = {0.5, 0.7, 0.9};
    h.d = {0, 0};
    for (double k : condition_numbers(h))
        EXPECT_NEAR(k, 1.0, 1e-12);
}

TEST(Condition, BalancingHelpsLaguerre)
{
    const BandedHessenberg h = class_mop(validate_spec(2, {-0.5, 0.5}, 20)).h;
    const auto k = condition_numbers(h);
    const auto kb = condition_numbers(as_banded(balance(h)));
    EXPECT_GE(max_of(k), 1e6);
    EXPECT_LE(max_of(kb), 1e3 * *std::min_element(k.begin(), k.end()));
    EXPECT_LE(max_of(kb), 1e-3 * max_of(k));
}

TEST(ReferenceIntegral, LaguerreMass)
{
    const MopSpec s{2, {-0.5, 0.5}, 2};
    const dd v = reference_integral(s, 1, [](double) { return 1.0; });
    EXPECT_NEAR(to_double(v), std::sqrt(M_PI), 1e-15 * std::sqrt(M_PI));
}

TEST(ReferenceIntegral, HermiteMass)
{
    const MopSpec s{4, {0.2, 0.5}, 2};
    const double ref = std::sqrt(M_PI) * std::exp(0.2 * 0.2 / 4);
    EXPECT_NEAR(to_double(reference_integral(s, 1, [](double) { return 1.0; })), ref, 1e-15 * ref);
}

TEST(ReferenceIntegral, MatchesFrozenValues)
{
    const auto f = [](double x) { return x * std::exp(-x); };
    for (int c = 1; c <= kClassCount; ++c) {
        const MopSpec s{c, reference_params(c), 2};
        const IntegralResult r1 = reference_integral_ex(s, 1, f);
        const IntegralResult r2 = reference_integral_ex(s, 2, f);
        EXPECT_TRUE(std::isfinite(to_double(r1.value)));
        EXPECT_NEAR(to_double(r1.value), frozen::x_exp_minus_x(c).w1, 4e-15) << "class " << c;
        EXPECT_NEAR(to_double(r2.value), frozen::x_exp_minus_x(c).w2, 4e-15) << "class " << c;
    }
}

TEST(Moments, Examples)
{
    EXPECT_NEAR(closed_form_moment({2, {-0.5, 0.5}, 2}, 1, 0), std::sqrt(M_PI), 1e-15);
    EXPECT_NEAR(closed_form_moment({6, {-0.5, 0.5}, 2}, 2, 1), std::tgamma(1.5) * std::tgamma(3.0), 1e-14);
    const MopSpec h{4, {0.2, 0.5}, 2};
    const double m0 = closed_form_moment(h, 1, 0);
    const double m1 = closed_form_moment(h, 1, 1);
    EXPECT_NEAR(m1, 0.1 * m0, 1e-15);
    EXPECT_NEAR(closed_form_moment(h, 1, 2), 0.1 * m1 + 0.5 * m0, 1e-15);
    EXPECT_THROW(closed_form_moment({8, reference_params(8), 2}, 1, 0), Error);
    EXPECT_THROW(closed_form_moment({9, reference_params(9), 2}, 1, 0), Error);
}

TEST(Moments, AgreeWithIntegrator)
{
    for (int c = 1; c <= 7; ++c) {
        const MopSpec s{c, reference_params(c), 2};
        for (int which : {1, 2}) {
            for (int k : {0, 1, 3}) {
                const double m = closed_form_moment(s, which, k);
                const double r =
                    to_double(reference_integral_ex(s, which, [k](double x) { return std::pow(x, k); }).value);
                EXPECT_NEAR(m, r, 1e-12 * (1 + std::abs(m))) << "class " << c << " w" << which << " k " << k;
            }
        }
    }
}
