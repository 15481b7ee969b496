#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "frozen_values.hpp"
#include "mopquad/catalog.hpp"
#include "mopquad/error.hpp"
#include "mopquad/oracle.hpp"
#include "mopquad/quadrature.hpp"

using namespace mopquad;

namespace {

QuadratureRule reference_rule(int cls, int n) { return gauss_mop(validate_spec(cls, reference_params(cls), n)); }

} // namespace

TEST(GaussMop, LaguerreTwoPoint)
{
    const QuadratureRule r = reference_rule(2, 2);
    ASSERT_EQ(r.ier, 0);
    EXPECT_NEAR(r.nodes[0], (3 - std::sqrt(6.0)) / 2, 1e-15);
    EXPECT_NEAR(r.nodes[1], (3 + std::sqrt(6.0)) / 2, 1e-15);
    EXPECT_NEAR(r.w1[0], 1.6099, 1e-4);
    EXPECT_NEAR(r.w1[1], 0.1626, 1e-4);
    EXPECT_NEAR(r.w2[0], 0.4431, 1e-4);
    EXPECT_NEAR(r.w2[1], 0.4431, 1e-4);
    EXPECT_NEAR(r.w1[0] + r.w1[1], std::sqrt(M_PI), 1e-15);
    EXPECT_NEAR(r.w2[0] + r.w2[1], std::sqrt(M_PI) / 2, 1e-15);
}

TEST(GaussMop, BadN)
{
    MopSpec s{2, {-0.5, 0.5}, 1};
    try {
        gauss_mop(s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadN);
    }
}

TEST(GaussMop, WeightSums)
{
    for (int c = 1; c <= kClassCount; ++c) {
        const MopSpec spec = validate_spec(c, reference_params(c), 30);
        const RecurrenceSystem rs = class_mop(spec);
        const QuadratureRule r = gauss_mop(spec);
        ASSERT_EQ(r.ier, 0);
        const auto [s1, s2] = apply_rule(r, [](double) { return 1.0; });
        EXPECT_NEAR(s1, rs.f11, 1e-11 * std::abs(rs.f11)) << "class " << c;
        EXPECT_NEAR(s2, rs.f21, 1e-11 * std::abs(rs.f21)) << "class " << c;
        const double b0 = rs.h.b[0];
        const double t = apply_rule(r, [b0](double x) { return x - b0; }).second;
        EXPECT_NEAR(t, rs.f22, 1e-10 * std::abs(rs.f22)) << "class " << c;
    }
}

TEST(GaussMop, JacobiPineiroNodesInUnitInterval)
{
    const QuadratureRule r = reference_rule(1, 100);
    EXPECT_EQ(r.ier, 0);
    for (double x : r.nodes) {
        EXPECT_GT(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
}

TEST(GaussMop, Deterministic)
{
    const QuadratureRule a = reference_rule(6, 40);
    const QuadratureRule b = reference_rule(6, 40);
    EXPECT_EQ(a.nodes, b.nodes);
    EXPECT_EQ(a.w1, b.w1);
    EXPECT_EQ(a.w2, b.w2);
}

TEST(GaussMop, NodesStrictlyIncreasing)
{
    for (int c = 1; c <= kClassCount; ++c) {
        const QuadratureRule r = reference_rule(c, 60);
        EXPECT_TRUE(std::adjacent_find(r.nodes.begin(), r.nodes.end(), std::greater_equal<>()) == r.nodes.end())
            << "class " << c;
    }
}

TEST(GaussMop, Interlacing)
{
    // Exploratory: reported, not required.
    for (int c : {1, 2, 6}) {
        for (int n : {10, 25}) {
            const QuadratureRule r0 = reference_rule(c, n);
            const QuadratureRule r1 = reference_rule(c, n + 1);
            bool ok = true;
            for (int j = 0; j < n; ++j)
                ok = ok && r1.nodes[j] < r0.nodes[j] && r0.nodes[j] < r1.nodes[j + 1];
            if (!ok)
                std::printf("note: class %d n=%d nodes do not interlace with n+1\n", c, n);
        }
    }
}

TEST(GaussMop, OddOrderHermiteAndAngelesco)
{
    // The plain tridiagonal reduction breaks down here; the fallback guesses must
    // still give converged rules with exact weight sums.
    for (int c : {4, 5}) {
        for (int n : {5, 7, 15, 51, 99}) {
            const MopSpec spec = validate_spec(c, reference_params(c), n);
            const RecurrenceSystem rs = class_mop(spec);
            const QuadratureRule r = gauss_mop(spec);
            ASSERT_EQ(r.ier, 0) << "class " << c << " n " << n;
            EXPECT_LE(*std::max_element(r.sweeps.begin(), r.sweeps.end()), 5);
            const auto [s1, s2] = apply_rule(r, [](double) { return 1.0; });
            EXPECT_NEAR(s1, rs.f11, 1e-11 * std::abs(rs.f11));
            EXPECT_NEAR(s2, rs.f21, 1e-11 * std::abs(rs.f21));
            if (n <= 15) {
                const DenseEigen e = dense_eigen_dd(rs.h);
                for (int j = 0; j < n; ++j)
                    EXPECT_NEAR(r.nodes[j], to_double(e.values[j]), 1e-12 * (1 + std::abs(r.nodes[j])));
            }
        }
    }
}

TEST(ApplyRule, NotConverged)
{
    QuadratureRule r = reference_rule(2, 4);
    r.ier = 2;
    try {
        apply_rule(r, [](double x) { return x; });
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RuleNotConverged);
        EXPECT_EQ(e.index(), 2);
    }
}

TEST(ApplyRule, LaguerreReferenceIntegral)
{
    const QuadratureRule r = reference_rule(2, 100);
    const auto [i1, i2] = apply_rule(r, [](double x) { return x * std::exp(-x); });
    EXPECT_NEAR(i1, frozen::x_exp_minus_x(2).w1, 5e-14);
    EXPECT_NEAR(i2, frozen::x_exp_minus_x(2).w2, 5e-14);
}

TEST(Exactness, Degrees)
{
    EXPECT_EQ(exactness_degree(10), std::make_pair(14, 14));
    EXPECT_EQ(exactness_degree(11), std::make_pair(16, 15));
    EXPECT_EQ(exactness_degree(2), std::make_pair(2, 2));
    EXPECT_EQ(exactness_degree(MopSpec{2, {-0.5, 0.5}, 11}), std::make_pair(16, 15));
}

TEST(Exactness, LaguerreMonomials)
{
    const MopSpec spec = validate_spec(2, reference_params(2), 10);
    const QuadratureRule r = gauss_mop(spec);
    const auto [d1, d2] = exactness_degree(spec);
    for (int k = 0; k <= std::max(d1, d2); ++k) {
        const auto [i1, i2] = apply_rule(r, [k](double x) { return std::pow(x, k); });
        if (k <= d1) {
            const double m = closed_form_moment(spec, 1, k);
            EXPECT_NEAR(i1, m, 1e-10 * (1 + std::abs(m))) << "k " << k;
        }
        if (k <= d2) {
            const double m = closed_form_moment(spec, 2, k);
            EXPECT_NEAR(i2, m, 1e-10 * (1 + std::abs(m))) << "k " << k;
        }
    }
}
