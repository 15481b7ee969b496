#include <cmath>

#include <gtest/gtest.h>

#include "mopquad/catalog.hpp"
#include "mopquad/eigensolver.hpp"
#include "mopquad/error.hpp"
#include "mopquad/flops.hpp"
#include "mopquad/hessenberg.hpp"
#include "mopquad/oracle.hpp"
#include "mopquad/tridiag.hpp"

using namespace mopquad;

namespace {

BalancedSystem reference_system(int cls, int n) { return balance(class_mop(validate_spec(cls, reference_params(cls), n)).h); }

std::vector<double> eigenvalues_of(const Tridiagonal& t)
{
    const Tridiagonal s = symmetrize(t);
    return symmetric_tridiag_eigenvalues(s.diag, s.sub);
}

} // namespace

TEST(Reduce, NothingToEliminate)
{
    BalancedSystem s;
    s.a_hat = s.c_hat = {1.5, 2.0};
    s.b_hat = {1, 2, 3};
    s.d_hat = {0.0};
    const Tridiagonal t = reduce_to_tridiagonal(s);
    EXPECT_EQ(t.diag, s.b_hat);
    EXPECT_EQ(t.sub, s.c_hat);
    EXPECT_EQ(t.sup, s.a_hat);

    BalancedSystem s2;
    s2.a_hat = s2.c_hat = {0.5};
    s2.b_hat = {1, 4};
    const Tridiagonal t2 = reduce_to_tridiagonal(s2);
    EXPECT_EQ(t2.diag, s2.b_hat);
    EXPECT_EQ(t2.sub, s2.c_hat);
}

TEST(Reduce, HermiteMatchesOracle)
{
    const RecurrenceSystem rs = class_mop(validate_spec(4, {0.2, 0.5}, 6));
    const BalancedSystem s = balance(rs.h);
    const std::vector<double> got = eigenvalues_of(reduce_to_tridiagonal(s));
    const DenseEigen ref = dense_eigen_dd(as_banded(s));
    ASSERT_EQ(got.size(), 6u);
    for (std::size_t j = 0; j < 6; ++j)
        EXPECT_NEAR(got[j], to_double(ref.values[j]), 1e-12);
}

TEST(Reduce, FlopBound)
{
    for (int cls : {1, 2, 6, 9}) {
        for (int n : {20, 100, 400}) {
            FlopCounter fc;
            reduce_to_tridiagonal(reference_system(cls, n), &fc);
            EXPECT_LE(static_cast<double>(fc.reduce), 3.5 * n * n + 50.0 * n) << "class " << cls << " n " << n;
        }
    }
}

TEST(Symmetrize, AlreadySymmetric)
{
    Tridiagonal t{{1, 2, 3}, {0.5, 0.25}, {0.5, 0.25}};
    const Tridiagonal s = symmetrize(t);
    EXPECT_EQ(s.diag, t.diag);
    EXPECT_EQ(s.sub, t.sub);
    EXPECT_EQ(s.sup, t.sup);
}

TEST(Symmetrize, TwoByTwo)
{
    Tridiagonal t{{0, 0}, {8}, {2}};
    const Tridiagonal s = symmetrize(t);
    EXPECT_DOUBLE_EQ(s.sub[0], 4);
    EXPECT_DOUBLE_EQ(s.sup[0], 4);
    const auto ev = symmetric_tridiag_eigenvalues(s.diag, s.sub);
    EXPECT_NEAR(ev[0], -4, 1e-15);
    EXPECT_NEAR(ev[1], 4, 1e-15);
}

TEST(Symmetrize, NegativeProduct)
{
    Tridiagonal t{{0, 0}, {-1}, {2}};
    try {
        symmetrize(t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NegativeProduct);
    }
}

TEST(Symmetrize, MacdonaldMatchesOracle)
{
    const BalancedSystem s = reference_system(6, 20);
    const std::vector<double> got = eigenvalues_of(reduce_to_tridiagonal(s));
    const DenseEigen ref = dense_eigen_dd(as_banded(s));
    for (std::size_t j = 0; j < got.size(); ++j) {
        const double r = to_double(ref.values[j]);
        EXPECT_NEAR(got[j], r, 1e-9 * std::abs(r)) << "j " << j;
    }
}
