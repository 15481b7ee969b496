#include "mopquad/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mopquad/double_double.hpp"
#include "mopquad/error.hpp"
#include "mopquad/tridiag.hpp"

namespace mopquad {

GivensRotation make_givens(double p, double q) noexcept
{
    if (q == 0.0)
        return {1.0, 0.0};
    if (std::abs(q) > std::abs(p)) {
        const double tau = p / q;
        const double sigma = 1.0 / std::sqrt(1.0 + tau * tau);
        return {sigma * tau, sigma};
    }
    const double tau = q / p;
    const double gamma = 1.0 / std::sqrt(1.0 + tau * tau);
    return {gamma, gamma * tau};
}

std::vector<double> symmetric_tridiag_eigenvalues(std::vector<double> d, const std::vector<double>& sub,
                                                  FlopCounter* flops)
{
    const std::size_t n = d.size();
    std::vector<double> e(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i)
        e[i] = sub[i];
    const double eps = std::numeric_limits<double>::epsilon();
    std::uint64_t ops = 0;

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == 30)
                    throw Error(ErrorCode::NoConvergence,
                                "symmetric_tridiag_eigenvalues: no convergence for eigenvalue "
                                    + std::to_string(l + 1),
                                static_cast<long>(l + 1));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                std::size_t i = m;
                bool underflow = false;
                while (i-- > l) {
                    const double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    ops += 20;
                }
                if (underflow)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
                ops += 10;
            }
        } while (m != l);
    }
    if (flops)
        flops->ql += ops;
    std::sort(d.begin(), d.end());
    return d;
}

void newton_step_into(const BalancedSystem& s, double x, std::span<double> p, std::span<double> pp,
                      FlopCounter* flops)
{
    const std::size_t n = s.size();
    const auto& a = s.a_hat;
    const auto& b = s.b_hat;
    const auto& c = s.c_hat;
    const auto& d = s.d_hat;
    auto sup = [&](std::size_t k) { return k + 1 < n ? a[k] : s.a_close_hat; };

    // Right-applied rotations on column pairs (k, k+1) of the pencil
    // [H | a e_n] - x [I | 0]; e0..e2 hold the live column k at rows k..k+2.
    // The rotation angles are stored in p (sigma) and pp (gamma) and expanded
    // into the null vector afterwards.
    double e0 = b[0] - x;
    double e1 = n > 1 ? c[0] : 0.0;
    double e2 = n > 2 ? d[0] : 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double f0 = sup(k);
        const double f1 = k + 1 < n ? b[k + 1] - x : 0.0;
        const double f2 = k + 2 < n ? c[k + 1] : 0.0;
        const double f3 = k + 3 < n ? d[k + 1] : 0.0;
        const GivensRotation g = make_givens(e0, f0);
        e0 = -g.sigma * e1 + g.gamma * f1;
        e1 = -g.sigma * e2 + g.gamma * f2;
        e2 = g.gamma * f3;
        p[k] = g.sigma;
        pp[k] = g.gamma;
    }
    // z_n = gamma_{n-1}; z_k = gamma_{k-1} prod_{l>=k} (-sigma_l); z_0 = prod (-sigma_l).
    p[n] = pp[n - 1];
    double t = 1.0;
    for (std::size_t k = n - 1; k >= 1; --k) {
        t *= -p[k];
        p[k] = pp[k - 1] * t;
    }
    p[0] *= -t;

    // Derivative: differentiate the recurrence row by row.
    double q1 = 0.0, q2 = 0.0, q3 = 0.0; // p'_{k}, p'_{k-1}, p'_{k-2}
    for (std::size_t k = 0; k < n; ++k) {
        double r = p[k] - (b[k] - x) * q1;
        if (k >= 1)
            r -= c[k - 1] * q2;
        if (k >= 2)
            r -= d[k - 2] * q3;
        const double v = r / sup(k);
        pp[k] = v;
        q3 = q2;
        q2 = q1;
        q1 = v;
    }
    if (flops)
        flops->newton += 30 * n + 4;
}

NewtonStep newton_step(const BalancedSystem& s, double x, FlopCounter* flops)
{
    NewtonStep out;
    out.p.resize(s.size() + 1);
    out.pprime.resize(s.size());
    newton_step_into(s, x, out.p, out.pprime, flops);
    return out;
}

void left_eigenvector_into(const BalancedSystem& s, double x, std::span<double> u, FlopCounter* flops)
{
    const std::size_t n = s.size();
    if (n == 1) {
        u[0] = 1.0;
        return;
    }
    const auto& a = s.a_hat;
    const auto& b = s.b_hat;
    const auto& c = s.c_hat;
    const auto& d = s.d_hat;
    // Left rotations from the bottom up annihilate the superdiagonal, giving
    // Q (H - xI) = L with L lower triangular of bandwidth 3.
    // (dl, cl, bl) is the reduced row i+1 at columns i-1, i, i+1.
    // l0..l3 hold L(k,k), L(k,k-1), L(k,k-2), L(k,k-3).
    std::vector<double> gam(n - 1), sig(n - 1), l0(n), l1(n), l2(n), l3(n);
    double dl = n > 2 ? d[n - 3] : 0.0;
    double cl = c[n - 2];
    double bl = b[n - 1] - x;
    for (std::size_t i = n - 1; i-- > 0;) {
        const GivensRotation g = make_givens(bl, a[i]);
        const double di = i >= 2 ? d[i - 2] : 0.0;
        const double ci = i >= 1 ? c[i - 1] : 0.0;
        const double bi = b[i] - x;
        l0[i + 1] = g.sigma * a[i] + g.gamma * bl;
        l1[i + 1] = g.sigma * bi + g.gamma * cl;
        l2[i + 1] = g.sigma * ci + g.gamma * dl;
        l3[i + 1] = g.sigma * di;
        bl = g.gamma * bi - g.sigma * cl;
        cl = g.gamma * ci - g.sigma * dl;
        dl = g.gamma * di;
        gam[i] = g.gamma;
        sig[i] = g.sigma;
    }
    l0[0] = bl;
    // Product form: u_k = gamma_k prod_{l<k} (-sigma_l), u_{n-1} = prod (-sigma_l).
    double t = 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        u[k] = gam[k] * t;
        t *= -sig[k];
    }
    u[n - 1] = t;

    // The product form leaves the residual u^T (H - xI) = L(0,0) e_0^T, which
    // is not always small: when it is not, small leading components of u are
    // garbage.  One step of inverse iteration with the same factorization,
    // y^T L = u^T and u <- Q^T y, has residual 1/|y|; keep the better one.
    const double rho = std::abs(l0[0]);
    if (flops)
        flops->left += 38 * n;
    if (rho == 0.0)
        return;
    std::vector<double> y(n);
    double rhs = 1.0;
    for (std::size_t j = n; j-- > 0;) {
        double r = rhs * u[j];
        if (j + 1 < n)
            r -= l1[j + 1] * y[j + 1];
        if (j + 2 < n)
            r -= l2[j + 2] * y[j + 2];
        if (j + 3 < n)
            r -= l3[j + 3] * y[j + 3];
        y[j] = r / l0[j];
        if (std::abs(y[j]) > 1e200) {
            for (std::size_t k = j; k < n; ++k)
                y[k] *= 1e-200;
            rhs *= 1e-200;
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double yi = y[i], yn = y[i + 1];
        y[i] = gam[i] * yi + sig[i] * yn;
        y[i + 1] = gam[i] * yn - sig[i] * yi;
    }
    double norm = 0.0;
    for (double v : y)
        norm += v * v;
    norm = std::sqrt(norm);
    if (rhs < rho * norm)
        for (std::size_t k = 0; k < n; ++k)
            u[k] = y[k] / norm;
}

std::vector<double> left_eigenvector(const BalancedSystem& s, double x, FlopCounter* flops)
{
    std::vector<double> u(s.size());
    left_eigenvector_into(s, x, u, flops);
    return u;
}

double polish_eigenvalue(const BalancedSystem& s, double x, double max_step, FlopCounter* flops)
{
    // Plain three-term-plus-one recurrence for p_k and p_k', rescaled as it
    // goes; the ratio p_n / p_n' does not care about the scale.
    const std::size_t n = s.size();
    const dd xx(x);
    dd p0(1.0), p1(0.0), p2(0.0), q0(0.0), q1(0.0), q2(0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const dd t = xx - dd(s.b_hat[k]);
        dd pn = t * p0;
        dd qn = t * q0 + p0;
        if (k >= 1) {
            pn -= dd(s.c_hat[k - 1]) * p1;
            qn -= dd(s.c_hat[k - 1]) * q1;
        }
        if (k >= 2) {
            pn -= dd(s.d_hat[k - 2]) * p2;
            qn -= dd(s.d_hat[k - 2]) * q2;
        }
        const dd ak(k + 1 < n ? s.a_hat[k] : s.a_close_hat);
        p2 = p1;
        p1 = p0;
        p0 = pn / ak;
        q2 = q1;
        q1 = q0;
        q0 = qn / ak;
        const double m = std::abs(p0.hi) + std::abs(p1.hi) + std::abs(q0.hi);
        if (m > 1e100 || (m < 1e-100 && m > 0.0)) {
            const dd sc(1.0 / m);
            p0 *= sc;
            p1 *= sc;
            p2 *= sc;
            q0 *= sc;
            q1 *= sc;
            q2 *= sc;
        }
    }
    if (flops)
        flops->polish += 260 * n;
    const double corr = to_double(p0 / q0);
    if (!std::isfinite(corr) || std::abs(corr) > max_step)
        return x;
    return to_double(xx - dd(corr));
}

double default_tolerance(std::size_t n) noexcept
{
    return static_cast<double>(n) * static_cast<double>(n) * std::numeric_limits<double>::epsilon();
}

int ehrlich_aberth_stream(const BalancedSystem& s, std::vector<double>& x, double tol, const EigenSink& sink,
                          FlopCounter* flops)
{
    const std::size_t n = s.size();
    if (x.size() != n)
        throw Error(ErrorCode::BadN, "ehrlich_aberth: need one initial guess per eigenvalue");
    for (double v : x)
        if (!std::isfinite(v))
            throw Error(ErrorCode::ParamDomain, "ehrlich_aberth: initial guesses must be finite");

    std::vector<char> conv(n, 0);
    std::vector<double> p(n + 1), pp(n), u(n), v(n);
    std::size_t done = 0;
    std::uint64_t ops = 0;

    auto emit = [&](std::size_t j, double xj, double residual, int sweep) {
        if (!sink)
            return;
        double nv = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            nv += p[k] * p[k];
        nv = std::sqrt(nv);
        for (std::size_t k = 0; k < n; ++k)
            v[k] = p[k] / nv;
        left_eigenvector_into(s, xj, u, flops);
        sink(j, xj, v, u, residual, sweep);
        ops += 3 * n;
    };

    int sweep = 0;
    while (done < n && sweep < kMaxAberthSweeps) {
        ++sweep;
        for (std::size_t j = 0; j < n; ++j) {
            if (conv[j])
                continue;
            newton_step_into(s, x[j], p, pp, flops);
            if (pp[n - 1] == 0.0)
                continue;
            const double corr = p[n] / pp[n - 1];
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    sum += 1.0 / (x[j] - x[k]);
            ops += 3 * n + 4;
            x[j] -= corr / (1.0 - corr * sum);
            if (std::abs(corr) < tol || std::abs(p[n]) < tol) {
                conv[j] = 1;
                ++done;
                x[j] = polish_eigenvalue(s, x[j], std::max(tol, std::abs(corr)), flops);
                newton_step_into(s, x[j], p, pp, flops);
                emit(j, x[j], std::abs(p[n]), sweep);
            }
        }
    }
    if (flops)
        flops->aberth += ops;
    if (done == n)
        return 0;
    int ier = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (conv[j])
            continue;
        if (ier == 0)
            ier = static_cast<int>(j + 1);
        newton_step_into(s, x[j], p, pp, flops);
        emit(j, x[j], std::abs(p[n]), kMaxAberthSweeps);
    }
    return ier;
}

AberthResult ehrlich_aberth(const BalancedSystem& s, std::vector<double> x0, double tol, FlopCounter* flops)
{
    AberthResult out;
    out.estimates.resize(s.size());
    out.ier = ehrlich_aberth_stream(
        s, x0, tol,
        [&](std::size_t j, double xj, std::span<const double> v, std::span<const double> u, double res, int sw) {
            EigenEstimate& e = out.estimates[j];
            e.x = xj;
            e.v.assign(v.begin(), v.end());
            e.u.assign(u.begin(), u.end());
            e.residual = res;
            e.iterations = sw;
        },
        flops);
    return out;
}

namespace {

bool pipeline_breakdown(const Error& e)
{
    return e.code() == ErrorCode::ZeroPivot || e.code() == ErrorCode::NegativeProduct ||
           e.code() == ErrorCode::NoConvergence;
}

// Real interval holding the Gershgorin discs of the rows of H.
std::pair<double, double> gershgorin_interval(const BalancedSystem& s)
{
    const std::size_t n = s.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i + 1 < n)
            r += std::abs(s.a_hat[i]);
        if (i >= 1)
            r += std::abs(s.c_hat[i - 1]);
        if (i >= 2)
            r += std::abs(s.d_hat[i - 2]);
        lo = std::min(lo, s.b_hat[i] - r);
        hi = std::max(hi, s.b_hat[i] + r);
    }
    return {lo, hi};
}

std::vector<double> tridiagonal_pipeline(const BalancedSystem& s, FlopCounter* flops)
{
    const Tridiagonal t = symmetrize(reduce_to_tridiagonal(s, flops), flops);
    std::vector<double> x = symmetric_tridiag_eigenvalues(t.diag, t.sub, flops);
    // A bumped pivot can survive the reduction and still wreck the spectrum.
    const auto [lo, hi] = gershgorin_interval(s);
    const double slack = 1e-8 * (hi - lo) + std::numeric_limits<double>::min();
    for (std::size_t j = 0; j < x.size(); ++j)
        if (!(x[j] >= lo - slack && x[j] <= hi + slack))
            throw Error(ErrorCode::ZeroPivot, "initial guess outside the Gershgorin interval",
                        static_cast<long>(j));
    return x;
}

// J H^T J: the same spectrum, lower Hessenberg again, reduced from the other end.
BalancedSystem flipped(const BalancedSystem& s)
{
    BalancedSystem f = s;
    std::reverse(f.b_hat.begin(), f.b_hat.end());
    std::reverse(f.a_hat.begin(), f.a_hat.end());
    f.c_hat = f.a_hat;
    std::reverse(f.d_hat.begin(), f.d_hat.end());
    return f;
}

BalancedSystem leading_block(const BalancedSystem& s)
{
    BalancedSystem l = s;
    const std::size_t m = s.size() - 1;
    l.b_hat.resize(m);
    l.a_hat.resize(m - 1);
    l.c_hat.resize(m - 1);
    l.d_hat.resize(m >= 2 ? m - 2 : 0);
    l.a_close_hat = s.a_hat[m - 1];
    return l;
}

constexpr int kMaxInterlaceDepth = 4;

std::vector<double> guesses_impl(const BalancedSystem& s, FlopCounter* flops, int depth)
{
    const std::size_t n = s.size();
    if (n <= 2)
        return tridiagonal_pipeline(s, flops);
    try {
        return tridiagonal_pipeline(s, flops);
    } catch (const Error& e) {
        if (!pipeline_breakdown(e))
            throw;
    }
    try {
        return tridiagonal_pipeline(flipped(s), flops);
    } catch (const Error& e) {
        if (!pipeline_breakdown(e))
            throw;
    }
    if (depth < kMaxInterlaceDepth) {
        // Zeros of consecutive step-line polynomials interlace, and H_{n-1}
        // is the leading block of H_n: bracket each node by the n-1 rule.
        const BalancedSystem l = leading_block(s);
        std::vector<double> y = guesses_impl(l, flops, depth + 1);
        if (ehrlich_aberth_stream(l, y, default_tolerance(n - 1), {}, flops) == 0) {
            std::sort(y.begin(), y.end());
            const std::size_t m = y.size();
            std::vector<double> x(n);
            const double left_gap = m > 1 ? y[1] - y[0] : 1.0;
            const double right_gap = m > 1 ? y[m - 1] - y[m - 2] : 1.0;
            x[0] = y[0] - 0.5 * left_gap;
            for (std::size_t j = 1; j < m; ++j)
                x[j] = 0.5 * (y[j - 1] + y[j]);
            x[m] = y[m - 1] + 0.5 * right_gap;
            return x;
        }
    }
    return symmetric_tridiag_eigenvalues(s.b_hat, s.c_hat, flops);
}

} // namespace

std::vector<double> initial_guesses(const BalancedSystem& s, FlopCounter* flops)
{
    return guesses_impl(s, flops, 0);
}

} // namespace mopquad
