#include "mopquad/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "mopquad/error.hpp"
#include "mopquad/special.hpp"
#include "mopquad/weights.hpp"

namespace mopquad {

namespace {

using Matrix = std::vector<std::vector<dd>>;

constexpr double kDdEps = 4.93e-32;

Matrix dense_of(const BandedHessenberg& h)
{
    const std::size_t n = h.size();
    Matrix m(n, std::vector<dd>(n, dd(0.0)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = h.b[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        m[i][i + 1] = h.a[i];
        m[i + 1][i] = h.c[i];
    }
    for (std::size_t i = 0; i + 2 < n; ++i)
        m[i + 2][i] = h.d[i];
    return m;
}

Matrix transpose(const Matrix& m)
{
    const std::size_t n = m.size();
    Matrix t(n, std::vector<dd>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[j][i] = m[i][j];
    return t;
}

struct DdRot {
    dd c, s;
};

DdRot dd_givens(const dd& p, const dd& q)
{
    if (q.hi == 0.0)
        return {dd(1.0), dd(0.0)};
    const dd r = sqrt(p * p + q * q);
    return {p / r, q / r};
}

// Real eigenvalues of an upper Hessenberg matrix by explicitly shifted QR
// with deflation.
std::vector<dd> hessenberg_qr(Matrix a)
{
    const std::size_t n = a.size();
    std::vector<dd> out;
    out.reserve(n);
    std::size_t hi = n;
    int iter = 0;
    int total = 0;
    std::vector<DdRot> rots(n);
    while (hi > 0) {
        if (hi == 1) {
            out.push_back(a[0][0]);
            break;
        }
        // Find the start of the unreduced block ending at hi-1.
        std::size_t lo = hi - 1;
        while (lo > 0) {
            const dd scale = abs(a[lo][lo]) + abs(a[lo - 1][lo - 1]);
            if (abs(a[lo][lo - 1]).hi <= kDdEps * std::max(scale.hi, 1e-300)) {
                a[lo][lo - 1] = dd(0.0);
                break;
            }
            --lo;
        }
        if (lo == hi - 1) {
            out.push_back(a[hi - 1][hi - 1]);
            --hi;
            iter = 0;
            continue;
        }
        if (++iter > 60 || ++total > 100 * static_cast<int>(n))
            throw Error(ErrorCode::NoConvergence, "dense_eigen_dd: QR did not converge", static_cast<long>(hi));

        // Wilkinson shift from the trailing 2x2 block; complex pairs are
        // refused after a few exceptional shifts.
        const dd p = a[hi - 2][hi - 2], q = a[hi - 2][hi - 1], r = a[hi - 1][hi - 2], s = a[hi - 1][hi - 1];
        const dd half = (p - s) * dd(0.5);
        const dd disc = half * half + q * r;
        dd mu;
        if (disc.hi >= 0.0) {
            const dd root = sqrt(disc);
            mu = half.hi >= 0.0 ? s - q * r / (half + root) : s - q * r / (half - root);
            if (!std::isfinite(mu.hi))
                mu = s;
        } else {
            if (iter > 40)
                throw Error(ErrorCode::NoConvergence, "dense_eigen_dd: complex eigenvalue pair",
                            static_cast<long>(hi));
            mu = s;
        }
        if (iter % 11 == 10)
            mu = s + abs(a[hi - 1][hi - 2]) * dd(0.75);

        for (std::size_t k = lo; k < hi; ++k)
            a[k][k] -= mu;
        for (std::size_t k = lo; k + 1 < hi; ++k) {
            const DdRot g = dd_givens(a[k][k], a[k + 1][k]);
            rots[k] = g;
            for (std::size_t j = k; j < hi; ++j) {
                const dd x = a[k][j], y = a[k + 1][j];
                a[k][j] = g.c * x + g.s * y;
                a[k + 1][j] = g.c * y - g.s * x;
            }
        }
        for (std::size_t k = lo; k + 1 < hi; ++k) {
            const DdRot g = rots[k];
            const std::size_t top = std::min(k + 2, hi - 1);
            for (std::size_t i = lo; i <= top; ++i) {
                const dd x = a[i][k], y = a[i][k + 1];
                a[i][k] = g.c * x + g.s * y;
                a[i][k + 1] = g.c * y - g.s * x;
            }
        }
        for (std::size_t k = lo; k < hi; ++k)
            a[k][k] += mu;
    }
    return out;
}

void normalize(std::vector<dd>& v)
{
    dd s(0.0);
    for (const dd& x : v)
        s += x * x;
    const dd r = sqrt(s);
    for (dd& x : v)
        x /= r;
}

// Two steps of inverse iteration with (A - lambda I) factored by LU with
// partial pivoting.
std::vector<dd> inverse_iteration(const Matrix& a, const dd& lambda)
{
    const std::size_t n = a.size();
    Matrix lu = a;
    dd norm(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        lu[i][i] -= lambda;
        for (std::size_t j = 0; j < n; ++j)
            norm = std::max(norm, abs(a[i][j]));
    }
    std::vector<std::size_t> piv(n);
    std::iota(piv.begin(), piv.end(), std::size_t{0});
    const double tiny = kDdEps * std::max(norm.hi, 1e-300);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t m = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(lu[i][k]) > abs(lu[m][k]))
                m = i;
        std::swap(lu[k], lu[m]);
        std::swap(piv[k], piv[m]);
        if (abs(lu[k][k]).hi < tiny)
            lu[k][k] = dd(tiny);
        for (std::size_t i = k + 1; i < n; ++i) {
            const dd l = lu[i][k] / lu[k][k];
            lu[i][k] = l;
            if (l.hi != 0.0)
                for (std::size_t j = k + 1; j < n; ++j)
                    lu[i][j] -= l * lu[k][j];
        }
    }
    std::vector<dd> x(n, dd(1.0)), y(n);
    for (int step = 0; step < 3; ++step) {
        for (std::size_t i = 0; i < n; ++i)
            y[i] = x[piv[i]];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                y[i] -= lu[i][j] * y[j];
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j)
                y[i] -= lu[i][j] * y[j];
            y[i] /= lu[i][i];
        }
        normalize(y);
        x = y;
    }
    return x;
}

dd dot(const std::vector<dd>& u, const std::vector<dd>& v)
{
    dd s(0.0);
    for (std::size_t i = 0; i < u.size(); ++i)
        s += u[i] * v[i];
    return s;
}

} // namespace

DenseEigen dense_eigen_dd(const BandedHessenberg& h)
{
    const std::size_t n = h.size();
    if (n == 0 || n > kOracleMaxN)
        throw Error(ErrorCode::ParamDomain, "dense_eigen_dd: n must be in 1..32");
    const Matrix m = dense_of(h);
    const Matrix mt = transpose(m);
    DenseEigen e;
    e.values = hessenberg_qr(mt);
    std::sort(e.values.begin(), e.values.end());
    for (const dd& lambda : e.values) {
        e.right.push_back(inverse_iteration(m, lambda));
        e.left.push_back(inverse_iteration(mt, lambda));
    }
    return e;
}

std::vector<double> condition_numbers(const DenseEigen& e)
{
    std::vector<double> k;
    k.reserve(e.values.size());
    for (std::size_t j = 0; j < e.values.size(); ++j)
        k.push_back(1.0 / std::abs(to_double(dot(e.left[j], e.right[j]))));
    return k;
}

std::vector<double> condition_numbers(const BandedHessenberg& h) { return condition_numbers(dense_eigen_dd(h)); }

IntegralResult reference_integral_ex(const MopSpec& spec, int which, const std::function<double(double)>& f)
{
    const Support sup = weight_support(spec, which);
    const bool reflect = std::isinf(sup.lo) && sup.hi == 0.0;
    const double lo = reflect ? 0.0 : sup.lo;
    const double hi = reflect ? std::numeric_limits<double>::infinity() : sup.hi;
    auto g2 = [&](double x, double xc) {
        const double y = reflect ? -x : x;
        if (!(y > sup.lo && y < sup.hi) || (sup.hi == 1.0 && !(xc > 0.0)))
            return 0.0;
        const double w = weight_eval(spec, which, y, xc);
        return w == 0.0 ? 0.0 : f(y) * w;
    };
    auto g = [&](double x) { return g2(x, 1.0 - x); };

    IntegralResult total;
    total.converged = true;
    auto add = [&](const std::function<double(double)>& h, double a, double b) {
        const IntegralResult r = integrate_gk(h, a, b);
        total.value += r.value;
        total.err += r.err;
        total.panels += r.panels;
        total.converged = total.converged && r.converged;
    };
    const double r2 = std::sqrt(0.5);
    // Squared substitutions at finite ends absorb x^alpha singularities.
    auto left_sq = [&](double base) { return [&, base](double u) { return 2.0 * u * g(base + u * u); }; };
    auto tail = [&](double t) {
        const double s = 1.0 - t;
        return g(1.0 + t / s) / (s * s);
    };

    if (lo == 0.0 && hi == 1.0) {
        add(left_sq(0.0), 0.0, r2);
        add([&](double u) { return 2.0 * u * g2(1.0 - u * u, u * u); }, 0.0, r2);
    } else if (lo == 0.0) {
        add(left_sq(0.0), 0.0, 1.0);
        add(tail, 0.0, 1.0);
    } else {
        auto whole = [&](double t) {
            const double s = 1.0 - t * t;
            return g(t / s) * (1.0 + t * t) / (s * s);
        };
        add(whole, -1.0, 0.0);
        add(whole, 0.0, 1.0);
    }
    return total;
}

dd reference_integral(const MopSpec& spec, int which, const std::function<double(double)>& f, double tol)
{
    const IntegralResult r = reference_integral_ex(spec, which, f);
    if (!(r.err <= tol * (1.0 + std::abs(to_double(r.value)))))
        throw Error(ErrorCode::AccuracyLoss,
                    "reference_integral: error estimate " + std::to_string(r.err) + " above tolerance");
    return r.value;
}

double closed_form_moment(const MopSpec& spec, int which, int k)
{
    if (which != 1 && which != 2)
        throw Error(ErrorCode::ParamDomain, "which must be 1 or 2");
    if (k < 0)
        throw Error(ErrorCode::ParamDomain, "moment order must be non-negative");
    const auto& p = spec.params;
    if (static_cast<int>(p.size()) != param_count(spec.class_id))
        throw Error(ErrorCode::ParamCount, "wrong number of parameters");
    const int j = which;
    const double kk = k;
    switch (spec.class_id) {
    case 1:
        return std::exp(log_gamma(kk + p[j] + 1) + log_gamma(p[0] + 1) - log_gamma(kk + p[j] + p[0] + 2));
    case 2:
        return gamma(kk + p[j - 1] + 1);
    case 3:
        return std::exp(log_gamma(kk + p[0] + 1) - (kk + p[0] + 1) * std::log(p[j]));
    case 4: {
        const double aj = p[j - 1];
        double m0 = std::sqrt(std::numbers::pi) * std::exp(aj * aj / 4);
        double m1 = aj / 2 * m0;
        if (k == 0)
            return m0;
        for (int i = 2; i <= k; ++i) {
            const double m2 = aj / 2 * m1 + (i - 1) / 2.0 * m0;
            m0 = m1;
            m1 = m2;
        }
        return m1;
    }
    case 5: {
        const double v = gamma((kk + p[0] + 1) / 2) / 2;
        return which == 1 && k % 2 == 1 ? -v : v;
    }
    case 6:
        return gamma(p[0] + kk + 1) * gamma(p[0] + p[1] + kk + j);
    case 7: {
        const double be = p[0], nu = p[1] + j - 1;
        // sum_m (nu+m+1)_k / m! * beta^-(nu+m+k+1)
        double sum = 0.0;
        double fact = 1.0; // beta^-m / m!
        for (int m = 0; m < 100000; ++m) {
            if (m > 0)
                fact /= m * be;
            double poch = 1.0;
            for (int i = 0; i < k; ++i)
                poch *= nu + m + 1 + i;
            const double t = poch * fact;
            sum += t;
            if (m > k + 1.0 / be && std::abs(t) <= 1e-17 * std::abs(sum))
                break;
        }
        return sum * std::pow(be, -(nu + kk + 1));
    }
    case 8:
    case 9:
        throw Error(ErrorCode::Unsupported, "closed_form_moment: no closed form for this class");
    }
    throw Error(ErrorCode::UnknownClass, "unknown class " + std::to_string(spec.class_id));
}

} // namespace mopquad
