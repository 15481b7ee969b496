#include "mopquad/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mopquad/error.hpp"
#include "mopquad/integrate.hpp"

namespace mopquad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};
constexpr double kGammaMax = 171.6243769563027;

double lanczos_sum(double x)
{
    double s = kLanczos[0];
    for (int i = 1; i < 15; ++i)
        s += kLanczos[i] / (x + i);
    return s;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Gamma for x >= 0.5, split power so tmp^(x+1/2) never overflows on its own.
double gamma_positive(double x)
{
    const double tmp = x + kLanczosG + 0.5;
    const double half = std::pow(tmp, 0.5 * (x + 0.5));
    return (kSqrt2Pi * lanczos_sum(x) / x) * half * (std::exp(-tmp) * half);
}

} // namespace

double sinpi(double x)
{
    double r = std::fmod(x, 2.0);
    if (r > 1.0)
        r -= 2.0;
    else if (r < -1.0)
        r += 2.0;
    if (r == 0.0 || r == 1.0 || r == -1.0)
        return 0.0;
    if (r > 0.5)
        r = 1.0 - r;
    else if (r < -0.5)
        r = -1.0 - r;
    return std::sin(kPi * r);
}

double gamma(double x)
{
    if (std::isnan(x))
        return x;
    if (is_nonpositive_integer(x))
        throw Error(ErrorCode::Pole, "gamma: pole at " + std::to_string(x));
    if (x > kGammaMax)
        throw Error(ErrorCode::Overflow, "gamma: overflow at " + std::to_string(x));
    if (x < 0.5) {
        const double g = gamma_positive(1.0 - x);
        return kPi / (sinpi(x) * g);
    }
    return gamma_positive(x);
}

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw Error(ErrorCode::ParamDomain, "log_gamma: argument must be positive");
    if (x < 10.0)
        return std::log(gamma(x));
    const double tmp = x + kLanczosG + 0.5;
    return (x + 0.5) * std::log(tmp) - tmp + std::log(kSqrt2Pi * lanczos_sum(x) / x);
}

double rgamma(double x)
{
    if (is_nonpositive_integer(x))
        return 0.0;
    if (x > kGammaMax)
        return 0.0;
    return 1.0 / gamma(x);
}

double gamma_half_ratio(double y)
{
    if (!(y > 0.0))
        throw Error(ErrorCode::ParamDomain, "gamma_half_ratio: argument must be positive");
    if (y < 20.0)
        return gamma(y + 0.5) / gamma(y);
    // Difference of two Stirling series; every term except sqrt is O(1/y).
    constexpr double b2k[5] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0};
    const double yh = y + 0.5;
    double e = (y - 0.5) * std::log1p(0.5 / y) - 0.5;
    for (int k = 1; k <= 5; ++k) {
        const double p = 1.0 - 2.0 * k;
        e += b2k[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * (std::pow(yh, p) - std::pow(y, p));
    }
    return std::sqrt(yh) * std::exp(e);
}

double bessel_i(double nu, double z)
{
    if (z < 0.0)
        throw Error(ErrorCode::ParamDomain, "bessel_i: negative argument");
    if (z == 0.0)
        return nu == 0.0 ? 1.0 : 0.0;
    const double q = 0.25 * z * z;
    // First non-vanishing term when nu is a negative integer.
    int k0 = 0;
    if (is_nonpositive_integer(nu + 1.0))
        k0 = static_cast<int>(-nu);
    double term = std::pow(q, k0) * rgamma(k0 + 1.0) * rgamma(nu + k0 + 1.0);
    double sum = 0.0, comp = 0.0;
    for (int k = k0; k < 100000; ++k) {
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= 1e-17 * std::abs(sum) && k > q)
            break;
        term *= q / ((k + 1.0) * (nu + k + 1.0));
    }
    return std::pow(0.5 * z, nu) * sum;
}

double bessel_k_scaled(double nu, double z)
{
    if (!(z > 0.0))
        throw Error(ErrorCode::ParamDomain, "bessel_k: argument must be positive");
    nu = std::abs(nu);
    int terms = 0;
    auto trapezoid = [&](double h) {
        double sum = 0.5;
        for (int k = 1;; ++k) {
            const double t = k * h;
            const double s = std::sinh(0.5 * t);
            const double expo = -2.0 * z * s * s;
            const double term = std::exp(expo) * std::cosh(nu * t);
            sum += term;
            if (expo + nu * t < -45.0 && t > 1.0) {
                terms = k;
                break;
            }
        }
        return h * sum;
    };
    double h = std::min(0.25, 0.7 / std::sqrt(z));
    double prev = trapezoid(h);
    for (int it = 0; it < 8; ++it) {
        h *= 0.5;
        const double cur = trapezoid(h);
        // Rounding in a sum of `terms` positive values sets the floor.
        if (std::abs(cur - prev) <= 4e-16 * std::sqrt(static_cast<double>(terms)) * std::abs(cur))
            return cur;
        prev = cur;
    }
    throw Error(ErrorCode::AccuracyLoss, "bessel_k: trapezoid rule did not settle");
}

double bessel_k_via_i(double nu, double z)
{
    if (nu == std::floor(nu)) {
        constexpr double off = 1e-6;
        return 0.5 * (bessel_k_via_i(nu + off, z) + bessel_k_via_i(nu - off, z));
    }
    return 0.5 * kPi * (bessel_i(-nu, z) - bessel_i(nu, z)) / sinpi(nu);
}

namespace {

double hyp2f1_series(double a, double b, double c, double z)
{
    double term = 1.0, sum = 1.0, comp = 0.0;
    for (int k = 0; k < 100000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= 1e-17 * std::abs(sum))
            return sum;
    }
    throw Error(ErrorCode::AccuracyLoss, "hyp2f1: series did not converge within 1e5 terms");
}

// Integral over (0, 1) of t^(p-1) (1-t)^(q-1) g(t, 1-t), split at 1/2 with a
// square-root substitution toward each endpoint.
double beta_weighted_integral(double p, double q, const std::function<double(double, double)>& g)
{
    IntegrateOptions opt;
    opt.rel_tol = 1e-15;
    const double um = std::sqrt(0.5);
    auto left = [&](double u) {
        const double t = u * u;
        return 2.0 * std::pow(u, 2.0 * p - 1.0) * std::pow(1.0 - t, q - 1.0) * g(t, 1.0 - t);
    };
    auto right = [&](double u) {
        const double tc = u * u;
        const double t = 1.0 - tc;
        return 2.0 * std::pow(u, 2.0 * q - 1.0) * std::pow(t, p - 1.0) * g(t, tc);
    };
    IntegralResult l = integrate_gk(left, 0.0, um, opt);
    IntegralResult r = integrate_gk(right, 0.0, um, opt);
    return to_double(l.value + r.value);
}

// 2F1(a, b; c; z) with w = 1 - z supplied separately so that z close to 1
// keeps its distance to the singularity.
double hyp2f1_impl(double a, double b, double c, double z, double w)
{
    if (!(z >= 0.0 && z <= 1.0 && w >= 0.0))
        throw Error(ErrorCode::OutOfSupport, "hyp2f1: z must lie in [0, 1]");
    if (w == 0.0) {
        if (c - a - b <= 0.0)
            throw Error(ErrorCode::Overflow, "hyp2f1: divergent at z = 1");
        return gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b);
    }
    if (z <= 0.5)
        return hyp2f1_series(a, b, c, z);
    // Euler integral needs c > e > 0 for the parameter e carried by t.
    double e = b, other = a;
    if (!(c > e && e > 0.0)) {
        e = a;
        other = b;
    }
    if (!(c > e && e > 0.0))
        return hyp2f1_series(a, b, c, z);
    const double pref = gamma(c) * rgamma(e) * rgamma(c - e);
    // 1 - z t = (1 - t) + w t, exact in the two pieces.
    return pref * beta_weighted_integral(e, c - e, [&](double t, double tc) { return std::pow(tc + w * t, -other); });
}

} // namespace

double hyp2f1(double a, double b, double c, double z) { return hyp2f1_impl(a, b, c, z, 1.0 - z); }

double hyp2f1_complement(double a, double b, double c, double w) { return hyp2f1_impl(a, b, c, 1.0 - w, w); }

double kummer_u(double a, double b, double x)
{
    if (!(a > 0.0) || !(x > 0.0))
        throw Error(ErrorCode::ParamDomain, "kummer_u: requires a > 0 and x > 0");
    // With t = tau / x: U = x^(1-b)/Gamma(a) * int e^-tau tau^(a-1) (x+tau)^(b-a-1) dtau.
    IntegrateOptions opt;
    opt.rel_tol = 1e-15;
    const double e = b - a - 1.0;
    auto head = [&](double u) {
        const double tau = u * u;
        return 2.0 * std::pow(u, 2.0 * a - 1.0) * std::exp(-tau) * std::pow(x + tau, e);
    };
    auto tail = [&](double s) {
        const double tau = 1.0 + s / (1.0 - s);
        const double j = 1.0 / ((1.0 - s) * (1.0 - s));
        return j * std::exp(-tau) * std::pow(tau, a - 1.0) * std::pow(x + tau, e);
    };
    IntegralResult h = integrate_gk(head, 0.0, 1.0, opt);
    IntegralResult t = integrate_gk(tail, 0.0, 1.0, opt);
    return std::pow(x, 1.0 - b) * rgamma(a) * to_double(h.value + t.value);
}

} // namespace mopquad
