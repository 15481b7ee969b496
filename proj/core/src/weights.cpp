#include "mopquad/weights.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mopquad/error.hpp"
#include "mopquad/special.hpp"

namespace mopquad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// x^nu sum_k x^k / (k! Gamma(nu+k+1)) e^{-beta x}, summed outward from the
// largest term so nothing overflows before the exponential is applied.
double bessel_i_weight(double beta, double nu, double x)
{
    const double lx = std::log(x);
    if (beta * x - 2.0 * std::sqrt(x) > 745.0)
        return 0.0;
    const double k0 = std::max(1.0, std::floor(std::sqrt(x)));
    const double peak = std::exp((nu + k0) * lx - log_gamma(k0 + 1.0) - log_gamma(nu + k0 + 1.0) - beta * x);
    double sum = peak;
    double t = peak;
    for (double k = k0; k >= 1.0; k -= 1.0) {
        t *= k * (nu + k) / x;
        sum += t;
        if (t <= 1e-18 * sum)
            break;
    }
    t = peak;
    for (double k = k0 + 1.0;; k += 1.0) {
        t *= x / (k * (nu + k));
        sum += t;
        if (t <= 1e-18 * sum)
            break;
    }
    return sum;
}

void need_class(const MopSpec& spec, int which)
{
    if (spec.class_id < 1 || spec.class_id > kClassCount)
        throw Error(ErrorCode::UnknownClass, "unknown class " + std::to_string(spec.class_id));
    if (static_cast<int>(spec.params.size()) != param_count(spec.class_id))
        throw Error(ErrorCode::ParamCount, "wrong number of parameters");
    if (which != 1 && which != 2)
        throw Error(ErrorCode::ParamDomain, "which must be 1 or 2");
}

} // namespace

Support weight_support(const MopSpec& spec, int which)
{
    need_class(spec, which);
    switch (spec.class_id) {
    case 1:
    case 8:
        return {0.0, 1.0};
    case 4:
        return {-kInf, kInf};
    case 5:
        return which == 1 ? Support{-kInf, 0.0} : Support{0.0, kInf};
    default:
        return {0.0, kInf};
    }
}

double weight_eval(const MopSpec& spec, int which, double x) { return weight_eval(spec, which, x, 1.0 - x); }

double weight_eval(const MopSpec& spec, int which, double x, double xc)
{
    const Support s = weight_support(spec, which);
    if (!(x > s.lo && x < s.hi) || ((spec.class_id == 1 || spec.class_id == 8) && !(xc > 0.0)))
        throw Error(ErrorCode::OutOfSupport, "weight_eval: x outside the open support");
    const auto& p = spec.params;
    const int j = which;
    switch (spec.class_id) {
    case 1:
        return std::pow(x, p[j]) * std::pow(xc, p[0]);
    case 2:
        return std::exp(p[j - 1] * std::log(x) - x);
    case 3:
        return std::exp(p[0] * std::log(x) - p[j] * x);
    case 4:
        return std::exp(-x * x + p[j - 1] * x);
    case 5:
        return std::exp(p[0] * std::log(std::abs(x)) - x * x);
    case 6: {
        const double nu = p[1] + j - 1;
        const double z = 2.0 * std::sqrt(x);
        const double e = (p[0] + nu / 2) * std::log(x) - z;
        if (e < -745.0)
            return 0.0;
        return 2.0 * std::exp(e) * bessel_k_scaled(nu, z);
    }
    case 7:
        return bessel_i_weight(p[0], p[1] + j - 1, x);
    case 8: {
        const double a = p[0], b = p[1], c = p[2], d = p[3];
        const double de = c + d - a - b;
        const double lead = j == 1 ? log_gamma(c) - log_gamma(b) : log_gamma(c + 1) - log_gamma(b + 1);
        const double k = std::exp(lead + log_gamma(d) - log_gamma(a) - log_gamma(de));
        const double f = hyp2f1_complement(c - b, j == 1 ? d - b : d - b - 1, de, x);
        return k * std::pow(x, a - 1) * std::pow(xc, de - 1) * f;
    }
    case 9: {
        const double a = p[0], b = p[1], c = p[2];
        const double lead = j == 1 ? log_gamma(c) : log_gamma(c + 1);
        const double k = std::exp(lead - log_gamma(a) - log_gamma(b));
        const double e = (a - 1) * std::log(x) - x;
        if (e < -745.0)
            return 0.0;
        return k * std::exp(e) * kummer_u(j == 1 ? c - b : c - b + 1, a - b + 1, x);
    }
    }
    return 0.0;
}

} // namespace mopquad
