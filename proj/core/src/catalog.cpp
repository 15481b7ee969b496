#include "mopquad/catalog.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "mopquad/error.hpp"
#include "mopquad/special.hpp"

namespace mopquad {

int param_count(int class_id) noexcept
{
    static constexpr int counts[kClassCount] = {3, 2, 3, 2, 1, 2, 2, 4, 3};
    if (class_id < 1 || class_id > kClassCount)
        return -1;
    return counts[class_id - 1];
}

const char* class_name(int class_id) noexcept
{
    switch (class_id) {
    case 1: return "Jacobi-Pineiro";
    case 2: return "multiple Laguerre, first kind";
    case 3: return "multiple Laguerre, second kind";
    case 4: return "multiple Hermite";
    case 5: return "Laguerre-Hermite (Angelesco)";
    case 6: return "Macdonald function K_nu";
    case 7: return "modified Bessel I_nu";
    case 8: return "Gauss hypergeometric 2F1";
    case 9: return "confluent hypergeometric U";
    default: return "unknown";
    }
}

std::vector<double> reference_params(int class_id)
{
    switch (class_id) {
    case 1: return {-0.5, -0.2, 0.4};
    case 2: return {-0.5, 0.5};
    case 3: return {-0.5, 0.2, 0.4};
    case 4: return {0.2, 0.5};
    case 5: return {0.5};
    case 6: return {-0.5, 0.5};
    case 7: return {0.5, -0.5};
    case 8: return {1.0, 1.0, 3.0, 2.0};
    case 9: return {3.0, 2.5, 7.5};
    default: throw Error(ErrorCode::UnknownClass, "unknown MOP class " + std::to_string(class_id));
    }
}

namespace {

[[noreturn]] void domain(int cls, const std::string& msg)
{
    throw Error(ErrorCode::ParamDomain, "class " + std::to_string(cls) + ": " + msg);
}

bool is_integer(double x) { return std::isfinite(x) && x == std::round(x); }

void check_domain(int cls, const std::vector<double>& p)
{
    switch (cls) {
    case 1:
        for (int j = 0; j < 3; ++j)
            if (!(p[j] > -1.0))
                domain(cls, "alpha" + std::to_string(j) + " must be > -1");
        if (is_integer(p[1] - p[2]))
            domain(cls, "alpha1-alpha2 must not be an integer");
        break;
    case 2:
        if (!(p[0] > -1.0) || !(p[1] > -1.0))
            domain(cls, "alpha1, alpha2 must be > -1");
        break;
    case 3:
        if (!(p[0] > -1.0))
            domain(cls, "alpha0 must be > -1");
        if (!(p[1] > 0.0) || !(p[2] > 0.0))
            domain(cls, "alpha1, alpha2 must be > 0");
        if (p[1] == p[2])
            domain(cls, "alpha1 must differ from alpha2");
        break;
    case 4:
        if (p[0] == p[1])
            domain(cls, "alpha1 must differ from alpha2");
        break;
    case 5:
        if (!(p[0] > -1.0))
            domain(cls, "beta must be > -1");
        break;
    case 6:
        if (!(p[0] > -1.0))
            domain(cls, "alpha must be > -1");
        if (!(p[1] >= 0.0))
            domain(cls, "nu must be >= 0");
        break;
    case 7:
        if (!(p[0] > 0.0))
            domain(cls, "beta must be > 0");
        if (!(p[1] >= -1.0))
            domain(cls, "nu must be >= -1");
        break;
    case 8: {
        const double a = p[0], b = p[1], c = p[2], d = p[3];
        if (!(a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0))
            domain(cls, "a, b, c, d must be positive");
        if (!(c + 1.0 > a && d > a))
            domain(cls, "c+1 > a and d > a required");
        if (!(c > b && d > b))
            domain(cls, "c > b and d > b required");
        break;
    }
    case 9: {
        const double a = p[0], b = p[1], c = p[2];
        if (!(a > 0.0 && b > 0.0 && c > 0.0))
            domain(cls, "a, b, c must be positive");
        if (!(c > std::max(a, b)))
            domain(cls, "c > max(a, b) required");
        break;
    }
    }
}

// Row-indexed generators: b(r) for r >= 0, c(r) for r >= 1, d(r) for r >= 2.
struct Rows {
    std::function<double(long)> b, c, d;
    double f11 = 0.0, f21 = 0.0, f22 = 0.0;
};

Rows jacobi_pineiro(const std::vector<double>& p)
{
    const double a0 = p[0], a1 = p[1], a2 = p[2];
    Rows r;
    r.b = [=](long row) {
        const double i = static_cast<double>(row / 2);
        if (row == 0)
            return (1 + a1) / (2 + a0 + a1);
        if (row % 2 == 0) {
            const double num =
                36 * i * i * i * i + (48 * a0 + 28 * a1 + 20 * a2 + 38) * i * i * i
                + (21 * a0 * a0 + 8 * a1 * a1 + 4 * a2 * a2 + 30 * a0 * a1 + 18 * a0 * a2 + 15 * a1 * a2
                   + 39 * a0 + 19 * a1 + 19 * a2 + 9) * i * i
                + (3 * a0 * a0 * a0 + 10 * a0 * a0 * a1 + 4 * a0 * a0 * a2 + 6 * a0 * a1 * a1 + 2 * a0 * a2 * a2
                   + 11 * a0 * a1 * a2 + 5 * a1 * a1 * a2 + 3 * a1 * a2 * a2 + 12 * a0 * a0 + 3 * a1 * a1
                   + 3 * a2 * a2 + 13 * a0 * a1 + 13 * a0 * a2 + 8 * a1 * a2 + 6 * a0 + 3 * a1 + 3 * a2) * i
                + a0 * a0 + a0 * a1 + a2 * a1 * a1 + 2 * a2 * a1 * a1 * a0 + 2 * a0 * a0 * a1 + a1 * a1 * a0
                + a2 * a2 * a0 + a2 * a2 * a1 + a0 * a0 * a0 * a1 + a0 * a0 * a1 * a1 + a2 * a2 * a0 * a1
                + a2 * a2 * a1 * a1 + 2 * a2 * a0 * a0 * a1 + 3 * a2 * a1 * a0 + 2 * a2 * a0 * a0 + a1 * a2
                + a0 * a0 * a0 + a0 * a2;
            return num / ((3 * i + a0 + a2) * (3 * i + a0 + a1) * (3 * i + a0 + a2 + 1) * (3 * i + a0 + a1 + 2));
        }
        const double num =
            36 * i * i * i * i + (48 * a0 + 20 * a1 + 28 * a2 + 106) * i * i * i
            + (21 * a0 * a0 + 4 * a1 * a1 + 8 * a2 * a2 + 18 * a0 * a1 + 30 * a0 * a2 + 15 * a1 * a2 + 105 * a0
               + 41 * a1 + 65 * a2 + 111) * i * i
            + (3 * a0 * a0 * a0 + 4 * a0 * a0 * a1 + 10 * a0 * a0 * a2 + 2 * a0 * a1 * a1 + 6 * a0 * a2 * a2
               + 11 * a0 * a1 * a2 + 3 * a1 * a1 * a2 + 5 * a1 * a2 * a2 + 30 * a0 * a0 + 5 * a1 * a1 + 13 * a2 * a2
               + 23 * a0 * a1 + 47 * a0 * a2 + 22 * a1 * a2 + 72 * a0 + 25 * a1 + 49 * a2 + 48) * i
            + 18 * a0 * a2 + 8 * a2 * a0 * a0 + 4 * a1 + 4 * a2 * a2 * a1 + 8 * a1 * a2 + 2 * a0 * a0 * a0
            + 5 * a2 * a2 * a0 + 8 * a2 * a1 * a0 + 12 * a2 + 7 + 15 * a0 + a2 * a2 * a1 * a1 + 10 * a0 * a0
            + 6 * a0 * a1 + 2 * a2 * a1 * a1 + 2 * a0 * a0 * a1 + a1 * a1 * a0 + 5 * a2 * a2 + a2 * a0 * a0 * a0
            + a2 * a2 * a0 * a0 + a1 * a1 + a2 * a1 * a1 * a0 + 2 * a2 * a0 * a0 * a1 + 2 * a2 * a2 * a0 * a1;
        return num / ((3 * i + a0 + a2 + 1) * (3 * i + a0 + a1 + 2) * (3 * i + a0 + a2 + 3) * (3 * i + a0 + a1 + 3));
    };
    r.c = [=](long row) {
        const double i = static_cast<double>(row / 2);
        if (row == 1)
            return (1 + a0) * (1 + a1) / ((3 + a0 + a1) * (2 + a0 + a1) * (2 + a0 + a1));
        if (row % 2 == 0) {
            const double num =
                54 * i * i * i * i + (63 * a0 + 45 * a1 + 45 * a2) * i * i * i
                + (24 * a0 * a0 + 8 * a1 * a1 + 8 * a2 * a2 + 42 * a0 * a1 + 42 * a0 * a2 + 44 * a1 * a2 - 8) * i * i
                + (3 * a0 * a0 * a0 + a1 * a1 * a1 + a2 * a2 * a2 + 12 * a0 * a0 * a1 + 12 * a0 * a0 * a2
                   + 3 * a0 * a1 * a1 + 3 * a0 * a2 * a2 + 33 * a0 * a1 * a2 + 8 * a1 * a1 * a2 + 8 * a1 * a2 * a2
                   - 3 * a0 - 4 * a1 - 4 * a2) * i
                + a0 * a0 * a0 * a1 + a0 * a0 * a0 * a2 + 6 * a0 * a0 * a1 * a2 + a1 * a1 * a1 * a2
                + a1 * a2 * a2 * a2 + 3 * a0 * a1 * a1 * a2 + 3 * a0 * a1 * a2 * a2 - a0 * a1 - a0 * a2 - 2 * a1 * a2;
            const double p1 = 3 * i + a0 + a1, p2 = 3 * i + a0 + a2;
            return i * (2 * i + a0) * (2 * i + a0 + a1) * (2 * i + a0 + a2) * num
                   / ((p1 + 1) * (p2 + 1) * p1 * p1 * p2 * p2 * (p1 - 1) * (p2 - 1));
        }
        const double num =
            54 * i * i * i * i * i + (63 * a0 + 45 * a1 + 45 * a2 + 135) * i * i * i * i
            + (24 * a0 * a0 + 8 * a1 * a1 + 8 * a2 * a2 + 42 * a0 * a1 + 42 * a0 * a2 + 44 * a1 * a2 + 126 * a0
               + 76 * a1 + 104 * a2 + 120) * i * i * i
            + (3 * a0 * a0 * a0 + a1 * a1 * a1 + a2 * a2 * a2 + 12 * a0 * a0 * a1 + 12 * a0 * a0 * a2
               + 3 * a0 * a1 * a1 + 3 * a0 * a2 * a2 + 33 * a0 * a1 * a2 + 8 * a1 * a1 * a2 + 8 * a1 * a2 * a2
               + 36 * a0 * a0 + 5 * a1 * a1 + 19 * a2 * a2 + 54 * a0 * a1 + 72 * a0 * a2 + 66 * a1 * a2 + 87 * a0
               + 39 * a1 + 81 * a2 + 45) * i * i
            + (a0 * a0 * a0 * a1 + a0 * a0 * a0 * a2 + 6 * a0 * a0 * a1 * a2 + a1 * a1 * a1 * a2 + a1 * a2 * a2 * a2
               + 3 * a0 * a1 * a1 * a2 + 3 * a0 * a1 * a2 * a2 + 3 * a0 * a0 * a0 + 2 * a2 * a2 * a2
               + 12 * a0 * a0 * a1 + 12 * a0 * a0 * a2 + 6 * a0 * a2 * a2 + 33 * a0 * a1 * a2 + 5 * a1 * a1 * a2
               + 11 * a1 * a2 * a2 + 18 * a0 * a0 + 20 * a0 * a1 + 38 * a0 * a2 + 14 * a2 * a2 + 26 * a1 * a2
               + 24 * a0 + 6 * a1 + 24 * a2 + 6) * i
            + a0 * a0 * a0 * a1 + 3 * a0 * a0 * a1 * a2 + 3 * a0 * a1 * a2 * a2 + a1 * a2 * a2 * a2 + a0 * a0 * a0
            + a2 * a2 * a2 + 3 * a0 * a0 * a1 + 3 * a0 * a0 * a2 + 6 * a0 * a1 * a2 + 3 * a0 * a2 * a2
            + 3 * a1 * a2 * a2 + 3 * a0 * a0 + 3 * a2 * a2 + 2 * a0 * a1 + 6 * a0 * a2 + 2 * a1 * a2 + 2 * a0 + 2 * a2;
        const double p1 = 3 * i + a0 + a1, p2 = 3 * i + a0 + a2;
        return (2 * i + a0 + 1) * (2 * i + a0 + a1 + 1) * (2 * i + a0 + a2 + 1) * num
               / ((p1 + 3) * (p2 + 2) * (p1 + 2) * (p1 + 2) * (p2 + 1) * (p2 + 1) * (p1 + 1) * p2);
    };
    r.d = [=](long row) {
        const double i = static_cast<double>(row / 2);
        const double p1 = 3 * i + a0 + a1, p2 = 3 * i + a0 + a2;
        if (row % 2 == 0)
            return i * (2 * i + a0) * (2 * i + a0 - 1) * (2 * i + a0 + a1) * (2 * i + a0 + a1 - 1) * (2 * i + a0 + a2)
                   * (2 * i + a0 + a2 - 1) * (i + a1) * (i + a1 - a2)
                   / ((p1 + 1) * p1 * p1 * p2 * (p1 - 1) * (p1 - 1) * (p2 - 1) * (p1 - 2) * (p2 - 2));
        return i * (2 * i + a0 + 1) * (2 * i + a0) * (2 * i + a0 + a1) * (2 * i + a0 + a1 + 1) * (2 * i + a0 + a2 + 1)
               * (2 * i + a0 + a2) * (i + a2) * (i + a2 - a1)
               / ((p1 + 2) * (p2 + 2) * (p1 + 1) * (p2 + 1) * (p2 + 1) * p1 * p2 * p2 * (p2 - 1));
    };
    const double g0 = gamma(1 + a0);
    r.f11 = g0 * gamma(1 + a1) / gamma(2 + a0 + a1);
    r.f21 = g0 * gamma(1 + a2) / gamma(2 + a0 + a2);
    const double b0 = r.b(0);
    r.f22 = ((1 + a2) - (2 + a0 + a2) * b0) * g0 * gamma(1 + a2) / gamma(3 + a0 + a2);
    return r;
}

Rows laguerre_first(const std::vector<double>& p)
{
    const double a1 = p[0], a2 = p[1];
    Rows r;
    r.b = [=](long row) {
        const double i = static_cast<double>(row / 2);
        return row % 2 == 0 ? 3 * i + a1 + 1 : 3 * i + a2 + 2;
    };
    r.c = [=](long row) {
        const double i = static_cast<double>(row / 2);
        return row % 2 == 0 ? i * (3 * i + a1 + a2) : 3 * i * i + (a1 + a2 + 3) * i + a1 + 1;
    };
    r.d = [=](long row) {
        const double i = static_cast<double>(row / 2);
        return row % 2 == 0 ? i * (i + a1) * (i + a1 - a2) : i * (i + a2) * (i + a2 - a1);
    };
    r.f11 = gamma(1 + a1);
    r.f21 = gamma(1 + a2);
    r.f22 = gamma(1 + a2) * (a2 - a1);
    return r;
}

Rows laguerre_second(const std::vector<double>& p)
{
    const double a0 = p[0], a1 = p[1], a2 = p[2];
    const double s = a1 * a1 + a2 * a2;
    Rows r;
    r.b = [=](long row) {
        const double i = static_cast<double>(row / 2);
        if (row % 2 == 0)
            return (i * (a1 + 3 * a2) + (1 + a0) * a2) / (a1 * a2);
        return (i * (3 * a1 + a2) + (2 + a0) * a1 + a2) / (a1 * a2);
    };
    r.c = [=](long row) {
        const double i = static_cast<double>(row / 2);
        if (row % 2 == 0)
            return i * (2 * i + a0) * s / (a1 * a1 * a2 * a2);
        return (2 * i * i * s + i * (a1 * a1 + 3 * a2 * a2 + a0 * s) + (1 + a0) * a2 * a2) / (a1 * a1 * a2 * a2);
    };
    r.d = [=](long row) {
        const double i = static_cast<double>(row / 2);
        if (row % 2 == 0)
            return i * (2 * i + a0) * (2 * i + a0 - 1) * (a2 - a1) / (a1 * a1 * a1 * a2);
        return i * (2 * i + a0) * (2 * i + a0 + 1) * (a1 - a2) / (a1 * a2 * a2 * a2);
    };
    const double g = gamma(1 + a0);
    r.f11 = std::pow(a1, -1 - a0) * g;
    r.f21 = std::pow(a2, -1 - a0) * g;
    r.f22 = (a1 - a2) / a1 * std::pow(a2, -2 - a0) * gamma(2 + a0);
    return r;
}

Rows hermite(const std::vector<double>& p)
{
    const double a1 = p[0], a2 = p[1];
    Rows r;
    r.b = [=](long row) { return row % 2 == 0 ? a1 / 2 : a2 / 2; };
    r.c = [=](long row) { return row / 2.0; };
    r.d = [=](long row) {
        const double i = static_cast<double>(row / 2);
        return row % 2 == 0 ? i * (a1 - a2) / 4 : i * (a2 - a1) / 4;
    };
    const double sp = std::sqrt(std::numbers::pi);
    r.f11 = std::exp(a1 * a1 / 4) * sp;
    r.f21 = std::exp(a2 * a2 / 4) * sp;
    r.f22 = (a2 - a1) / 2 * std::exp(a2 * a2 / 4) * sp;
    return r;
}

Rows laguerre_hermite(const std::vector<double>& p)
{
    const double beta = p[0];
    // X_i = -Gamma((i+beta+2)/2) / Gamma((i+beta+1)/2)
    auto X = [=](double i) { return -gamma_half_ratio((i + beta + 1) / 2); };
    Rows r;
    r.b = [=](long row) {
        const double x = X(static_cast<double>(row / 2));
        return row % 2 == 0 ? x : -x;
    };
    r.c = [=](long row) {
        const double i = static_cast<double>(row / 2);
        if (row % 2 == 0)
            return i / 2;
        const double x = X(i);
        return (2 * i + beta + 1) / 2 - x * x;
    };
    r.d = [=](long row) {
        const double i = static_cast<double>(row / 2);
        return row % 2 == 0 ? i / 2 * X(i - 1) : -i / 2 * X(i);
    };
    const double g1 = gamma((1 + beta) / 2);
    r.f11 = g1 / 2;
    r.f21 = g1 / 2;
    r.f22 = (-r.b(0) * g1 + gamma((2 + beta) / 2)) / 2;
    return r;
}

Rows macdonald(const std::vector<double>& p)
{
    const double al = p[0], nu = p[1];
    Rows r;
    r.b = [=](long row) {
        const double i = static_cast<double>(row);
        return i * (3 * i + al + 2 * nu) + (al + 1) * (3 * i + al + nu + 1);
    };
    r.c = [=](long row) {
        const double i = static_cast<double>(row);
        return i * (i + al) * (i + al + nu) * (3 * i + 2 * al + nu);
    };
    r.d = [=](long row) {
        const double i = static_cast<double>(row);
        return i * (i - 1) * (i + al) * (i + al - 1) * (i + al + nu) * (i + al + nu - 1);
    };
    r.f11 = gamma(al + 1) * gamma(al + nu + 1);
    r.f21 = gamma(al + 1) * gamma(al + nu + 2);
    r.f22 = gamma(al + 2) * gamma(al + nu + 2);
    return r;
}

Rows bessel_first(const std::vector<double>& p)
{
    const double be = p[0], nu = p[1];
    Rows r;
    r.b = [=](long row) { return (1 + be * (nu + 2.0 * row + 1)) / (be * be); };
    r.c = [=](long row) { return row * (2 + be * (nu + row)) / (be * be * be); };
    r.d = [=](long row) { return row * (row - 1.0) / (be * be * be * be); };
    const double e = std::exp(1 / be);
    r.f11 = std::pow(be, -1 - nu) * e;
    r.f21 = std::pow(be, -2 - nu) * e;
    r.f22 = std::pow(be, -3 - nu) * e;
    return r;
}

Rows gauss_hyper(const std::vector<double>& p)
{
    const double a = p[0], b = p[1], c = p[2], d = p[3];
    // c'_{2k-1} = c + k, c'_{2k} = d + k
    auto cp = [=](long i) { return i % 2 == 1 ? c + (i + 1) / 2 : d + i / 2; };
    auto lam = [=](long m) {
        const long i = m / 3;
        const double di = static_cast<double>(i);
        switch (m % 3) {
        case 0:
            if (i == 0)
                return 0.0;
            return di * (a + di - 1) * (cp(i) - b - 1)
                   / ((cp(i) + di - 2) * (cp(i) + di - 1) * (cp(i + 1) + di - 2));
        case 1:
            if (i == 0)
                return 0.0;
            return di * (b + di) * (cp(i + 1) - a - 1)
                   / ((cp(i) + di - 1) * (cp(i + 1) + di - 2) * (cp(i + 1) + di - 1));
        default:
            return (a + di) * (b + di) * (cp(i) - 1) / ((cp(i) + di - 1) * (cp(i) + di) * (cp(i + 1) + di - 1));
        }
    };
    Rows r;
    r.b = [=](long row) { return lam(3 * row) + lam(3 * row + 1) + lam(3 * row + 2); };
    // The printed c and d sequences start at the first used entry of each
    // subdiagonal: row r takes c_{r-1} and d_{r-2}.
    r.c = [=](long row) {
        const long q = row - 1;
        return lam(3 * q + 1) * lam(3 * q + 3) + lam(3 * q + 2) * lam(3 * q + 3) + lam(3 * q + 2) * lam(3 * q + 4);
    };
    r.d = [=](long row) {
        const long q = row - 2;
        return lam(3 * q + 2) * lam(3 * q + 4) * lam(3 * q + 6);
    };
    r.f11 = 1.0;
    r.f21 = 1.0;
    r.f22 = a * (c - b) / (c * d * (c + 1));
    return r;
}

Rows confluent_hyper(const std::vector<double>& p)
{
    const double a = p[0], b = p[1], c = p[2];
    Rows r;
    r.b = [=](long row) {
        const double i = static_cast<double>(row / 2);
        if (row % 2 == 0)
            return (2 * i + 1) * (a + 2 * i) * (b + 2 * i) / (c + 3 * i)
                   - 2 * i * (a + 2 * i - 1) * (b + 2 * i - 1) / (c + 3 * i - 1);
        return (2 * i + 2) * (a + 2 * i + 1) * (b + 2 * i + 1) / (c + 3 * i + 2)
               - (2 * i + 1) * (a + 2 * i) * (b + 2 * i) / (c + 3 * i);
    };
    r.c = [=](long row) {
        const double i = static_cast<double>(row / 2);
        if (row % 2 == 0)
            return 2 * i * (a + 2 * i - 1) * (b + 2 * i - 1) / (c + 3 * i - 1)
                   * ((2 * i - 1) * (a + 2 * i - 2) * (b + 2 * i - 2) / (2 * (c + 3 * i - 2))
                      - 2 * i * (a + 2 * i - 1) * (b + 2 * i - 1) / (c + 3 * i - 1)
                      + (2 * i + 1) * (a + 2 * i) * (b + 2 * i) / (2 * (c + 3 * i)));
        return (2 * i + 1) * (a + 2 * i) * (b + 2 * i) / (c + 3 * i)
               * (i * (a + 2 * i - 1) * (b + 2 * i - 1) / (c + 3 * i - 1)
                  - (2 * i + 1) * (a + 2 * i) * (b + 2 * i) / (c + 3 * i)
                  + (i + 1) * (a + 2 * i + 1) * (b + 2 * i + 1) / (c + 3 * i + 1));
    };
    // The printed d sequence is offset by one: row r takes d_{r-1}.
    r.d = [=](long row) {
        const long k = row - 1;
        const double i = static_cast<double>(k / 2);
        if (k % 2 == 0)
            return 2 * i * (2 * i + 1) * (a + 2 * i - 1) * (a + 2 * i) * (b + 2 * i - 1) * (b + 2 * i) * (c + i - 1)
                   / ((c + 3 * i - 2) * (c + 3 * i - 1) * (c + 3 * i) * (c + 3 * i - 1) * (c + 3 * i) * (c + 3 * i + 1))
                   * (c - a + i) * (c - b + i);
        return (2 * i + 1) * (2 * i + 2) * (a + 2 * i) * (a + 2 * i + 1) * (b + 2 * i) * (b + 2 * i + 1)
               / ((c + 3 * i) * (c + 3 * i + 1) * (c + 3 * i + 2));
    };
    r.f11 = 1.0;
    r.f21 = 1.0;
    r.f22 = -a * b / (c * (c + 1));
    return r;
}

Rows rows_for(const MopSpec& spec)
{
    switch (spec.class_id) {
    case 1: return jacobi_pineiro(spec.params);
    case 2: return laguerre_first(spec.params);
    case 3: return laguerre_second(spec.params);
    case 4: return hermite(spec.params);
    case 5: return laguerre_hermite(spec.params);
    case 6: return macdonald(spec.params);
    case 7: return bessel_first(spec.params);
    case 8: return gauss_hyper(spec.params);
    case 9: return confluent_hyper(spec.params);
    default: throw Error(ErrorCode::UnknownClass, "unknown MOP class " + std::to_string(spec.class_id));
    }
}

double finite_or_throw(double v, const char* what, long row)
{
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "class_mop: non-finite " << what << " at row " << row;
        throw Error(ErrorCode::Overflow, os.str(), row);
    }
    return v;
}

} // namespace

MopSpec validate_spec(int class_id, const std::vector<double>& params, int n)
{
    const int need = param_count(class_id);
    if (need < 0)
        throw Error(ErrorCode::UnknownClass, "unknown MOP class " + std::to_string(class_id) + " (expected 1..9)");
    if (static_cast<int>(params.size()) != need)
        throw Error(ErrorCode::ParamCount, "class " + std::to_string(class_id) + " takes " + std::to_string(need)
                                               + " parameters, got " + std::to_string(params.size()));
    for (double v : params)
        if (!std::isfinite(v))
            throw Error(ErrorCode::ParamDomain, "class " + std::to_string(class_id) + ": parameters must be finite");
    check_domain(class_id, params);
    if (n < 2)
        throw Error(ErrorCode::BadN, "n must be >= 2, got " + std::to_string(n));
    return MopSpec{class_id, params, n};
}

RecurrenceSystem class_mop(const MopSpec& spec)
{
    const Rows rows = rows_for(spec);
    const long n = spec.n;
    RecurrenceSystem rs;
    BandedHessenberg& h = rs.h;
    h.b.resize(n);
    h.a.assign(n > 0 ? n - 1 : 0, 1.0);
    h.c.resize(n > 0 ? n - 1 : 0);
    h.d.resize(n > 1 ? n - 2 : 0);
    for (long r = 0; r < n; ++r) {
        h.b[r] = finite_or_throw(rows.b(r), "b", r);
        if (r >= 1)
            h.c[r - 1] = finite_or_throw(rows.c(r), "c", r);
        if (r >= 2)
            h.d[r - 2] = finite_or_throw(rows.d(r), "d", r);
    }
    h.a_close = 1.0;
    h.c_close = finite_or_throw(rows.c(n), "c", n);
    rs.f11 = finite_or_throw(rows.f11, "f11", 0);
    rs.f21 = finite_or_throw(rows.f21, "f21", 0);
    rs.f22 = finite_or_throw(rows.f22, "f22", 0);
    return rs;
}

AsymptoticForms asymptotic_reference(int class_id, const std::vector<double>& p, long index)
{
    const double i = static_cast<double>(index);
    const double s = index % 2 == 0 ? 1.0 : -1.0;
    const double k = 4.0 / 27.0;
    switch (class_id) {
    case 1:
    case 8:
        return {3 * k * k, k * k * k, std::sqrt(3.0) * k, k / 3};
    case 2:
        return {3 * (i / 2) * (i / 2), (i / 2) * (i / 2) * (i / 2), std::sqrt(3.0) / 2 * i, i / 6};
    case 3: {
        const double a1 = p[1], a2 = p[2];
        const double q = (a1 * a1 + a2 * a2) / (a1 * a1 * a2 * a2);
        return {i * i / 2 * q, s * i * i * i * (a2 - a1) / (2 * std::pow(a1, 2 + s) * std::pow(a2, 2 - s)),
                std::sqrt(q / 2) * i, s * i * (a2 - a1) / (std::pow(a1, s) * std::pow(a2, -s) * (a1 * a1 + a2 * a2))};
    }
    case 4: {
        const double a1 = p[0], a2 = p[1];
        return {i / 2, s * i * (a1 - a2) / 8, std::sqrt(i / 2), s * (a1 - a2) / 4};
    }
    case 5:
        return {i / 4, -s * std::sqrt(i * i * i) / 8, std::sqrt(i / 4), -s * std::sqrt(i / 4)};
    case 6:
        return {3 * i * i * i * i, i * i * i * i * i * i, std::sqrt(3.0) * i * i, i * i / 3};
    case 7: {
        const double be = p[0];
        return {i * i / (be * be), i * i / (be * be * be * be), i / be, 1 / (be * be)};
    }
    case 9: {
        const double cc = 52.0 / 81.0;
        const double dd = (s > 0 ? 8.0 / 27.0 : 8.0 / 729.0) * i * i * i;
        return {cc * i * i, dd, std::sqrt(cc) * i, dd / (cc * i * i)};
    }
    default:
        throw Error(ErrorCode::UnknownClass, "unknown MOP class " + std::to_string(class_id));
    }
}

} // namespace mopquad
