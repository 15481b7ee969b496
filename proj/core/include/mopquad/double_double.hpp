#pragma once

#include <cmath>
#include <ostream>

namespace mopquad {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2; roughly 31 significant digits.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double x) : hi(x), lo(0.0) {}
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

using dd = DoubleDouble;

namespace ddx {

inline dd two_sum(double a, double b)
{
    double s = a + b;
    double bb = s - a;
    double e = (a - (s - bb)) + (b - bb);
    return {s, e};
}

inline dd quick_two_sum(double a, double b)
{
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b)
{
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace ddx

inline dd operator+(const dd& a, const dd& b)
{
    dd s = ddx::two_sum(a.hi, b.hi);
    dd t = ddx::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = ddx::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return ddx::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(const dd& a) { return {-a.hi, -a.lo}; }
inline dd operator-(const dd& a, const dd& b) { return a + (-b); }

inline dd operator*(const dd& a, const dd& b)
{
    dd p = ddx::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return ddx::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(const dd& a, const dd& b)
{
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = ddx::quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, const dd& b) { return a = a + b; }
inline dd& operator-=(dd& a, const dd& b) { return a = a - b; }
inline dd& operator*=(dd& a, const dd& b) { return a = a * b; }
inline dd& operator/=(dd& a, const dd& b) { return a = a / b; }

inline bool operator<(const dd& a, const dd& b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(const dd& a, const dd& b) { return b < a; }
inline bool operator<=(const dd& a, const dd& b) { return !(b < a); }
inline bool operator>=(const dd& a, const dd& b) { return !(a < b); }
inline bool operator==(const dd& a, const dd& b) { return a.hi == b.hi && a.lo == b.lo; }

inline dd abs(const dd& a) { return a.hi < 0.0 ? -a : a; }

inline dd sqrt(const dd& a)
{
    if (a.hi <= 0.0)
        return dd(0.0);
    // One Newton step on the double estimate (Karp's trick).
    double x = 1.0 / std::sqrt(a.hi);
    double ax = a.hi * x;
    dd diff = a - ddx::two_prod(ax, ax);
    return ddx::two_sum(ax, diff.hi * (x * 0.5));
}

inline double to_double(const dd& a) { return a.hi + a.lo; }

inline std::ostream& operator<<(std::ostream& os, const dd& a)
{
    return os << a.hi << (a.lo < 0 ? " - " : " + ") << std::abs(a.lo);
}

} // namespace mopquad
