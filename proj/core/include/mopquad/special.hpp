#pragma once

namespace mopquad {

// Gamma function, Lanczos approximation (g = 607/128, 15 terms).
// Throws Error(Pole) at non-positive integers, Error(Overflow) above 171.62.
double gamma(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// 1/Gamma(x); zero at the poles, never throws.
double rgamma(double x);

// Gamma(y + 1/2) / Gamma(y) for y > 0 without overflow.
double gamma_half_ratio(double y);

// sin(pi x) with exact zeros at the integers.
double sinpi(double x);

// Modified Bessel function of the first kind by its power series.
double bessel_i(double nu, double z);

// exp(z) K_nu(z) from the integral of exp(-z (cosh t - 1)) cosh(nu t) over
// t > 0, trapezoid rule with step halving.  Throws AccuracyLoss if the
// halving sequence does not settle.
double bessel_k_scaled(double nu, double z);

// K_nu(z) = (pi/2)(I_{-nu}(z) - I_nu(z)) / sin(nu pi); integer nu by
// averaging nu +- 1e-6.  Only trustworthy for small z; kept as a cross-check.
double bessel_k_via_i(double nu, double z);

// Gauss hypergeometric 2F1(a, b; c; z) for 0 <= z <= 1.  Power series for
// z <= 1/2, Euler integral otherwise.
double hyp2f1(double a, double b, double c, double z);

// 2F1(a, b; c; 1 - w) for 0 <= w <= 1, accurate when w is tiny.
double hyp2f1_complement(double a, double b, double c, double w);

// Tricomi confluent hypergeometric U(a, b, x) for a > 0, x > 0 by its
// Laplace-type integral.
double kummer_u(double a, double b, double x);

} // namespace mopquad
