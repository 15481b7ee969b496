#pragma once

#include <cstddef>
#include <vector>

#include "mopquad/flops.hpp"

namespace mopquad {

// Banded lower Hessenberg matrix H_n stored by diagonals:
//   b[i] = H(i,i)          i = 0..n-1
//   a[i] = H(i,i+1)        i = 0..n-2
//   c[i] = H(i+1,i)        i = 0..n-2   (the recurrence coefficient c_{i+1})
//   d[i] = H(i+2,i)        i = 0..n-3   (the recurrence coefficient d_{i+2})
// The n x (n+1) pencil used by the Newton step also needs the coupling of the
// last row to p_n; a_close is that entry and c_close is the matching c_n, used
// only to balance it.
struct BandedHessenberg {
    std::vector<double> a, b, c, d;
    double a_close = 1.0;
    double c_close = 1.0;

    std::size_t size() const noexcept { return b.size(); }
};

struct BalancedSystem {
    std::vector<double> a_hat, b_hat, c_hat, d_hat;
    double a_close_hat = 1.0;
    double s1 = 1.0;
    double s2 = 1.0;

    std::size_t size() const noexcept { return b_hat.size(); }
};

// Diagonal similarity making the superdiagonal equal the first subdiagonal.
// Throws Error(NonPositivePivot) if some a_i c_{i+1} <= 0.
BalancedSystem balance(const BandedHessenberg& h, FlopCounter* flops = nullptr);

// Wraps a balanced system as a plain banded matrix (a = c = c_hat).
BandedHessenberg as_banded(const BalancedSystem& s);

} // namespace mopquad
