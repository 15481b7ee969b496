#include "mopquad/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mopquad/error.hpp"

namespace mopquad {

Tridiagonal reduce_to_tridiagonal(const BalancedSystem& s, FlopCounter* flops)
{
    const std::size_t n = s.size();
    // Row-indexed work arrays: b[i] = T(i,i), a[i] = T(i,i+1), c[i] = T(i,i-1), d[i] = T(i,i-2).
    std::vector<double> b = s.b_hat;
    std::vector<double> a(n, 0.0), c(n, 0.0), d(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        a[i] = s.a_hat[i];
        c[i + 1] = s.c_hat[i];
    }
    for (std::size_t i = 0; i + 2 < n; ++i)
        d[i + 2] = s.d_hat[i];

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        scale = std::max({scale, std::abs(a[i]), std::abs(b[i]), std::abs(c[i]), std::abs(d[i])});
    bool bumped = false;
    auto pivot = [&](double& p, std::size_t idx) {
        if (p != 0.0)
            return;
        if (bumped)
            throw Error(ErrorCode::ZeroPivot, "reduce_to_tridiagonal: zero pivot at row " + std::to_string(idx),
                        static_cast<long>(idx));
        bumped = true;
        p = std::numeric_limits<double>::epsilon() * (scale > 0.0 ? scale : 1.0);
    };

    std::uint64_t ops = 0;
    for (std::size_t r = n; r-- > 2;) {
        if (d[r] == 0.0)
            continue;
        pivot(c[r], r);
        double h = d[r] / c[r];
        c[r - 1] -= h * b[r - 1];
        b[r - 2] -= h * a[r - 2];
        double t = d[r - 2] * h;
        d[r] = 0.0;
        d[r - 1] += h * c[r - 2];
        c[r - 1] += h * b[r - 2];
        b[r - 1] += h * a[r - 2];
        ops += 12;
        // t sits at (j, j-3); push it up two rows at a time.
        for (std::size_t j = r - 1; j >= 3 && t != 0.0; j -= 2) {
            pivot(d[j], j);
            h = t / d[j];
            d[j - 1] -= h * c[j - 1];
            c[j - 2] -= h * b[j - 2];
            b[j - 3] -= h * a[j - 3];
            t = d[j - 3] * h;
            d[j - 2] += h * c[j - 3];
            c[j - 2] += h * b[j - 3];
            b[j - 2] += h * a[j - 3];
            ops += 14;
        }
    }
    if (flops)
        flops->reduce += ops;

    Tridiagonal out;
    out.diag = std::move(b);
    out.sup.resize(n > 0 ? n - 1 : 0);
    out.sub.resize(out.sup.size());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out.sup[i] = a[i];
        out.sub[i] = c[i + 1];
    }
    return out;
}

Tridiagonal symmetrize(const Tridiagonal& t, FlopCounter* flops)
{
    Tridiagonal out;
    out.diag = t.diag;
    out.sub.resize(t.sub.size());
    for (std::size_t i = 0; i < t.sub.size(); ++i) {
        const double p = t.sup[i] * t.sub[i];
        if (!(p > 0.0))
            throw Error(ErrorCode::NegativeProduct,
                        "symmetrize: sup*sub <= 0 at index " + std::to_string(i), static_cast<long>(i));
        out.sub[i] = std::sqrt(p);
    }
    out.sup = out.sub;
    if (flops)
        flops->symmetrize += 2 * t.sub.size();
    return out;
}

} // namespace mopquad
