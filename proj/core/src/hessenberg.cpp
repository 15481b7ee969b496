#include "mopquad/hessenberg.hpp"

#include <cmath>
#include <string>

#include "mopquad/error.hpp"

namespace mopquad {

BalancedSystem balance(const BandedHessenberg& h, FlopCounter* flops)
{
    const std::size_t n = h.size();
    BalancedSystem s;
    s.b_hat = h.b;
    s.a_hat.resize(n > 0 ? n - 1 : 0);
    s.c_hat.resize(s.a_hat.size());
    s.d_hat.resize(n > 1 ? n - 2 : 0);

    // ratio[i] = sqrt(a_i / c_{i+1}) = s_{i+1}/s_i relative to the geometric mean
    double prev_ratio = 0.0;
    std::uint64_t ops = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double ac = h.a[i] * h.c[i];
        if (!(ac > 0.0))
            throw Error(ErrorCode::NonPositivePivot,
                        "balance: a_" + std::to_string(i) + "*c_" + std::to_string(i + 1) + " <= 0",
                        static_cast<long>(i));
        const double m = std::sqrt(ac);
        s.a_hat[i] = m;
        s.c_hat[i] = m;
        const double ratio = std::sqrt(h.a[i] / h.c[i]);
        if (i >= 1)
            s.d_hat[i - 1] = h.d[i - 1] * prev_ratio * ratio;
        prev_ratio = ratio;
        ops += i >= 1 ? 6 : 4;
    }
    const double ac = h.a_close * h.c_close;
    s.a_close_hat = ac > 0.0 ? std::sqrt(ac) : h.a_close;
    s.s1 = 1.0;
    s.s2 = n >= 2 ? std::sqrt(h.c[0] / h.a[0]) : 1.0;
    if (flops)
        flops->balance += ops + 4;
    return s;
}

BandedHessenberg as_banded(const BalancedSystem& s)
{
    BandedHessenberg h;
    h.a = s.a_hat;
    h.b = s.b_hat;
    h.c = s.c_hat;
    h.d = s.d_hat;
    h.a_close = s.a_close_hat;
    h.c_close = s.a_close_hat;
    return h;
}

} // namespace mopquad
