#pragma once

#include <vector>

#include "mopquad/flops.hpp"
#include "mopquad/hessenberg.hpp"

namespace mopquad {

// Tridiagonal matrix: diag (n), sub[i] = T(i+1,i), sup[i] = T(i,i+1).
// The symmetric variant keeps sup == sub.
struct Tridiagonal {
    std::vector<double> diag, sub, sup;

    std::size_t size() const noexcept { return diag.size(); }
};

// Bottom-up elementary elimination of the second subdiagonal with an upward
// bulge chase.  Roughly 3.5 n^2 flops.  A vanishing pivot is bumped once by
// an epsilon-scaled amount; a second one throws Error(ZeroPivot).
Tridiagonal reduce_to_tridiagonal(const BalancedSystem& s, FlopCounter* flops = nullptr);

// Off-diagonal <- sqrt(sup * sub).  Throws Error(NegativeProduct).
Tridiagonal symmetrize(const Tridiagonal& t, FlopCounter* flops = nullptr);

} // namespace mopquad
