#pragma once

#include <cstdint>

namespace mopquad {

// Optional instrumentation. Every routine that takes a FlopCounter* adds its
// floating point operation count (sqrt counted as one flop) when non-null.
struct FlopCounter {
    std::uint64_t reduce = 0;
    std::uint64_t symmetrize = 0;
    std::uint64_t balance = 0;
    std::uint64_t ql = 0;
    std::uint64_t newton = 0;
    std::uint64_t left = 0;
    std::uint64_t aberth = 0;
    std::uint64_t polish = 0; // double-double ops counted as their double flop cost
    std::uint64_t weights = 0;

    std::uint64_t total() const noexcept
    {
        return reduce + symmetrize + balance + ql + newton + left + aberth + polish + weights;
    }
};

} // namespace mopquad
