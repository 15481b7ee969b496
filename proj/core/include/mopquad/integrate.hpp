#pragma once

#include <functional>

#include "mopquad/double_double.hpp"

namespace mopquad {

struct IntegralResult {
    dd value;
    double err = 0.0;
    int panels = 0;
    bool converged = false;
};

struct IntegrateOptions {
    double abs_tol = 0.0;
    double rel_tol = 1e-16;
    int max_panels = 4000;
};

// Globally adaptive 15-point Gauss-Kronrod on the finite interval [a, b].
// Panel sums are accumulated in double-double; the error estimate uses the
// QUADPACK scaling of |K15 - G7|.  The integrand must be finite on the open
// interval; endpoints are never evaluated.
IntegralResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                            const IntegrateOptions& opt = {});

} // namespace mopquad
