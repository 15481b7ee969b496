#pragma once

#include "mopquad/catalog.hpp"

namespace mopquad {

// Open support interval of w^(which); infinite ends are +-infinity.
struct Support {
    double lo = 0.0;
    double hi = 0.0;
};

Support weight_support(const MopSpec& spec, int which);

// w^(which)(x) for the class in spec.  Validation grade: used by the
// reference integrator, never by the rule itself.
// Throws OutOfSupport outside the open support, AccuracyLoss from the
// Bessel, 2F1 and U evaluators.
double weight_eval(const MopSpec& spec, int which, double x);

// Same, with xc = 1 - x given exactly; only classes 1 and 8 use it.
double weight_eval(const MopSpec& spec, int which, double x, double xc);

} // namespace mopquad
