#pragma once

#include <string>
#include <vector>

#include "mopquad/hessenberg.hpp"

namespace mopquad {

struct MopSpec {
    int class_id = 0;
    std::vector<double> params;
    int n = 0;
};

// Banded matrix plus the lower triangular F = [f11 0; f21 f22] that turns
// eigenvectors into weights.  h.c_close holds c_n so the pencil closure can be
// balanced like every other off-diagonal pair.
struct RecurrenceSystem {
    BandedHessenberg h;
    double f11 = 0.0;
    double f21 = 0.0;
    double f22 = 0.0;
};

struct AsymptoticForms {
    double c = 0.0;
    double d = 0.0;
    double c_hat = 0.0;
    double d_hat = 0.0;
};

constexpr int kClassCount = 9;

// Number of parameters for class_id, or -1 for an unknown class.
int param_count(int class_id) noexcept;
const char* class_name(int class_id) noexcept;
// Parameter values used by the reference experiments for each class.
std::vector<double> reference_params(int class_id);

MopSpec validate_spec(int class_id, const std::vector<double>& params, int n);

RecurrenceSystem class_mop(const MopSpec& spec);

// Large-index behaviour of c_i, d_i and their balanced counterparts, in the
// row index of H.  Test support only.
AsymptoticForms asymptotic_reference(int class_id, const std::vector<double>& params, long i);

} // namespace mopquad
