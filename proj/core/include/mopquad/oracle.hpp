#pragma once

#include <functional>
#include <vector>

#include "mopquad/catalog.hpp"
#include "mopquad/double_double.hpp"
#include "mopquad/hessenberg.hpp"
#include "mopquad/integrate.hpp"

namespace mopquad {

// Eigen-decomposition of a small banded Hessenberg matrix in double-double.
// Eigenvalues ascending; right[j] and left[j] are unit 2-norm vectors with
// H right[j] = values[j] right[j] and left[j]^T H = values[j] left[j]^T.
struct DenseEigen {
    std::vector<dd> values;
    std::vector<std::vector<dd>> right;
    std::vector<std::vector<dd>> left;
};

constexpr std::size_t kOracleMaxN = 32;

// Shifted QR on the dense matrix, then inverse iteration for the vectors.
// Throws ParamDomain for n > 32, NoConvergence if QR stalls or meets a
// complex pair.
DenseEigen dense_eigen_dd(const BandedHessenberg& h);

// kappa_j = |u_j| |v_j| / |u_j^T v_j|, ordered like the eigenvalues.
std::vector<double> condition_numbers(const BandedHessenberg& h);
std::vector<double> condition_numbers(const DenseEigen& e);

// Integral of f * w^(which) over the support, by adaptive Gauss-Kronrod after
// mapping to finite panels.  reference_integral_ex reports the error estimate;
// reference_integral throws AccuracyLoss when it exceeds tol * (1 + |I|).
IntegralResult reference_integral_ex(const MopSpec& spec, int which, const std::function<double(double)>& f);
dd reference_integral(const MopSpec& spec, int which, const std::function<double(double)>& f, double tol = 1e-16);

// k-th moment of w^(which) in closed form, classes 1-7.
// Throws Unsupported for classes 8 and 9.
double closed_form_moment(const MopSpec& spec, int which, int k);

} // namespace mopquad
