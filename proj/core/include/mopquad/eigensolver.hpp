#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mopquad/flops.hpp"
#include "mopquad/hessenberg.hpp"

namespace mopquad {

struct GivensRotation {
    double gamma = 1.0;
    double sigma = 0.0;
};

// [gamma sigma; -sigma gamma] * [p; q] = [r; 0].
GivensRotation make_givens(double p, double q) noexcept;

// Implicit-shift QL, eigenvalues only, ascending.  sub has length n-1.
// Throws Error(NoConvergence) carrying the index j that exceeded 30 sweeps.
std::vector<double> symmetric_tridiag_eigenvalues(std::vector<double> diag, const std::vector<double>& sub,
                                                  FlopCounter* flops = nullptr);

struct NewtonStep {
    std::vector<double> p;      // unit null vector of the n x (n+1) pencil, length n+1
    std::vector<double> pprime; // derivatives p'_1..p'_n in the same scaling, length n

    double correction() const { return p.back() / pprime.back(); }
};

NewtonStep newton_step(const BalancedSystem& s, double x, FlopCounter* flops = nullptr);

// Same as newton_step but writes into caller-owned buffers (sizes n+1 and n).
void newton_step_into(const BalancedSystem& s, double x, std::span<double> p, std::span<double> pprime,
                      FlopCounter* flops = nullptr);

std::vector<double> left_eigenvector(const BalancedSystem& s, double x, FlopCounter* flops = nullptr);
void left_eigenvector_into(const BalancedSystem& s, double x, std::span<double> u, FlopCounter* flops = nullptr);

// One Newton step on p_n(x) for the balanced recurrence, evaluated in
// double-double.  Returns the corrected value, or x unchanged if the step is
// not finite or larger than max_step.
double polish_eigenvalue(const BalancedSystem& s, double x, double max_step, FlopCounter* flops = nullptr);

struct EigenEstimate {
    double x = 0.0;
    std::vector<double> v; // right unit eigenvector
    std::vector<double> u; // left unit eigenvector
    double residual = 0.0; // |p_n(x)| in the unit-vector scaling
    int iterations = 0;    // sweep in which x converged (30 cap)
};

struct AberthResult {
    std::vector<EigenEstimate> estimates;
    int ier = 0; // 0, or 1-based index of the first unconverged eigenvalue
};

constexpr int kMaxAberthSweeps = 30;

double default_tolerance(std::size_t n) noexcept;

// Called once per eigenvalue with its index, the value, the right vector
// (length n, unit), the left vector (length n, unit), the residual and sweep.
using EigenSink = std::function<void(std::size_t j, double x, std::span<const double> v, std::span<const double> u,
                                     double residual, int sweeps)>;

// Core iteration; O(n) workspace.  Returns ier.  An empty sink skips the
// eigenvector work and only refines x.
int ehrlich_aberth_stream(const BalancedSystem& s, std::vector<double>& x, double tol, const EigenSink& sink,
                          FlopCounter* flops = nullptr);

// Convenience wrapper that keeps every eigenvector (O(n^2) memory).
AberthResult ehrlich_aberth(const BalancedSystem& s, std::vector<double> x0, double tol,
                            FlopCounter* flops = nullptr);

// Reduction to tridiagonal form, symmetrization and QL.  If the elimination
// breaks down it retries on the flipped matrix J H^T J, then brackets the
// nodes by the converged (n-1)-point rule, then uses the tridiagonal part.
std::vector<double> initial_guesses(const BalancedSystem& s, FlopCounter* flops = nullptr);

} // namespace mopquad
