#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "mopquad/catalog.hpp"
#include "mopquad/flops.hpp"

namespace mopquad {

struct QuadratureRule {
    std::vector<double> nodes; // ascending
    std::vector<double> w1;
    std::vector<double> w2;
    std::vector<int> sweeps;   // Ehrlich-Aberth sweep in which each node converged
    int ier = 0;
    MopSpec spec;
};

struct RuleOptions {
    double tol = 0.0; // <= 0 selects n^2 * eps
    FlopCounter* flops = nullptr;
};

QuadratureRule gauss_mop(const MopSpec& spec, const RuleOptions& opt = {});

// Same pipeline on an explicit recurrence system (test hook).
QuadratureRule rule_from_system(const RecurrenceSystem& rs, const RuleOptions& opt = {});

// (sum w1 f(x), sum w2 f(x)) with compensated summation.
// Throws Error(RuleNotConverged) if rule.ier != 0.
std::pair<double, double> apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f);

// Degrees of exactness for w1 and w2 along the step-line index.
std::pair<int, int> exactness_degree(const MopSpec& spec) noexcept;
std::pair<int, int> exactness_degree(int n) noexcept;

} // namespace mopquad
