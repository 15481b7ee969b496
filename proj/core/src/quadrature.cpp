#include "mopquad/quadrature.hpp"

#include <algorithm>
#include <numeric>

#include "mopquad/double_double.hpp"
#include "mopquad/eigensolver.hpp"
#include "mopquad/error.hpp"
#include "mopquad/hessenberg.hpp"

namespace mopquad {

QuadratureRule rule_from_system(const RecurrenceSystem& rs, const RuleOptions& opt)
{
    const std::size_t n = rs.h.size();
    if (n < 2)
        throw Error(ErrorCode::BadN, "gauss_mop: n must be >= 2");
    const BalancedSystem bs = balance(rs.h, opt.flops);
    std::vector<double> x = initial_guesses(bs, opt.flops);
    const double tol = opt.tol > 0.0 ? opt.tol : default_tolerance(n);

    std::vector<double> nodes(n), w1(n), w2(n);
    std::vector<int> sweeps(n);
    std::uint64_t ops = 0;
    const int ier = ehrlich_aberth_stream(
        bs, x, tol,
        [&](std::size_t j, double xj, std::span<const double> v, std::span<const double> u, double, int sw) {
            double uv = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                uv += u[k] * v[k];
            nodes[j] = xj;
            w1[j] = v[0] * rs.f11 * u[0] / uv;
            w2[j] = bs.s1 * v[0] * (rs.f21 * u[0] / bs.s1 + rs.f22 * u[1] / bs.s2) / uv;
            sweeps[j] = sw;
            ops += 2 * n + 14;
        },
        opt.flops);
    if (opt.flops)
        opt.flops->weights += ops;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return nodes[i] < nodes[j]; });
    QuadratureRule rule;
    rule.ier = ier;
    rule.nodes.resize(n);
    rule.w1.resize(n);
    rule.w2.resize(n);
    rule.sweeps.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        rule.nodes[k] = nodes[order[k]];
        rule.w1[k] = w1[order[k]];
        rule.w2[k] = w2[order[k]];
        rule.sweeps[k] = sweeps[order[k]];
    }
    return rule;
}

QuadratureRule gauss_mop(const MopSpec& spec, const RuleOptions& opt)
{
    if (spec.n < 2)
        throw Error(ErrorCode::BadN, "gauss_mop: n must be >= 2");
    QuadratureRule rule = rule_from_system(class_mop(spec), opt);
    rule.spec = spec;
    return rule;
}

std::pair<double, double> apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f)
{
    if (rule.ier != 0)
        throw Error(ErrorCode::RuleNotConverged,
                    "apply_rule: rule did not converge (ier = " + std::to_string(rule.ier) + ")", rule.ier);
    dd s1(0.0), s2(0.0);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double fx = f(rule.nodes[k]);
        s1 += ddx::two_prod(rule.w1[k], fx);
        s2 += ddx::two_prod(rule.w2[k], fx);
    }
    return {to_double(s1), to_double(s2)};
}

std::pair<int, int> exactness_degree(int n) noexcept
{
    const int n1 = (n + 1) / 2;
    const int n2 = n / 2;
    return {n + n1 - 1, n + n2 - 1};
}

std::pair<int, int> exactness_degree(const MopSpec& spec) noexcept { return exactness_degree(spec.n); }

} // namespace mopquad
