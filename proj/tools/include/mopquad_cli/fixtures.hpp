#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mopquad/double_double.hpp"

namespace mopquad::cli {

// Integrand used by the reference experiment: f(x) = x exp(-x).
inline constexpr const char* kIntegrandId = "x_exp_minus_x";

struct FixtureEntry {
    int class_id = 0;
    std::vector<double> params;
    int which = 1;
    std::string integrand_id;
    double value_hi = 0.0;
    double value_lo = 0.0;
    double err_est = 0.0;

    dd value() const { return {value_hi, value_lo}; }
};

struct FixtureSet {
    std::string generator;
    std::string generated_at;
    std::vector<FixtureEntry> entries;

    // nullptr if absent.
    const FixtureEntry* find(int class_id, const std::vector<double>& params, int which,
                             const std::string& integrand_id = kIntegrandId) const;
};

nlohmann::json to_json(const FixtureSet& set);
FixtureSet fixtures_from_json(const nlohmann::json& j);

// Throws std::runtime_error naming the path if it cannot be read or parsed.
FixtureSet load_fixtures(const std::string& path);
void save_fixtures(const FixtureSet& set, const std::string& path);

// Reference integrals of x exp(-x) against both weights of every class at
// its reference parameters.
FixtureSet generate_reference_fixtures();

// --fixtures value if non-empty, else $MOPQUAD_FIXTURES, else the path baked
// in at build time.
std::string resolve_fixtures_path(const std::string& flag);

} // namespace mopquad::cli
