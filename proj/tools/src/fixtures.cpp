#include "mopquad_cli/fixtures.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "mopquad/catalog.hpp"
#include "mopquad/oracle.hpp"
#include "mopquad_cli/rule_document.hpp"

#ifndef MOPQUAD_DEFAULT_FIXTURES
#define MOPQUAD_DEFAULT_FIXTURES "fixtures/reference_integrals.json"
#endif

namespace mopquad::cli {

const FixtureEntry* FixtureSet::find(int class_id, const std::vector<double>& params, int which,
                                     const std::string& integrand_id) const
{
    for (const FixtureEntry& e : entries)
        if (e.class_id == class_id && e.params == params && e.which == which && e.integrand_id == integrand_id)
            return &e;
    return nullptr;
}

nlohmann::json to_json(const FixtureSet& set)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const FixtureEntry& e : set.entries)
        arr.push_back({{"class", e.class_id},
                       {"params", e.params},
                       {"which", e.which},
                       {"integrand_id", e.integrand_id},
                       {"value_hi", e.value_hi},
                       {"value_lo", e.value_lo},
                       {"err_est", e.err_est}});
    return {{"meta", {{"generator", set.generator}, {"generated_at", set.generated_at}}}, {"entries", arr}};
}

FixtureSet fixtures_from_json(const nlohmann::json& j)
{
    FixtureSet set;
    try {
        if (j.contains("meta")) {
            set.generator = j["meta"].value("generator", "");
            set.generated_at = j["meta"].value("generated_at", "");
        }
        for (const auto& e : j.at("entries")) {
            FixtureEntry f;
            f.class_id = e.at("class").get<int>();
            f.params = e.at("params").get<std::vector<double>>();
            f.which = e.at("which").get<int>();
            f.integrand_id = e.at("integrand_id").get<std::string>();
            f.value_hi = e.at("value_hi").get<double>();
            f.value_lo = e.at("value_lo").get<double>();
            f.err_est = e.at("err_est").get<double>();
            set.entries.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error(std::string("fixtures: ") + ex.what());
    }
    return set;
}

FixtureSet load_fixtures(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open fixtures file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error("cannot parse fixtures file " + path + ": " + ex.what());
    }
    return fixtures_from_json(j);
}

void save_fixtures(const FixtureSet& set, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write fixtures file: " + path);
    out << to_json(set).dump(2) << '\n';
}

FixtureSet generate_reference_fixtures()
{
    FixtureSet set;
    set.generator = std::string("mopquad ") + tool_version() +
                    " reference_integral (adaptive Gauss-Kronrod, double-double accumulation)";
    set.generated_at = utc_timestamp();
    const auto f = [](double x) { return x * std::exp(-x); };
    for (int c = 1; c <= kClassCount; ++c) {
        const MopSpec spec{c, reference_params(c), 2};
        for (int which = 1; which <= 2; ++which) {
            const IntegralResult r = reference_integral_ex(spec, which, f);
            set.entries.push_back({c, spec.params, which, kIntegrandId, r.value.hi, r.value.lo, r.err});
        }
    }
    return set;
}

std::string resolve_fixtures_path(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("MOPQUAD_FIXTURES"); env && *env)
        return env;
    return MOPQUAD_DEFAULT_FIXTURES;
}

} // namespace mopquad::cli
