#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mopquad/quadrature.hpp"

namespace mopquad::cli {

struct RuleDocument {
    int class_id = 0;
    int n = 0;
    std::vector<double> params;
    std::vector<double> nodes;
    std::vector<double> weights1;
    std::vector<double> weights2;
    int ier = 0;
    std::string tool_version;
    std::string timestamp; // ISO 8601, UTC
};

RuleDocument make_document(const QuadratureRule& rule);

nlohmann::json to_json(const RuleDocument& doc);
// Throws std::runtime_error on missing fields or length mismatches.
RuleDocument document_from_json(const nlohmann::json& j);

// Header `node,weight1,weight2`, shortest round-trip decimal for every value.
std::string to_csv(const RuleDocument& doc);

// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

const char* tool_version() noexcept;
std::string utc_timestamp();

} // namespace mopquad::cli
