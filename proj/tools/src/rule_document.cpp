#include "mopquad_cli/rule_document.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <stdexcept>

namespace mopquad::cli {

#ifndef MOPQUAD_VERSION
#define MOPQUAD_VERSION "0.0.0"
#endif

const char* tool_version() noexcept { return MOPQUAD_VERSION; }

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_double(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

RuleDocument make_document(const QuadratureRule& rule)
{
    RuleDocument d;
    d.class_id = rule.spec.class_id;
    d.n = rule.spec.n;
    d.params = rule.spec.params;
    d.nodes = rule.nodes;
    d.weights1 = rule.w1;
    d.weights2 = rule.w2;
    d.ier = rule.ier;
    d.tool_version = tool_version();
    d.timestamp = utc_timestamp();
    return d;
}

nlohmann::json to_json(const RuleDocument& doc)
{
    return {
        {"class", doc.class_id},
        {"n", doc.n},
        {"params", doc.params},
        {"nodes", doc.nodes},
        {"weights1", doc.weights1},
        {"weights2", doc.weights2},
        {"ier", doc.ier},
        {"meta", {{"tool_version", doc.tool_version}, {"timestamp", doc.timestamp}}},
    };
}

RuleDocument document_from_json(const nlohmann::json& j)
{
    RuleDocument d;
    try {
        d.class_id = j.at("class").get<int>();
        d.n = j.at("n").get<int>();
        d.params = j.at("params").get<std::vector<double>>();
        d.nodes = j.at("nodes").get<std::vector<double>>();
        d.weights1 = j.at("weights1").get<std::vector<double>>();
        d.weights2 = j.at("weights2").get<std::vector<double>>();
        d.ier = j.at("ier").get<int>();
        if (j.contains("meta")) {
            d.tool_version = j["meta"].value("tool_version", "");
            d.timestamp = j["meta"].value("timestamp", "");
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("rule document: ") + e.what());
    }
    const auto n = static_cast<std::size_t>(d.n);
    if (d.nodes.size() != n || d.weights1.size() != n || d.weights2.size() != n)
        throw std::runtime_error("rule document: sequence lengths differ from n");
    return d;
}

std::string to_csv(const RuleDocument& doc)
{
    std::string s = "node,weight1,weight2\n";
    for (std::size_t k = 0; k < doc.nodes.size(); ++k) {
        s += format_double(doc.nodes[k]);
        s += ',';
        s += format_double(doc.weights1[k]);
        s += ',';
        s += format_double(doc.weights2[k]);
        s += '\n';
    }
    return s;
}

} // namespace mopquad::cli
