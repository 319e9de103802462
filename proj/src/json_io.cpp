#include "qpleth/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace qpleth {

nlohmann::json partition_json(const Partition& la) {
    return nlohmann::json(la.parts());
}

nlohmann::json pseries_json(const PSeries& f) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        out.push_back({{"partition", it->first.parts()}, {"coeff", it->second.str()}});
    return out;
}

nlohmann::json q_expansion_terms(const QExpansion& e, const std::string& key) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        out.push_back({{key, it->first.parts()}, {"coeff", it->second.str()}});
    return out;
}

nlohmann::json h_expansion_terms(const HExpansion& e, const std::string& key) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        out.push_back({{key, it->first.parts()}, {"coeff", it->second.str()}});
    return out;
}

nlohmann::json strip_certificate_json(const StripCertificate& cert) {
    return {{"schema", kSchemaTag},
            {"s", cert.s},
            {"k", cert.k},
            {"lambda", cert.lambda.parts()},
            {"mu", cert.mu.parts()},
            {"is_strip", true},
            {"padded", cert.padded},
            {"A", cert.a_value},
            {"sigma", cert.sigma},
            {"sigma_cycles", cert.sigma_cycles()},
            {"sign", cert.sign}};
}

nlohmann::json straighten_tree_json(const StraightenNode& node) {
    nlohmann::json out;
    out["state"] = node.state;
    if (node.move_index > 0) {
        out["move"] = {node.move_index, node.move_amount};
        out["c"] = TRational(node.coeff).str();
    }
    if (!node.children.empty()) {
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& child : node.children) kids.push_back(straighten_tree_json(child));
        out["children"] = std::move(kids);
    }
    return out;
}

std::vector<int> parse_parts(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        const auto parsed = nlohmann::json::parse(body);
        if (!parsed.is_array()) throw std::invalid_argument("expected an array of integers");
        return parsed.get<std::vector<int>>();
    }
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        parts.push_back(std::stoi(item));
    }
    return parts;
}

}  // namespace qpleth
