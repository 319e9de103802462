#pragma once

#include <json.hpp>

#include <string>

#include "qpleth/hall_littlewood.hpp"
#include "qpleth/mn_rule_q.hpp"
#include "qpleth/schur_q.hpp"
#include "qpleth/straighten.hpp"

namespace qpleth {

inline constexpr const char* kSchemaTag = "qpleth/1";

nlohmann::json partition_json(const Partition& la);
nlohmann::json pseries_json(const PSeries& f);

// Term lists, largest index partition first.
nlohmann::json q_expansion_terms(const QExpansion& e, const std::string& key);
nlohmann::json h_expansion_terms(const HExpansion& e, const std::string& key);

nlohmann::json strip_certificate_json(const StripCertificate& cert);
nlohmann::json straighten_tree_json(const StraightenNode& node);

// Parses "[3,1]", "3,1" or "" into a part list (unvalidated).
std::vector<int> parse_parts(const std::string& text);

}  // namespace qpleth
