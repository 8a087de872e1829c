#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mace/capacity.hpp"

namespace mace {

// Field lists of the structured outputs. Records carry exactly these keys.
inline const std::vector<std::string> kBracketFields{"kind", "lower", "upper", "protocol"};
inline const std::vector<std::string> kProtocolFields{"pair", "measurement", "bases", "value", "description"};

// {"pair": "AB", "measurement": "product" | "bell" | "joint",
//  "bases": [{"x":..,"phi":..},{"x":..,"phi":..}] (product only, else []),
//  "value": .., "description": "AB x=... phi=..."}
nlohmann::json protocol_record(const ProtocolResult& protocol, const std::vector<std::string>& labels);

// {"kind": "assisted"|"unassisted", "lower": .., "upper": .., "protocol": {...}}
nlohmann::json bracket_record(const CapacityBracket& bracket, const std::vector<std::string>& labels);

// Throws std::invalid_argument unless `record` is an object with exactly `fields`.
void require_exact_fields(const nlohmann::json& record, const std::vector<std::string>& fields);

} // namespace mace
