#include "mace/records.hpp"

#include <algorithm>
#include <stdexcept>

namespace mace {

using nlohmann::json;

json protocol_record(const ProtocolResult& protocol, const std::vector<std::string>& labels) {
    json rec;
    rec["pair"] = labels.at(protocol.party_pair.first) + labels.at(protocol.party_pair.second);
    rec["bases"] = json::array();
    if (const auto* bases = std::get_if<ProductBases>(&protocol.measurement)) {
        rec["measurement"] = "product";
        for (const auto* b : {&bases->first, &bases->second}) rec["bases"].push_back({{"x", b->x}, {"phi", b->phi}});
    } else if (std::holds_alternative<BellMeasurement>(protocol.measurement)) {
        rec["measurement"] = "bell";
    } else {
        rec["measurement"] = "joint";
    }
    rec["value"] = protocol.value;
    rec["description"] = protocol.describe(labels);
    return rec;
}

json bracket_record(const CapacityBracket& bracket, const std::vector<std::string>& labels) {
    return json{{"kind", to_string(bracket.kind)},
                {"lower", bracket.lower},
                {"upper", bracket.upper},
                {"protocol", protocol_record(bracket.achieving_protocol, labels)}};
}

void require_exact_fields(const json& record, const std::vector<std::string>& fields) {
    if (!record.is_object()) throw std::invalid_argument("record is not an object");
    if (record.size() != fields.size()) throw std::invalid_argument("record has unexpected field count");
    for (const auto& f : fields)
        if (!record.contains(f)) throw std::invalid_argument("record is missing field '" + f + "'");
}

} // namespace mace
