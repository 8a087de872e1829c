#include "mace/state_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mace/diagnostics.hpp"
#include "mace/errors.hpp"

namespace mace {

using nlohmann::json;

PureState parse_state_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(std::string("malformed state document: ") + e.what());
    }
    if (!doc.is_object()) throw IoError("state document must be an object");
    if (!doc.contains("local_dims") || !doc.contains("amplitudes"))
        throw IoError("state document needs 'local_dims' and 'amplitudes'");

    try {
        const auto dims = doc.at("local_dims").get<std::vector<int>>();
        std::vector<Complex> amps;
        for (const auto& pair : doc.at("amplitudes")) {
            if (!pair.is_array() || pair.size() != 2) throw IoError("each amplitude must be a [real, imaginary] pair");
            amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        std::vector<std::string> labels;
        if (doc.contains("party_labels")) labels = doc.at("party_labels").get<std::vector<std::string>>();

        double norm2 = 0.0;
        for (const auto& a : amps) norm2 += std::norm(a);
        if (std::abs(std::sqrt(norm2) - 1.0) > kRawNormWarnThreshold) {
            std::ostringstream msg;
            msg << "state norm " << std::sqrt(norm2) << " differs from 1; renormalizing";
            warn(msg.str());
        }
        return PureState(std::move(amps), dims, std::move(labels));
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed state document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("invalid state document: ") + e.what());
    }
}

PureState read_state_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open state file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_document(buf.str());
}

void write_state_document(std::ostream& out, const PureState& state) {
    json doc;
    doc["local_dims"] = state.local_dims();
    doc["party_labels"] = state.party_labels();
    json amps = json::array();
    for (const auto& a : state.amplitudes()) amps.push_back({a.real(), a.imag()});
    doc["amplitudes"] = std::move(amps);
    out << doc.dump(2) << '\n';
}

void write_state_file(const std::filesystem::path& path, const PureState& state) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write state file '" + path.string() + "'");
    write_state_document(out, state);
    if (!out) throw IoError("failed writing state file '" + path.string() + "'");
}

} // namespace mace
