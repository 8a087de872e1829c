#include <numbers>
#include <ostream>
#include <stdexcept>

#include "mace/capacity.hpp"
#include "mace/format.hpp"
#include "parallel.hpp"

namespace mace {

double SweepGrid::x_at(int k) const {
    return (std::numbers::pi / 2) * static_cast<double>(k) / static_cast<double>(steps_x - 1);
}

double SweepGrid::phi_at(int l) const {
    return 2 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(steps_phi);
}

std::vector<std::pair<std::size_t, std::size_t>> all_party_pairs() {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) pairs.emplace_back(i, j);
    return pairs;
}

SweepResult sweep_unassisted(const PureState& state, const SweepGrid& grid,
                             std::vector<std::pair<std::size_t, std::size_t>> pairs, unsigned threads) {
    if (grid.steps_x < 2 || grid.steps_phi < 2) throw std::invalid_argument("sweep grid needs at least 2 steps per axis");
    if (pairs.empty()) pairs = all_party_pairs();

    const auto nx = static_cast<std::size_t>(grid.steps_x);
    const auto nphi = static_cast<std::size_t>(grid.steps_phi);
    const std::size_t per_pair = nx * nphi;

    SweepResult result;
    result.pairs = pairs;
    result.table.resize(pairs.size() * per_pair);
    std::vector<ProtocolResult> protocols(result.table.size());

    detail::parallel_for(result.table.size(), threads, [&](std::size_t index) {
        const std::size_t p = index / per_pair;
        const int k = static_cast<int>((index % per_pair) / nphi);
        const int l = static_cast<int>(index % nphi);
        const ProjectiveQubitBasis first{grid.x_at(k), grid.phi_at(l)};
        const auto [i, j] = pairs[p];

        ProtocolResult best = unassisted_protocol_value(state, i, j, first, first);
        if (grid.independent) {
            for (int k2 = 0; k2 < grid.steps_x; ++k2) {
                for (int l2 = 0; l2 < grid.steps_phi; ++l2) {
                    const ProjectiveQubitBasis second{grid.x_at(k2), grid.phi_at(l2)};
                    ProtocolResult candidate = unassisted_protocol_value(state, i, j, first, second);
                    if (candidate.value > best.value) best = std::move(candidate);
                }
            }
        }
        result.table[index] = SweepPoint{first.x, first.phi, p, best.value};
        protocols[index] = std::move(best);
    });

    std::size_t best = 0;
    for (std::size_t index = 1; index < protocols.size(); ++index)
        if (protocols[index].value > protocols[best].value) best = index;
    result.best = std::move(protocols[best]);
    return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep, const std::vector<std::string>& labels) {
    out << "x,phi,pair,value\n";
    for (const auto& point : sweep.table) {
        const auto [i, j] = sweep.pairs.at(point.pair_index);
        out << format_g12(point.x) << ',' << format_g12(point.phi) << ',' << labels.at(i) << labels.at(j) << ','
            << format_g12(point.value) << '\n';
    }
}

} // namespace mace
