#include "mace/capacity.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "mace/errors.hpp"
#include "mace/format.hpp"

namespace mace {

namespace {

void require_four_parties(const PureState& state) {
    if (state.num_parties() != 4)
        throw ShapeError("operation needs a four-party state, got " + std::to_string(state.num_parties()));
}

void require_four_qubits(const PureState& state) {
    require_four_parties(state);
    if (!state.all_qubits()) throw ShapeError("operation needs four qubits");
}

void require_pair(std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("measuring parties must differ");
    if (i > 3 || j > 3) throw std::invalid_argument("party index out of range");
}

double second_largest(std::vector<double> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return values.at(1);
}

ProtocolResult settle(std::size_t i, std::size_t j, ProtocolMeasurement measurement,
                      const std::vector<Branch>& outcomes) {
    ProtocolResult result;
    result.party_pair = {i, j};
    result.measurement = std::move(measurement);
    double total = 0.0;
    for (const auto& outcome : outcomes) {
        ProtocolBranch branch{outcome.probability, 0.0};
        if (outcome.state) {
            branch.conversion = singlet_conversion_prob(schmidt_spectrum(*outcome.state, Bipartition({0}, 2)));
            result.value += branch.probability * branch.conversion;
        }
        total += branch.probability;
        result.branches.push_back(branch);
    }
    if (std::abs(total - 1.0) > 1e-10) throw std::logic_error("protocol branch probabilities do not sum to one");
    result.value = std::clamp(result.value, 0.0, 1.0);
    return result;
}

} // namespace

double singlet_conversion_prob(const SchmidtSpectrum& spectrum) {
    if (spectrum.squared_coeffs.empty()) return 0.0;
    return std::clamp(2.0 * (1.0 - spectrum.largest()), 0.0, 1.0);
}

std::vector<double> single_party_conversion_probs(const PureState& state) {
    require_four_parties(state);
    std::vector<double> probs;
    for (std::size_t k = 0; k < 4; ++k)
        probs.push_back(singlet_conversion_prob(schmidt_spectrum(state, Bipartition({k}, 4))));
    return probs;
}

std::vector<double> pair_split_conversion_probs(const PureState& state) {
    require_four_parties(state);
    std::vector<double> probs;
    for (std::size_t partner : {1u, 2u, 3u})
        probs.push_back(singlet_conversion_prob(schmidt_spectrum(state, Bipartition({0, partner}, 4))));
    return probs;
}

double p_maxmin_s(const PureState& state) {
    return second_largest(single_party_conversion_probs(state));
}

double p_maxmin_d(const PureState& state) {
    return second_largest(pair_split_conversion_probs(state));
}

std::string ProtocolResult::describe(const std::vector<std::string>& labels) const {
    std::ostringstream out;
    out << labels.at(party_pair.first) << labels.at(party_pair.second);
    if (const auto* bases = std::get_if<ProductBases>(&measurement)) {
        out << " x=" << format_g12(bases->first.x) << " phi=" << format_g12(bases->first.phi);
        if (bases->first.x != bases->second.x || bases->first.phi != bases->second.phi)
            out << " x2=" << format_g12(bases->second.x) << " phi2=" << format_g12(bases->second.phi);
    } else if (std::holds_alternative<BellMeasurement>(measurement)) {
        out << " Bell";
    } else {
        out << " joint";
    }
    return out.str();
}

ProtocolResult unassisted_protocol_value(const PureState& state, std::size_t i, std::size_t j,
                                         const ProjectiveQubitBasis& basis_i, const ProjectiveQubitBasis& basis_j) {
    require_four_qubits(state);
    require_pair(i, j);
    basis_i.validate();
    basis_j.validate();

    const auto vi = basis_i.vectors();
    const auto vj = basis_j.vectors();
    const std::array<std::size_t, 2> parties{i, j};
    std::vector<Branch> outcomes;
    for (const auto& a : vi) {
        for (const auto& b : vj) {
            Eigen::Vector4cd v;
            v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
            outcomes.push_back(project_parties(state, parties, Eigen::VectorXcd(v)));
        }
    }
    return settle(i, j, ProductBases{basis_i, basis_j}, outcomes);
}

ProtocolResult assisted_bell_value(const PureState& state, std::size_t i, std::size_t j) {
    require_four_qubits(state);
    require_pair(i, j);
    return settle(i, j, BellMeasurement{}, joint_bell_measure(state, i, j));
}

ProtocolResult assisted_joint_value(const PureState& state, std::size_t i, std::size_t j,
                                    const Eigen::Matrix4cd& basis) {
    require_four_qubits(state);
    require_pair(i, j);
    return settle(i, j, JointBasis{basis}, joint_measure(state, i, j, basis));
}

std::string to_string(CapacityKind kind) {
    return kind == CapacityKind::Assisted ? "assisted" : "unassisted";
}

CapacityKind parse_capacity_kind(std::string_view text) {
    if (text == "assisted") return CapacityKind::Assisted;
    if (text == "unassisted") return CapacityKind::Unassisted;
    throw std::invalid_argument("capacity kind must be 'assisted' or 'unassisted'");
}

CapacityBracket capacity_bracket(const PureState& state, CapacityKind kind, const SweepGrid& grid,
                                 unsigned threads) {
    require_four_qubits(state);
    return capacity_bracket(state, kind, sweep_unassisted(state, grid, {}, threads));
}

CapacityBracket capacity_bracket(const PureState& state, CapacityKind kind, const SweepResult& sweep) {
    require_four_qubits(state);
    CapacityBracket bracket;
    bracket.kind = kind;
    bracket.lower = sweep.best.value;
    bracket.achieving_protocol = sweep.best;

    const double s = p_maxmin_s(state);
    if (kind == CapacityKind::Unassisted) {
        bracket.upper = std::min(s, p_maxmin_d(state));
    } else {
        bracket.upper = s;
        for (const auto& [i, j] : all_party_pairs()) {
            const ProtocolResult bell = assisted_bell_value(state, i, j);
            if (bell.value > bracket.lower) {
                bracket.lower = bell.value;
                bracket.achieving_protocol = bell;
            }
        }
    }

    if (bracket.lower > bracket.upper + kBracketSlack) {
        std::ostringstream msg;
        msg << "internal consistency failure: " << to_string(kind) << " lower bound " << bracket.lower
            << " exceeds upper bound " << bracket.upper;
        throw std::logic_error(msg.str());
    }
    bracket.lower = std::min(bracket.lower, bracket.upper);
    return bracket;
}

} // namespace mace
