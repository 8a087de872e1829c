#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "mace/measurement.hpp"
#include "mace/state.hpp"

namespace mace {

// Maximal LOCC probability of turning a pure bipartite state with this
// spectrum into a two-qubit singlet: min(1, 2 (1 - lambda_max^2)).
double singlet_conversion_prob(const SchmidtSpectrum& spectrum);

// Singlet-conversion probabilities across i:rest for each of the four parties.
std::vector<double> single_party_conversion_probs(const PureState& state);

// Conversion probabilities across AB:CD, AC:BD, AD:BC (in that order).
std::vector<double> pair_split_conversion_probs(const PureState& state);

// Max over all pairs of the pairwise minimum of the single-party conversion
// probabilities, which is the second largest of the four. Upper bound on both
// capacities. Requires four parties (ShapeError).
double p_maxmin_s(const PureState& state);

// Second largest of the three two-vs-two conversion probabilities. Upper bound
// on the unassisted capacity. Requires four parties (ShapeError).
double p_maxmin_d(const PureState& state);

// Measurement applied by the two measuring parties.
struct ProductBases {
    ProjectiveQubitBasis first;
    ProjectiveQubitBasis second;
};
struct BellMeasurement {};
struct JointBasis {
    Eigen::Matrix4cd columns;
};
using ProtocolMeasurement = std::variant<ProductBases, BellMeasurement, JointBasis>;

struct ProtocolBranch {
    double probability = 0.0;
    double conversion = 0.0;
};

// One-round protocol: parties i and j measure, the remaining two parties
// convert their residual pure state to a singlet.
struct ProtocolResult {
    std::pair<std::size_t, std::size_t> party_pair{0, 1};
    ProtocolMeasurement measurement = ProductBases{};
    std::vector<ProtocolBranch> branches;
    double value = 0.0;

    // E.g. "AB x=0.785398163397 phi=0" or "AB Bell".
    [[nodiscard]] std::string describe(const std::vector<std::string>& labels) const;
};

// Measures parties i and j in the given product bases. Requires four qubits
// (ShapeError) and i != j (std::invalid_argument).
ProtocolResult unassisted_protocol_value(const PureState& state, std::size_t i, std::size_t j,
                                         const ProjectiveQubitBasis& basis_i, const ProjectiveQubitBasis& basis_j);

// Bell measurement on (i, j), the entangled measurement made possible by an
// assisting singlet shared between the two.
ProtocolResult assisted_bell_value(const PureState& state, std::size_t i, std::size_t j);

// Arbitrary rank-1 joint projective measurement on (i, j); columns of
// `basis` are the measurement vectors.
ProtocolResult assisted_joint_value(const PureState& state, std::size_t i, std::size_t j,
                                    const Eigen::Matrix4cd& basis);

struct SweepGrid {
    int steps_x = 101;
    int steps_phi = 101;
    // false: both parties share (x, phi). true: the second party's parameters
    // range over the same grid independently (steps_x * steps_phi times costlier).
    bool independent = false;

    [[nodiscard]] double x_at(int k) const;
    [[nodiscard]] double phi_at(int l) const;
};

struct SweepPoint {
    double x = 0.0;
    double phi = 0.0;
    std::size_t pair_index = 0;
    double value = 0.0;
};

struct SweepResult {
    ProtocolResult best;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    // Row-major over (pair, x, phi). For independent grids, value is the best
    // over the second party's parameters.
    std::vector<SweepPoint> table;
};

// All six unordered pairs of four parties in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> all_party_pairs();

// Evaluates unassisted_protocol_value over x in [0, pi/2] (endpoints
// included) and phi in [0, 2 pi) (periodic) for each pair. The best point is
// the first maximum in table order, so results do not depend on `threads`.
SweepResult sweep_unassisted(const PureState& state, const SweepGrid& grid,
                             std::vector<std::pair<std::size_t, std::size_t>> pairs = {}, unsigned threads = 1);

// CSV with header `x,phi,pair,value`; x and phi printed with 12 significant digits.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep, const std::vector<std::string>& labels);

enum class CapacityKind { Assisted, Unassisted };

std::string to_string(CapacityKind kind);
CapacityKind parse_capacity_kind(std::string_view text);

struct CapacityBracket {
    double lower = 0.0;
    double upper = 0.0;
    CapacityKind kind = CapacityKind::Unassisted;
    // Protocol attaining `lower`.
    ProtocolResult achieving_protocol;
};

inline constexpr double kBracketSlack = 1e-9;

// Unassisted: lower from the unassisted sweep over all pairs, upper
// min(p_maxmin_s, p_maxmin_d). Assisted: lower also includes Bell protocols on
// every pair, upper p_maxmin_s. A lower bound above the upper by more than
// kBracketSlack throws std::logic_error.
CapacityBracket capacity_bracket(const PureState& state, CapacityKind kind, const SweepGrid& grid = {},
                                 unsigned threads = 1);
// Same, reusing an unassisted sweep of `state` (which may cover fewer pairs).
CapacityBracket capacity_bracket(const PureState& state, CapacityKind kind, const SweepResult& sweep);

} // namespace mace
