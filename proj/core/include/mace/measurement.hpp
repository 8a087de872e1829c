#pragma once

#include <array>
#include <numbers>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "mace/state.hpp"

namespace mace {

// Qubit basis {cos x|0> + e^{i phi} sin x|1>, e^{-i phi} sin x|0> - cos x|1>}
// with x in [0, pi/2] and phi in [0, 2 pi).
struct ProjectiveQubitBasis {
    double x = 0.0;
    double phi = 0.0;

    // Throws std::invalid_argument outside the parameter ranges.
    void validate() const;
    [[nodiscard]] std::array<Eigen::Vector2cd, 2> vectors() const;

    static ProjectiveQubitBasis computational() { return {0.0, 0.0}; }
    static ProjectiveQubitBasis hadamard() { return {std::numbers::pi / 4, 0.0}; }
};

// Branches below this probability carry no post-state.
inline constexpr double kZeroBranchProbability = 1e-14;

// One measurement outcome. `state` is empty (the null-state marker) for
// zero-probability outcomes.
struct Branch {
    double probability = 0.0;
    std::optional<PureState> state;
};

// Contracts <v| onto the listed parties (v indexed in the listed order, first
// party most significant) and returns the unnormalized remainder's squared
// norm together with the renormalized post-state on the other parties.
Branch project_parties(const PureState& state, std::span<const std::size_t> parties, const Eigen::VectorXcd& v);

// Born-rule measurement of one qubit party. Post-states live on the remaining
// n-1 parties (labels kept).
std::vector<Branch> measure_party(const PureState& state, std::size_t party, const ProjectiveQubitBasis& basis);

// Bell vectors in the order Phi+, Phi-, Psi+, Psi- as columns.
Eigen::Matrix4cd bell_basis();

// Rank-1 projective measurement on a qubit pair with the basis given by the
// columns of `basis` (must be unitary within 1e-10).
std::vector<Branch> joint_measure(const PureState& state, std::size_t party_i, std::size_t party_j,
                                  const Eigen::Matrix4cd& basis);

std::vector<Branch> joint_bell_measure(const PureState& state, std::size_t party_i, std::size_t party_j);

} // namespace mace
