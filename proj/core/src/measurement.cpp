#include "mace/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mace/errors.hpp"

namespace mace {

void ProjectiveQubitBasis::validate() const {
    constexpr double slack = 1e-12;
    if (!(x >= -slack && x <= std::numbers::pi / 2 + slack))
        throw std::invalid_argument("basis parameter x must lie in [0, pi/2]");
    if (!(phi >= -slack && phi < 2 * std::numbers::pi + slack))
        throw std::invalid_argument("basis parameter phi must lie in [0, 2 pi)");
}

std::array<Eigen::Vector2cd, 2> ProjectiveQubitBasis::vectors() const {
    const double c = std::cos(x), s = std::sin(x);
    const Complex phase = std::polar(1.0, phi);
    Eigen::Vector2cd first(c, phase * s);
    Eigen::Vector2cd second(std::conj(phase) * s, -c);
    return {first, second};
}

Branch project_parties(const PureState& state, std::span<const std::size_t> parties, const Eigen::VectorXcd& v) {
    const std::size_t n = state.num_parties();
    if (parties.empty() || parties.size() >= n)
        throw std::invalid_argument("projection must act on a nonempty proper subset of parties");
    std::vector<bool> measured(n, false);
    Eigen::Index dim = 1;
    for (auto p : parties) {
        if (p >= n) throw std::invalid_argument("party index out of range");
        if (measured[p]) throw std::invalid_argument("party listed twice in projection");
        measured[p] = true;
        dim *= state.local_dim(p);
    }
    if (v.size() != dim) throw std::invalid_argument("projection vector has the wrong dimension");

    std::vector<std::size_t> rest;
    std::vector<int> rest_dims;
    std::vector<std::string> rest_labels;
    for (std::size_t k = 0; k < n; ++k) {
        if (measured[k]) continue;
        rest.push_back(k);
        rest_dims.push_back(state.local_dim(k));
        rest_labels.push_back(state.label(k));
    }
    std::size_t rest_size = 1;
    for (int d : rest_dims) rest_size *= static_cast<std::size_t>(d);

    std::vector<Complex> out(rest_size, Complex{0.0, 0.0});
    const auto amps = state.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (amps[flat] == Complex{0.0, 0.0}) continue;
        const auto idx = state.local_indices(flat);
        Eigen::Index m = 0;
        for (auto p : parties) m = m * state.local_dim(p) + idx[p];
        std::size_t r = 0;
        for (auto k : rest) r = r * static_cast<std::size_t>(state.local_dim(k)) + static_cast<std::size_t>(idx[k]);
        out[r] += std::conj(v(m)) * amps[flat];
    }

    Branch branch;
    for (const auto& a : out) branch.probability += std::norm(a);
    if (branch.probability >= kZeroBranchProbability)
        branch.state.emplace(std::move(out), std::move(rest_dims), std::move(rest_labels));
    return branch;
}

std::vector<Branch> measure_party(const PureState& state, std::size_t party, const ProjectiveQubitBasis& basis) {
    if (party >= state.num_parties()) throw std::invalid_argument("party index out of range");
    if (state.local_dim(party) != 2) throw ShapeError("measured party must be a qubit");
    basis.validate();
    std::vector<Branch> branches;
    const std::array<std::size_t, 1> parties{party};
    for (const auto& v : basis.vectors()) branches.push_back(project_parties(state, parties, v));
    return branches;
}

Eigen::Matrix4cd bell_basis() {
    const double h = 1.0 / std::numbers::sqrt2;
    Eigen::Matrix4cd b;
    // columns: Phi+, Phi-, Psi+, Psi- over |00>, |01>, |10>, |11>
    b << h, h, 0, 0,
         0, 0, h, h,
         0, 0, h, -h,
         h, -h, 0, 0;
    return b;
}

std::vector<Branch> joint_measure(const PureState& state, std::size_t party_i, std::size_t party_j,
                                  const Eigen::Matrix4cd& basis) {
    if (party_i == party_j) throw std::invalid_argument("joint measurement needs two distinct parties");
    if (party_i >= state.num_parties() || party_j >= state.num_parties())
        throw std::invalid_argument("party index out of range");
    if (state.local_dim(party_i) != 2 || state.local_dim(party_j) != 2)
        throw ShapeError("joint measurement parties must be qubits");
    if ((basis.adjoint() * basis - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("joint measurement basis is not orthonormal");

    const std::array<std::size_t, 2> parties{party_i, party_j};
    std::vector<Branch> branches;
    for (int col = 0; col < 4; ++col) {
        Eigen::VectorXcd v = basis.col(col);
        branches.push_back(project_parties(state, parties, v));
    }
    return branches;
}

std::vector<Branch> joint_bell_measure(const PureState& state, std::size_t party_i, std::size_t party_j) {
    return joint_measure(state, party_i, party_j, bell_basis());
}

} // namespace mace
