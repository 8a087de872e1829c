#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "mace/state.hpp"

namespace mace {

// Generalized geometric measure: 1 minus the largest squared Schmidt
// coefficient over every canonical bipartition. Zero for any state that is a
// product across some split. Requires at least two parties.
double ggm(const PureState& state);

// Largest squared overlap with a state that is product across some
// bipartition, i.e. 1 - ggm(state).
double max_biseparable_overlap2(const PureState& state);

struct GmOptions {
    int restarts = 50;
    double tol = 1e-10;
    int max_iterations = 10000;
    std::uint64_t seed = 20100601;
    // 0 = hardware concurrency.
    unsigned threads = 1;
};

// Geometric measure result. `iterations` counts alternating sweeps summed
// over all restarts.
struct GmResult {
    double value = 0.0;
    double best_overlap = 0.0;
    std::vector<Eigen::VectorXcd> product_vectors;
    int restarts_used = 0;
    long iterations = 0;
    bool converged = false;
};

// One run of the alternating rank-1 fit from a fixed starting product state.
struct RankOneFit {
    double overlap = 0.0;
    std::vector<Eigen::VectorXcd> vectors;
    // Overlap after every single-party update, starting with the initial overlap.
    std::vector<double> trace;
    int sweeps = 0;
    bool converged = false;
};

// Alternating maximization of |<v_0 ... v_{n-1}|psi>|: each party's vector
// is replaced by the normalized contraction of the state against the other
// parties' vectors until a full sweep gains less than `tol`. Throws
// std::logic_error if the overlap ever decreases by more than 1e-12.
RankOneFit fit_rank_one(const PureState& state, std::vector<Eigen::VectorXcd> start, double tol,
                        int max_iterations);

// |<v_0 (x) ... (x) v_{n-1} | psi>| for unit local vectors.
double product_overlap(const PureState& state, const std::vector<Eigen::VectorXcd>& vectors);

// Geometric measure 1 - max |<product|psi>|^2 by multi-restart alternating
// fits from Haar-random local vectors. Throws std::invalid_argument when
// restarts < 1 or tol <= 0.
GmResult gm(const PureState& state, const GmOptions& options = {});

// Von Neumann entropy in bits, with 0 log 0 = 0.
double von_neumann_entropy(const SchmidtSpectrum& spectrum);

struct BipartiteCapacities {
    double classical = 0.0;    // bits, log2 d + S
    double quantum = 0.0;      // qubits, S
    double entanglement = 0.0; // ebits, S
};

// Requires exactly two parties of equal dimension (ShapeError otherwise).
BipartiteCapacities bipartite_capacities(const PureState& state);

} // namespace mace
