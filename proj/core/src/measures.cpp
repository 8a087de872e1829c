#include "mace/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mace/errors.hpp"

namespace mace {

double max_biseparable_overlap2(const PureState& state) {
    if (state.num_parties() < 2) throw ShapeError("ggm needs at least two parties");
    double best = 0.0;
    for (const auto& split : all_bipartitions(state.num_parties()))
        best = std::max(best, schmidt_spectrum(state, split).largest());
    return best;
}

double ggm(const PureState& state) {
    // Rounding in the largest coefficient of a biseparable state leaves ~1e-16.
    const double value = 1.0 - max_biseparable_overlap2(state);
    return value < kSchmidtClip ? 0.0 : value;
}

double von_neumann_entropy(const SchmidtSpectrum& spectrum) {
    double s = 0.0;
    for (double p : spectrum.squared_coeffs)
        if (p > 0.0) s -= p * std::log2(p);
    return std::max(0.0, s);
}

BipartiteCapacities bipartite_capacities(const PureState& state) {
    if (state.num_parties() != 2) throw ShapeError("bipartite capacities need exactly two parties");
    if (state.local_dim(0) != state.local_dim(1)) throw ShapeError("bipartite capacities need equal local dimensions");
    const double s = von_neumann_entropy(schmidt_spectrum(state, Bipartition({0}, 2)));
    return {std::log2(static_cast<double>(state.local_dim(0))) + s, s, s};
}

} // namespace mace
