#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mace/diagnostics.hpp"
#include "mace/measures.hpp"
#include "parallel.hpp"

namespace mace {

namespace {

// Local index of every party for every flat index, row-major [flat][party].
std::vector<int> index_table(const PureState& state) {
    const std::size_t n = state.num_parties();
    std::vector<int> table(state.size() * n);
    for (std::size_t flat = 0; flat < state.size(); ++flat) {
        const auto idx = state.local_indices(flat);
        std::copy(idx.begin(), idx.end(), table.begin() + static_cast<std::ptrdiff_t>(flat * n));
    }
    return table;
}

// c[i_k] = sum over the other indices of conj(v_j[i_j]) psi[i].
Eigen::VectorXcd contract_except(const PureState& state, const std::vector<int>& table,
                                 const std::vector<Eigen::VectorXcd>& vectors, std::size_t keep) {
    const std::size_t n = state.num_parties();
    const auto amps = state.amplitudes();
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(state.local_dim(keep));
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (amps[flat] == Complex{0.0, 0.0}) continue;
        const int* idx = table.data() + flat * n;
        Complex w = amps[flat];
        for (std::size_t j = 0; j < n; ++j)
            if (j != keep) w *= std::conj(vectors[j](idx[j]));
        c(idx[keep]) += w;
    }
    return c;
}

Eigen::VectorXcd haar_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    do {
        for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    } while (v.norm() == 0.0);
    return v.normalized();
}

RankOneFit fit_with_table(const PureState& state, const std::vector<int>& table,
                          std::vector<Eigen::VectorXcd> vectors, double tol, int max_iterations) {
    const std::size_t n = state.num_parties();
    RankOneFit fit;
    double overlap = product_overlap(state, vectors);
    fit.trace.push_back(overlap);

    for (int sweep = 0; sweep < max_iterations; ++sweep) {
        const double sweep_start = overlap;
        for (std::size_t k = 0; k < n; ++k) {
            Eigen::VectorXcd c = contract_except(state, table, vectors, k);
            const double norm = c.norm();
            if (norm > 0.0) vectors[k] = c / norm;
            if (norm < overlap - 1e-12) {
                std::ostringstream msg;
                msg << "rank-1 fit overlap decreased from " << overlap << " to " << norm;
                throw std::logic_error(msg.str());
            }
            overlap = std::max(overlap, norm);
            fit.trace.push_back(norm);
        }
        fit.sweeps = sweep + 1;
        if (overlap - sweep_start < tol) {
            fit.converged = true;
            break;
        }
    }
    fit.overlap = overlap;
    fit.vectors = std::move(vectors);
    return fit;
}

} // namespace

double product_overlap(const PureState& state, const std::vector<Eigen::VectorXcd>& vectors) {
    const std::size_t n = state.num_parties();
    if (vectors.size() != n) throw std::invalid_argument("need one local vector per party");
    for (std::size_t k = 0; k < n; ++k)
        if (vectors[k].size() != state.local_dim(k)) throw std::invalid_argument("local vector has wrong dimension");
    const auto amps = state.amplitudes();
    Complex acc{0.0, 0.0};
    std::vector<int> idx(n, 0);
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        Complex w = amps[flat];
        for (std::size_t j = 0; j < n; ++j) w *= std::conj(vectors[j](idx[j]));
        acc += w;
        for (std::size_t j = n; j-- > 0;) {
            if (++idx[j] < state.local_dim(j)) break;
            idx[j] = 0;
        }
    }
    return std::abs(acc);
}

RankOneFit fit_rank_one(const PureState& state, std::vector<Eigen::VectorXcd> start, double tol,
                        int max_iterations) {
    if (start.size() != state.num_parties()) throw std::invalid_argument("need one start vector per party");
    for (auto& v : start) {
        if (v.norm() == 0.0) throw std::invalid_argument("start vectors must be nonzero");
        v.normalize();
    }
    return fit_with_table(state, index_table(state), std::move(start), tol, max_iterations);
}

GmResult gm(const PureState& state, const GmOptions& options) {
    if (options.restarts < 1) throw std::invalid_argument("gm needs at least one restart");
    if (!(options.tol > 0.0)) throw std::invalid_argument("gm tolerance must be positive");
    if (options.max_iterations < 1) throw std::invalid_argument("gm iteration cap must be positive");
    if (state.size() > 256) {
        std::ostringstream msg;
        msg << "geometric measure on a " << state.size() << "-dimensional state may be slow";
        warn(msg.str());
    }

    const auto table = index_table(state);
    const auto restarts = static_cast<std::size_t>(options.restarts);
    std::vector<RankOneFit> fits(restarts);
    detail::parallel_for(restarts, options.threads, [&](std::size_t r) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        std::vector<Eigen::VectorXcd> start;
        for (std::size_t k = 0; k < state.num_parties(); ++k) start.push_back(haar_vector(state.local_dim(k), rng));
        fits[r] = fit_with_table(state, table, std::move(start), options.tol, options.max_iterations);
        fits[r].trace.clear();
        fits[r].trace.shrink_to_fit();
    });

    GmResult result;
    result.restarts_used = options.restarts;
    std::size_t best = 0;
    for (std::size_t r = 0; r < restarts; ++r) {
        result.iterations += fits[r].sweeps;
        if (fits[r].overlap > fits[best].overlap) best = r;
    }
    result.best_overlap = std::min(1.0, fits[best].overlap);
    result.value = std::max(0.0, 1.0 - result.best_overlap * result.best_overlap);
    result.product_vectors = std::move(fits[best].vectors);
    result.converged = fits[best].converged;
    return result;
}

} // namespace mace
