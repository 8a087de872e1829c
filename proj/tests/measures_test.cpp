#include "mace/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "mace/errors.hpp"
#include "mace/families.hpp"
#include "mace/measurement.hpp"
#include "oracles/oracles.hpp"

namespace mace {
namespace {

constexpr double kEntropy3141 = 0.811278124459132863909695792039; // mpmath, 30 digits

TEST(GgmTest, GeneralizedGhzEqualsBetaSquared) {
    for (double b2 : {0.0, 0.05, 0.2, 0.3, 0.45, 0.5}) {
        const auto s = make_state(family::Ghz{std::sqrt(1 - b2), std::sqrt(b2)});
        EXPECT_NEAR(ggm(s), b2, 1e-12) << b2;
    }
}

TEST(GgmTest, NamedStates) {
    EXPECT_NEAR(ggm(make_state(family::W{})), 0.25, 1e-12);
    EXPECT_NEAR(ggm(make_state(family::W2{})), 1.0 / 3, 1e-12);
    EXPECT_NEAR(ggm(make_state(family::Cluster{})), 0.5, 1e-12);
    EXPECT_NEAR(ggm(make_state(family::Chi{})), 0.5, 1e-12);
    EXPECT_NEAR(ggm(make_state(family::RvbFerro{2.0})), 0.25, 1e-12);
    for (auto p : {family::Pairing::AB_CD, family::Pairing::AC_BD, family::Pairing::AD_BC})
        EXPECT_NEAR(ggm(make_state(family::TwoSinglets{p})), 0.0, 1e-12);
}

TEST(GgmTest, GeneralizedWEqualsSmallestWeight) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::array<double, 4> c{u(rng), u(rng), u(rng), u(rng)};
        const double n2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
        const double dmin = *std::min_element(c.begin(), c.end());
        EXPECT_NEAR(ggm(make_state(family::W{c[0], c[1], c[2], c[3]})), dmin * dmin / n2, 1e-12);
    }
}

// From the 2:2 spectra {(1+mu)^2, (1-mu)^2, 1, 1}, {same}, {mu^2, mu^2, 4, 0}
// over 4 + 2 mu^2 and the uniform single-party marginals.
double rvb_ggm_closed_form(double mu) {
    const double n = 4 + 2 * mu * mu;
    return 1 - std::max({0.5, (1 + mu) * (1 + mu) / n, 4 / n, mu * mu / n});
}

TEST(GgmTest, RvbFerroFamilyClosedForm) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> mus(0.0, 100.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double mu = mus(rng);
        EXPECT_NEAR(ggm(make_state(family::RvbFerro{mu})), rvb_ggm_closed_form(mu), 1e-12) << mu;
        // For mu >= 1 the largest squared coefficient is (mu+1)^2 / (4 + 2 mu^2).
        if (mu >= 1) EXPECT_NEAR(max_biseparable_overlap2(make_state(family::RvbFerro{mu})),
                                 (mu + 1) * (mu + 1) / (4 + 2 * mu * mu), 1e-12);
    }
    EXPECT_NEAR(ggm(make_state(family::RvbFerro{0.0})), 0.0, 1e-12);
}

TEST(GgmTest, ProductAcrossAnySplitIsZero) {
    std::mt19937_64 rng(29);
    const auto a = oracle::random_state({2, 2}, rng);
    const auto b = oracle::random_state({2, 3}, rng);
    EXPECT_NEAR(ggm(tensor_product(a, b)), 0.0, 1e-12);
}

TEST(GgmTest, BoundedByLocalDimension) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = oracle::random_state({2, 3, 3}, rng);
        const double g = ggm(s);
        EXPECT_GE(g, 0.0);
        EXPECT_LE(g, 1.0 - 1.0 / 2 + 1e-12);
    }
    EXPECT_THROW(ggm(PureState({1.0, 1.0}, {2})), ShapeError);
}

TEST(GgmTest, InvariantUnderPartyPermutation) {
    std::mt19937_64 rng(37);
    std::vector<std::size_t> order{0, 1, 2, 3};
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = oracle::random_state({2, 2, 2, 2}, rng);
        const double g = ggm(s);
        std::shuffle(order.begin(), order.end(), rng);
        EXPECT_NEAR(ggm(permute_parties(s, order)), g, 1e-12);
    }
}

TEST(GgmTest, InvariantUnderLocalUnitaries) {
    std::mt19937_64 rng(41);
    for (int st = 0; st < 5; ++st) {
        const auto s = oracle::random_state({2, 2, 2, 2}, rng);
        const double g = ggm(s);
        for (int trial = 0; trial < 50; ++trial) {
            auto moved = s;
            for (std::size_t k = 0; k < 4; ++k) moved = apply_local_unitary(moved, k, oracle::random_unitary(2, rng));
            EXPECT_NEAR(ggm(moved), g, 1e-8);
        }
    }
}

TEST(GgmTest, ThreeQubitBruteForceOracle) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = oracle::random_state({2, 2, 2}, rng);
        EXPECT_NEAR(ggm(s), 1.0 - oracle::brute_force_biseparable_overlap2_3q(s), 1e-6);
    }
}

TEST(GgmTest, MonotoneUnderProjectiveMeasurementWithOutcomeRecorded) {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> xs(0.0, std::numbers::pi / 2), ps(0.0, 2 * std::numbers::pi);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = oracle::random_state({2, 2, 2, 2}, rng);
        const std::size_t party = static_cast<std::size_t>(trial % 4);
        const ProjectiveQubitBasis basis{xs(rng), ps(rng)};
        const auto vecs = basis.vectors();
        const auto branches = measure_party(s, party, basis);
        double average = 0.0;
        for (std::size_t k = 0; k < branches.size(); ++k) {
            if (!branches[k].state) continue;
            const auto extended = insert_party(*branches[k].state, party, vecs[k], s.label(party));
            average += branches[k].probability * ggm(extended);
        }
        EXPECT_LE(average, ggm(s) + 1e-9);
    }
}

TEST(GgmTest, MonotoneOnAverageUnderWeakLocalMeasurement) {
    // Two-outcome Kraus pair M0 = U diag(cos t, sin t), M1 = V diag(sin t, cos t)
    // on one qubit, party kept.
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = oracle::random_state({2, 2, 2, 2}, rng);
        const std::size_t party = static_cast<std::size_t>(trial % 4);
        const double t = angle(rng);
        const Eigen::MatrixXcd w = oracle::random_unitary(2, rng);
        Eigen::Matrix2cd m0 = Eigen::Matrix2cd::Zero(), m1 = Eigen::Matrix2cd::Zero();
        m0(0, 0) = std::cos(t);
        m0(1, 1) = std::sin(t);
        m1(0, 0) = std::sin(t);
        m1(1, 1) = std::cos(t);
        m0 = oracle::random_unitary(2, rng) * m0 * w.adjoint();
        m1 = oracle::random_unitary(2, rng) * m1 * w.adjoint();

        double average = 0.0, total = 0.0;
        for (const Eigen::Matrix2cd& m : {m0, m1}) {
            std::vector<Complex> out(s.size(), 0.0);
            const std::size_t stride = s.stride(party);
            for (std::size_t flat = 0; flat < s.size(); ++flat) {
                const int bit = static_cast<int>((flat / stride) % 2);
                const std::size_t base = flat - static_cast<std::size_t>(bit) * stride;
                for (int r = 0; r < 2; ++r) out[base + static_cast<std::size_t>(r) * stride] += m(r, bit) * s.amplitude(flat);
            }
            double p = 0.0;
            for (const auto& a : out) p += std::norm(a);
            total += p;
            if (p < 1e-14) continue;
            average += p * ggm(PureState(out, s.local_dims()));
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
        EXPECT_LE(average, ggm(s) + 1e-9);
    }
}

TEST(EntropyTest, Examples) {
    EXPECT_NEAR(von_neumann_entropy({{0.5, 0.5}}), 1.0, 1e-15);
    EXPECT_EQ(von_neumann_entropy({{1.0, 0.0}}), 0.0);
    EXPECT_NEAR(von_neumann_entropy({{0.75, 0.25}}), kEntropy3141, 1e-15);
    EXPECT_NEAR(von_neumann_entropy({{0.25, 0.25, 0.25, 0.25}}), 2.0, 1e-15);
}

TEST(BipartiteCapacitiesTest, Examples) {
    const auto singlet = bipartite_capacities(make_state(family::Singlet{}));
    EXPECT_NEAR(singlet.classical, 2.0, 1e-12);
    EXPECT_NEAR(singlet.quantum, 1.0, 1e-12);
    EXPECT_NEAR(singlet.entanglement, 1.0, 1e-12);

    const auto product = bipartite_capacities(PureState({1.0, 0.0, 0.0, 0.0}, {2, 2}));
    EXPECT_NEAR(product.classical, 1.0, 1e-12);
    EXPECT_NEAR(product.quantum, 0.0, 1e-12);

    const auto partial = bipartite_capacities(PureState({std::sqrt(3.0) / 2, 0.0, 0.0, 0.5}, {2, 2}));
    EXPECT_NEAR(partial.classical, 1 + kEntropy3141, 1e-12);
    EXPECT_NEAR(partial.quantum, kEntropy3141, 1e-12);
    EXPECT_NEAR(partial.entanglement, kEntropy3141, 1e-12);
}

TEST(BipartiteCapacitiesTest, Errors) {
    EXPECT_THROW(bipartite_capacities(make_state(family::W2{})), ShapeError);
    EXPECT_THROW(bipartite_capacities(PureState(std::vector<Complex>(6, 1.0), {2, 3})), ShapeError);
}

} // namespace
} // namespace mace
