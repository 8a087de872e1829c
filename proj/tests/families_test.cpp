#include "mace/families.hpp"

#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "mace/errors.hpp"
#include "mace/family_spec.hpp"
#include "oracles/oracles.hpp"

namespace mace {
namespace {

std::set<std::size_t> support(const PureState& s) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (std::abs(s.amplitude(i)) > 1e-15) out.insert(i);
    return out;
}

TEST(FamiliesTest, W2AmplitudesAtWeightTwoIndices) {
    const auto s = make_state(family::W2{});
    EXPECT_EQ(support(s), (std::set<std::size_t>{3, 6, 12, 9, 5, 10}));
    for (auto i : support(s)) EXPECT_NEAR(s.amplitude(i).real(), 1 / std::sqrt(6.0), 1e-15);
}

TEST(FamiliesTest, GhzDegenerateIsProduct) {
    const auto s = make_state(family::Ghz{1.0, 0.0});
    EXPECT_EQ(support(s), (std::set<std::size_t>{0}));
}

TEST(FamiliesTest, GhzNormalizesAndReorders) {
    const auto s = make_state(family::Ghz{1.0, 3.0});
    EXPECT_NEAR(s.amplitude(0).real(), 3 / std::sqrt(10.0), 1e-15);
    EXPECT_NEAR(s.amplitude(15).real(), 1 / std::sqrt(10.0), 1e-15);
    EXPECT_THROW(make_state(family::Ghz{0.0, 0.0}), SpecError);
}

TEST(FamiliesTest, WSortsParametersByMagnitude) {
    const auto s = make_state(family::W{0.1, 0.7, 0.3, 0.5});
    const double n = std::sqrt(0.01 + 0.49 + 0.09 + 0.25);
    EXPECT_NEAR(s.amplitude(0b0001).real(), 0.7 / n, 1e-15); // a on D
    EXPECT_NEAR(s.amplitude(0b0010).real(), 0.5 / n, 1e-15);
    EXPECT_NEAR(s.amplitude(0b0100).real(), 0.3 / n, 1e-15);
    EXPECT_NEAR(s.amplitude(0b1000).real(), 0.1 / n, 1e-15); // d on A
    EXPECT_THROW(make_state(family::W{0, 0, 0, 0}), SpecError);
}

TEST(FamiliesTest, ClusterAndChiAmplitudes) {
    const auto c = make_state(family::Cluster{});
    EXPECT_EQ(support(c), (std::set<std::size_t>{0, 3, 12, 15}));
    EXPECT_NEAR(c.amplitude(15).real(), -0.5, 1e-15);
    const auto chi = make_state(family::Chi{});
    EXPECT_EQ(support(chi).size(), 8u);
    EXPECT_NEAR(chi.amplitude(0b0011).real(), -1 / (2 * std::sqrt(2.0)), 1e-15);
    EXPECT_NEAR(chi.amplitude(0b0101).real(), -1 / (2 * std::sqrt(2.0)), 1e-15);
}

TEST(FamiliesTest, TwoSingletsPairings) {
    const double h = 0.5;
    const auto ab = make_state(family::TwoSinglets{family::Pairing::AB_CD});
    // psi-_AB psi-_CD = (|01>-|10>)(|01>-|10>)/2
    EXPECT_NEAR(ab.amplitude(0b0101).real(), h, 1e-15);
    EXPECT_NEAR(ab.amplitude(0b0110).real(), -h, 1e-15);
    EXPECT_NEAR(ab.amplitude(0b1010).real(), h, 1e-15);
    const auto ac = make_state(family::TwoSinglets{family::Pairing::AC_BD});
    // A=0,C=1,B=0,D=1 -> |0011>
    EXPECT_NEAR(ac.amplitude(0b0011).real(), h, 1e-15);
    const auto ad = make_state(family::TwoSinglets{family::Pairing::AD_BC});
    // A=0,D=1,B=0,C=1 -> |0011>; A=0,D=1,B=1,C=0 -> |0101> with sign -1
    EXPECT_NEAR(ad.amplitude(0b0011).real(), h, 1e-15);
    EXPECT_NEAR(ad.amplitude(0b0101).real(), -h, 1e-15);
}

TEST(FamiliesTest, RvbAtMuTwoEqualsSingletCoverings) {
    const auto rf = make_state(family::RvbFerro{2.0});
    const PureState coverings(oracle::rvb_from_singlet_coverings(), {2, 2, 2, 2});
    EXPECT_TRUE(equal_up_to_phase(rf, coverings, 1e-12));
}

TEST(FamiliesTest, RvbFerroMatchesClosedFormAcrossMu) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> mu_dist(0.0, 100.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double mu = mu_dist(rng);
        const auto s = make_state(family::RvbFerro{mu});
        const double n = std::sqrt(4 + 2 * mu * mu);
        for (std::size_t i = 0; i < 16; ++i) {
            double expected = 0.0;
            if (i == 0b0101 || i == 0b1010 || i == 0b0011 || i == 0b1100) expected = 1 / n;
            if (i == 0b1001 || i == 0b0110) expected = -mu / n;
            EXPECT_NEAR(s.amplitude(i).real(), expected, 1e-15) << "mu=" << mu << " index " << i;
            EXPECT_EQ(s.amplitude(i).imag(), 0.0);
        }
    }
}

TEST(FamiliesTest, RvbFerroDomain) {
    EXPECT_THROW(make_state(family::RvbFerro{-0.5}), SpecError);
    EXPECT_THROW(make_state(family::RvbFerro{2e6}), SpecError);
    EXPECT_NO_THROW(make_state(family::RvbFerro{1e6}));
    const auto limit = make_state(family::RvbFerroLimit{});
    const auto big = make_state(family::RvbFerro{1e6});
    EXPECT_GT(std::abs(inner_product(limit, big)), 1 - 1e-10);
}

TEST(FamiliesTest, RawFileErrors) {
    EXPECT_THROW(make_state(family::Raw{"/nonexistent/state.json"}), IoError);
}

TEST(FamilySpecTest, ParsesNamedFamilies) {
    EXPECT_TRUE(std::holds_alternative<family::W2>(parse_family_spec("w2")));
    EXPECT_TRUE(std::holds_alternative<family::Cluster>(parse_family_spec("cluster")));
    EXPECT_TRUE(std::holds_alternative<family::Chi>(parse_family_spec("chi")));
    EXPECT_TRUE(std::holds_alternative<family::Singlet>(parse_family_spec("singlet")));

    const auto ghz = std::get<family::Ghz>(parse_family_spec("ghz:beta2=0.3"));
    EXPECT_NEAR(std::norm(ghz.beta), 0.3, 1e-15);
    EXPECT_NEAR(std::norm(ghz.alpha), 0.7, 1e-15);

    const auto rvb = std::get<family::RvbFerro>(parse_family_spec("rvb:mu=2.5"));
    EXPECT_EQ(rvb.mu, 2.5);
    EXPECT_EQ(std::get<family::RvbFerro>(parse_family_spec("rvb")).mu, 2.0);
    EXPECT_TRUE(std::holds_alternative<family::RvbFerroLimit>(parse_family_spec("rvb:mu=inf")));

    const auto ss = std::get<family::TwoSinglets>(parse_family_spec("ss:pairing=AC-BD"));
    EXPECT_EQ(ss.pairing, family::Pairing::AC_BD);

    const auto w = std::get<family::W>(parse_family_spec("w:a=0.7,b=0.5,c=0.4,d=0.3"));
    EXPECT_EQ(w.c, Complex(0.4));

    const auto raw = std::get<family::Raw>(parse_family_spec("file:some/path.json"));
    EXPECT_EQ(raw.path, std::filesystem::path("some/path.json"));
}

TEST(FamilySpecTest, RejectsMalformedSpecs) {
    for (const char* bad : {"nope", "ghz:beta2=abc", "ghz:beta2=1.5", "ghz:gamma=1", "w2:x=1", "rvb:mu=-1",
                            "rvb:mu=1e7", "ss:pairing=AB-AC", "ghz:beta2", "ghz:beta2=0.1,beta2=0.2", "file:"}) {
        EXPECT_THROW(parse_family_spec(bad), SpecError) << bad;
    }
}

} // namespace
} // namespace mace
