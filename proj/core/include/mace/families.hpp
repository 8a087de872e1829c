#pragma once

#include <filesystem>
#include <numbers>
#include <string>
#include <variant>

#include "mace/state.hpp"

namespace mace {

// Four-qubit and two-qubit state families. Every constructor yields a
// normalized state on parties A, B, C, D (or A, B) under the flat-index
// convention of PureState.
namespace family {

// alpha|0000> + beta|1111>, reordered so |alpha| >= |beta|.
struct Ghz {
    Complex alpha{1.0 / std::numbers::sqrt2};
    Complex beta{1.0 / std::numbers::sqrt2};
};

// (|0000> + |0011> + |1100> - |1111>) / 2.
struct Cluster {};

// The chi state, equal to the cluster state on every measure and capacity.
struct Chi {};

// a|0001> + b|0010> + c|0100> + d|1000>; parameters are sorted so that
// |a| >= |b| >= |c| >= |d| (a sits on party D, d on party A).
struct W {
    Complex a{0.5}, b{0.5}, c{0.5}, d{0.5};
};

// Uniform superposition of the six weight-2 basis states.
struct W2 {};

enum class Pairing { AB_CD, AC_BD, AD_BC };

// Product of two singlets on the given pairing.
struct TwoSinglets {
    Pairing pairing = Pairing::AB_CD;
};

// (|0101> + |1010> + |0011> + |1100> - mu|1001> - mu|0110>) / sqrt(4 + 2 mu^2).
// mu = 2 is the four-site RVB state; mu must lie in [0, 1e6].
struct RvbFerro {
    double mu = 2.0;
};

// mu -> infinity limit of RvbFerro: -(|1001> + |0110>) / sqrt(2).
struct RvbFerroLimit {};

// Two-party singlet (|01> - |10>) / sqrt(2).
struct Singlet {};

// State read from a raw state file.
struct Raw {
    std::filesystem::path path;
};

} // namespace family

using FamilySpec = std::variant<family::Ghz, family::Cluster, family::Chi, family::W, family::W2,
                                family::TwoSinglets, family::RvbFerro, family::RvbFerroLimit,
                                family::Singlet, family::Raw>;

inline constexpr double kRvbMuMax = 1e6;

// Throws SpecError on non-normalizable or out-of-range parameters, IoError for
// Raw file problems.
PureState make_state(const FamilySpec& spec);

std::string family_name(const FamilySpec& spec);

} // namespace mace
