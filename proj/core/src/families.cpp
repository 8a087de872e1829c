#include "mace/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mace/errors.hpp"
#include "mace/state_io.hpp"

namespace mace {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::size_t bits(const char* pattern) {
    std::size_t v = 0;
    for (const char* p = pattern; *p; ++p) v = (v << 1) | static_cast<std::size_t>(*p - '0');
    return v;
}

PureState qubits(std::size_t n, std::initializer_list<std::pair<const char*, Complex>> terms) {
    std::vector<Complex> amps(std::size_t{1} << n, Complex{0.0, 0.0});
    for (const auto& [pattern, coeff] : terms) amps[bits(pattern)] += coeff;
    try {
        return PureState(std::move(amps), std::vector<int>(n, 2));
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }
}

PureState make(const family::Ghz& p) {
    Complex alpha = p.alpha, beta = p.beta;
    if (std::abs(alpha) < std::abs(beta)) std::swap(alpha, beta);
    if (std::norm(alpha) + std::norm(beta) == 0.0) throw SpecError("GHZ parameters are both zero");
    return qubits(4, {{"0000", alpha}, {"1111", beta}});
}

PureState make(const family::Cluster&) {
    return qubits(4, {{"0000", 1.0}, {"0011", 1.0}, {"1100", 1.0}, {"1111", -1.0}});
}

PureState make(const family::Chi&) {
    // |00>(|00>-|11>) + |11>(|00>+|11>) - |01>(|01>-|10>) + |10>(|01>+|10>)
    return qubits(4, {{"0000", 1.0},
                      {"0011", -1.0},
                      {"1100", 1.0},
                      {"1111", 1.0},
                      {"0101", -1.0},
                      {"0110", 1.0},
                      {"1001", 1.0},
                      {"1010", 1.0}});
}

PureState make(const family::W& p) {
    std::array<Complex, 4> c{p.a, p.b, p.c, p.d};
    std::stable_sort(c.begin(), c.end(), [](Complex x, Complex y) { return std::abs(x) > std::abs(y); });
    if (std::abs(c[0]) == 0.0) throw SpecError("W parameters are all zero");
    return qubits(4, {{"0001", c[0]}, {"0010", c[1]}, {"0100", c[2]}, {"1000", c[3]}});
}

PureState make(const family::W2&) {
    return qubits(4, {{"0011", 1.0}, {"0110", 1.0}, {"1100", 1.0}, {"1001", 1.0}, {"0101", 1.0}, {"1010", 1.0}});
}

PureState make(const family::TwoSinglets& p) {
    // Singlet (|01> - |10>)/sqrt(2) on each pair, first-named party first.
    std::array<std::size_t, 4> order{};
    switch (p.pairing) {
    case family::Pairing::AB_CD: order = {0, 1, 2, 3}; break;
    case family::Pairing::AC_BD: order = {0, 2, 1, 3}; break;
    case family::Pairing::AD_BC: order = {0, 3, 1, 2}; break;
    }
    // Build psi-_{order0 order1} (x) psi-_{order2 order3} directly.
    std::vector<Complex> amps(16, Complex{0.0, 0.0});
    const double h = 0.5;
    const std::array<std::array<int, 2>, 2> terms{{{0, 1}, {1, 0}}};
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
            std::array<int, 4> idx{};
            idx[order[0]] = terms[s][0];
            idx[order[1]] = terms[s][1];
            idx[order[2]] = terms[t][0];
            idx[order[3]] = terms[t][1];
            const std::size_t flat = static_cast<std::size_t>(idx[0] * 8 + idx[1] * 4 + idx[2] * 2 + idx[3]);
            amps[flat] = h * (s == 0 ? 1.0 : -1.0) * (t == 0 ? 1.0 : -1.0);
        }
    }
    return PureState(std::move(amps), {2, 2, 2, 2});
}

PureState make(const family::RvbFerro& p) {
    if (!std::isfinite(p.mu) || p.mu < 0.0) throw SpecError("RvbFerro requires mu >= 0");
    if (p.mu > kRvbMuMax) throw SpecError("RvbFerro mu above 1e6; use the RvbFerroLimit constructor");
    const double mu = p.mu;
    return qubits(4, {{"0101", 1.0}, {"1010", 1.0}, {"0011", 1.0}, {"1100", 1.0}, {"1001", -mu}, {"0110", -mu}});
}

PureState make(const family::RvbFerroLimit&) {
    return qubits(4, {{"1001", -1.0}, {"0110", -1.0}});
}

PureState make(const family::Singlet&) {
    return qubits(2, {{"01", 1.0}, {"10", -1.0}});
}

PureState make(const family::Raw& p) {
    return read_state_file(p.path);
}

} // namespace

PureState make_state(const FamilySpec& spec) {
    return std::visit([](const auto& p) { return make(p); }, spec);
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const family::Ghz&) -> std::string { return "GHZ"; },
                          [](const family::Cluster&) -> std::string { return "cluster"; },
                          [](const family::Chi&) -> std::string { return "chi"; },
                          [](const family::W&) -> std::string { return "W"; },
                          [](const family::W2&) -> std::string { return "W2"; },
                          [](const family::TwoSinglets&) -> std::string { return "SS"; },
                          [](const family::RvbFerro&) -> std::string { return "RVB"; },
                          [](const family::RvbFerroLimit&) -> std::string { return "RVB-limit"; },
                          [](const family::Singlet&) -> std::string { return "singlet"; },
                          [](const family::Raw& r) -> std::string { return r.path.filename().string(); },
                      },
                      spec);
}

} // namespace mace
