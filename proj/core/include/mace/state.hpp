#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace mace {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kSchmidtClip = 1e-12;

// Pure state of n parties stored as a dense amplitude tensor.
//
// Flat index convention: party 0 is the most significant digit, so the flat
// index of local indices (i_0, ..., i_{n-1}) is sum_k i_k * prod_{m>k} d_m.
// Instances are always normalized.
class PureState {
  public:
    // Normalizes the amplitudes. Throws std::invalid_argument on a size
    // mismatch, a dimension below 2, or an all-zero vector.
    PureState(std::vector<Complex> amplitudes, std::vector<int> local_dims,
              std::vector<std::string> party_labels = {});

    [[nodiscard]] std::size_t num_parties() const { return dims_.size(); }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] const std::vector<int>& local_dims() const { return dims_; }
    [[nodiscard]] int local_dim(std::size_t party) const { return dims_.at(party); }
    [[nodiscard]] const std::vector<std::string>& party_labels() const { return labels_; }
    [[nodiscard]] const std::string& label(std::size_t party) const { return labels_.at(party); }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }
    [[nodiscard]] Complex amplitude(std::size_t flat_index) const { return amps_.at(flat_index); }

    [[nodiscard]] bool all_qubits() const;

    // Stride of a party in the flat index.
    [[nodiscard]] std::size_t stride(std::size_t party) const;

    [[nodiscard]] std::vector<int> local_indices(std::size_t flat_index) const;
    [[nodiscard]] std::size_t flat_index(std::span<const int> local_indices) const;

    // Renders a basis label such as "0110" (digits per party, comma separated
    // when any dimension exceeds 10).
    [[nodiscard]] std::string basis_label(std::size_t flat_index) const;

  private:
    std::vector<Complex> amps_;
    std::vector<int> dims_;
    std::vector<std::string> labels_;
};

// Default labels A, B, C, ... (P<k> past Z).
std::vector<std::string> default_party_labels(std::size_t n);

// Two-sided split of the parties. Stored canonically as the side holding party 0.
class Bipartition {
  public:
    // `side` may be either side of the split; it is replaced by its complement
    // when it does not contain party 0. Throws std::invalid_argument unless the
    // side is nonempty, a proper subset, and in range.
    Bipartition(std::vector<std::size_t> side, std::size_t num_parties);

    // Parses "AB:CD" style splits against the party labels (single-letter labels
    // may be concatenated; otherwise use commas, e.g. "P0,P1:P2").
    static Bipartition parse(std::string_view text, const std::vector<std::string>& labels);

    [[nodiscard]] const std::vector<std::size_t>& side_a() const { return side_a_; }
    [[nodiscard]] std::vector<std::size_t> side_b() const;
    [[nodiscard]] std::size_t num_parties() const { return n_; }
    [[nodiscard]] std::string to_string(const std::vector<std::string>& labels) const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

  private:
    std::vector<std::size_t> side_a_;
    std::size_t n_;
};

// All 2^(n-1) - 1 canonical bipartitions, ordered by the smaller side (size,
// then members): A:BCD, ACD:B, ABD:C, ABC:D, AB:CD, AC:BD, AD:BC for n = 4.
std::vector<Bipartition> all_bipartitions(std::size_t num_parties);

// Squared Schmidt coefficients, descending. Entries below kSchmidtClip are zero.
struct SchmidtSpectrum {
    std::vector<double> squared_coeffs;

    [[nodiscard]] double largest() const { return squared_coeffs.empty() ? 0.0 : squared_coeffs.front(); }
    [[nodiscard]] std::size_t rank() const;
};

// Amplitude matrix of the state reshaped to (dim side_a) x (dim side_b).
Eigen::MatrixXcd reshape_matrix(const PureState& state, const Bipartition& split);

SchmidtSpectrum schmidt_spectrum(const PureState& state, const Bipartition& split);

// <s1|s2>, conjugate-linear in s1. Throws ShapeError on mismatched dimensions.
Complex inner_product(const PureState& s1, const PureState& s2);

// |<s1|s2>| == 1, i.e. equal up to a global phase.
bool equal_up_to_phase(const PureState& s1, const PureState& s2, double tol = 1e-10);

// Throws std::invalid_argument if `u` is not square of the party's dimension or
// deviates from unitarity by more than 1e-10.
PureState apply_local_unitary(const PureState& state, std::size_t party, const Eigen::MatrixXcd& u);

// s1 (x) s2 with the parties of s2 appended after those of s1.
PureState tensor_product(const PureState& s1, const PureState& s2);

// Reorders parties: party k of the result is party order[k] of the input.
PureState permute_parties(const PureState& state, std::span<const std::size_t> order);

// Inserts a single-party vector as a new party at `position` (product extension).
PureState insert_party(const PureState& state, std::size_t position, const Eigen::VectorXcd& local,
                       std::string label = {});

} // namespace mace
