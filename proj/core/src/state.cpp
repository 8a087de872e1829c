#include "mace/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

#include "mace/errors.hpp"

namespace mace {

std::vector<std::string> default_party_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k < 26) labels.emplace_back(1, static_cast<char>('A' + k));
        else labels.push_back("P" + std::to_string(k));
    }
    return labels;
}

PureState::PureState(std::vector<Complex> amplitudes, std::vector<int> local_dims,
                     std::vector<std::string> party_labels)
    : amps_(std::move(amplitudes)), dims_(std::move(local_dims)), labels_(std::move(party_labels)) {
    if (dims_.empty()) throw std::invalid_argument("state needs at least one party");
    std::size_t total = 1;
    for (int d : dims_) {
        if (d < 2) throw std::invalid_argument("local dimensions must be >= 2");
        total *= static_cast<std::size_t>(d);
    }
    if (amps_.size() != total) {
        throw std::invalid_argument("amplitude count " + std::to_string(amps_.size()) +
                                    " does not match product of local dimensions " + std::to_string(total));
    }
    if (labels_.empty()) labels_ = default_party_labels(dims_.size());
    if (labels_.size() != dims_.size()) throw std::invalid_argument("one label per party required");

    double norm2 = 0.0;
    for (const auto& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("amplitudes must be finite");
        norm2 += std::norm(a);
    }
    if (!(norm2 > 0.0)) throw std::invalid_argument("cannot normalize the zero vector");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps_) a *= inv;
}

bool PureState::all_qubits() const {
    return std::all_of(dims_.begin(), dims_.end(), [](int d) { return d == 2; });
}

std::size_t PureState::stride(std::size_t party) const {
    std::size_t s = 1;
    for (std::size_t m = party + 1; m < dims_.size(); ++m) s *= static_cast<std::size_t>(dims_[m]);
    return s;
}

std::vector<int> PureState::local_indices(std::size_t flat) const {
    std::vector<int> idx(dims_.size());
    for (std::size_t k = dims_.size(); k-- > 0;) {
        idx[k] = static_cast<int>(flat % static_cast<std::size_t>(dims_[k]));
        flat /= static_cast<std::size_t>(dims_[k]);
    }
    return idx;
}

std::size_t PureState::flat_index(std::span<const int> local) const {
    if (local.size() != dims_.size()) throw std::invalid_argument("wrong number of local indices");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (local[k] < 0 || local[k] >= dims_[k]) throw std::out_of_range("local index out of range");
        flat = flat * static_cast<std::size_t>(dims_[k]) + static_cast<std::size_t>(local[k]);
    }
    return flat;
}

std::string PureState::basis_label(std::size_t flat) const {
    const auto idx = local_indices(flat);
    const bool wide = std::any_of(dims_.begin(), dims_.end(), [](int d) { return d > 10; });
    std::string out;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (wide && k > 0) out += ',';
        out += std::to_string(idx[k]);
    }
    return out;
}

Bipartition::Bipartition(std::vector<std::size_t> side, std::size_t num_parties) : n_(num_parties) {
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
    if (side.empty()) throw std::invalid_argument("bipartition side must be nonempty");
    if (side.back() >= num_parties) throw std::invalid_argument("bipartition party index out of range");
    if (side.size() >= num_parties) throw std::invalid_argument("bipartition side must be a proper subset");
    if (side.front() != 0) {
        std::vector<std::size_t> complement;
        for (std::size_t k = 0; k < num_parties; ++k)
            if (!std::binary_search(side.begin(), side.end(), k)) complement.push_back(k);
        side = std::move(complement);
    }
    side_a_ = std::move(side);
}

std::vector<std::size_t> Bipartition::side_b() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n_; ++k)
        if (!std::binary_search(side_a_.begin(), side_a_.end(), k)) out.push_back(k);
    return out;
}

namespace {

std::vector<std::size_t> parse_side(std::string_view text, const std::vector<std::string>& labels) {
    std::vector<std::size_t> side;
    auto lookup = [&](std::string_view name) {
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) throw std::invalid_argument("unknown party label '" + std::string(name) + "'");
        side.push_back(static_cast<std::size_t>(it - labels.begin()));
    };
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            lookup(text.substr(start, end - start));
            start = end + 1;
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) lookup(text.substr(i, 1));
    }
    return side;
}

} // namespace

Bipartition Bipartition::parse(std::string_view text, const std::vector<std::string>& labels) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("split must look like AB:CD");
    auto lhs = parse_side(text.substr(0, colon), labels);
    auto rhs = parse_side(text.substr(colon + 1), labels);
    std::vector<std::size_t> all = lhs;
    all.insert(all.end(), rhs.begin(), rhs.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("split lists a party twice");
    if (all.size() != labels.size()) throw std::invalid_argument("split must cover every party");
    return Bipartition(std::move(lhs), labels.size());
}

std::string Bipartition::to_string(const std::vector<std::string>& labels) const {
    const bool single = std::all_of(labels.begin(), labels.end(), [](const auto& l) { return l.size() == 1; });
    auto side_text = [&](const std::vector<std::size_t>& side) {
        std::string out;
        for (std::size_t i = 0; i < side.size(); ++i) {
            if (!single && i > 0) out += ',';
            out += labels.at(side[i]);
        }
        return out;
    };
    return side_text(side_a_) + ":" + side_text(side_b());
}

std::vector<Bipartition> all_bipartitions(std::size_t n) {
    if (n < 2) return {};
    std::vector<Bipartition> out;
    // Every subset of {1..n-1} joined with party 0, except the full set.
    const std::size_t masks = std::size_t{1} << (n - 1);
    std::vector<std::vector<std::size_t>> sides;
    for (std::size_t mask = 0; mask + 1 < masks; ++mask) {
        std::vector<std::size_t> side{0};
        for (std::size_t k = 1; k < n; ++k)
            if (mask & (std::size_t{1} << (k - 1))) side.push_back(k);
        sides.push_back(std::move(side));
    }
    // Order by the smaller side (size, then members): A:BCD, ACD:B, ..., AB:CD.
    auto smaller = [n](const std::vector<std::size_t>& side) {
        if (2 * side.size() <= n) return side;
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < n; ++k)
            if (!std::binary_search(side.begin(), side.end(), k)) rest.push_back(k);
        return rest;
    };
    std::stable_sort(sides.begin(), sides.end(), [&](const auto& a, const auto& b) {
        const auto sa = smaller(a), sb = smaller(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        return sa < sb;
    });
    for (auto& s : sides) out.emplace_back(std::move(s), n);
    return out;
}

std::size_t SchmidtSpectrum::rank() const {
    return static_cast<std::size_t>(
        std::count_if(squared_coeffs.begin(), squared_coeffs.end(), [](double p) { return p > 0.0; }));
}

Eigen::MatrixXcd reshape_matrix(const PureState& state, const Bipartition& split) {
    if (split.num_parties() != state.num_parties())
        throw std::invalid_argument("bipartition does not match the state's party count");
    const auto& a = split.side_a();
    const auto b = split.side_b();
    const auto& dims = state.local_dims();

    Eigen::Index rows = 1, cols = 1;
    for (auto k : a) rows *= dims[k];
    for (auto k : b) cols *= dims[k];

    Eigen::MatrixXcd m(rows, cols);
    const auto amps = state.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        const auto idx = state.local_indices(flat);
        Eigen::Index r = 0, c = 0;
        for (auto k : a) r = r * dims[k] + idx[k];
        for (auto k : b) c = c * dims[k] + idx[k];
        m(r, c) = amps[flat];
    }
    return m;
}

SchmidtSpectrum schmidt_spectrum(const PureState& state, const Bipartition& split) {
    Eigen::MatrixXcd m = reshape_matrix(state, split);
    // Work with the short side as rows; singular values are unchanged.
    if (m.rows() > m.cols()) m.transposeInPlace();
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();

    SchmidtSpectrum spectrum;
    spectrum.squared_coeffs.reserve(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        const double p = sv(i) * sv(i);
        spectrum.squared_coeffs.push_back(p < kSchmidtClip ? 0.0 : std::min(p, 1.0));
    }
    std::sort(spectrum.squared_coeffs.begin(), spectrum.squared_coeffs.end(), std::greater<>());
    return spectrum;
}

Complex inner_product(const PureState& s1, const PureState& s2) {
    if (s1.local_dims() != s2.local_dims()) throw ShapeError("inner product of states with different shapes");
    const auto a = s1.amplitudes();
    const auto b = s2.amplitudes();
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

bool equal_up_to_phase(const PureState& s1, const PureState& s2, double tol) {
    if (s1.local_dims() != s2.local_dims()) return false;
    return std::abs(std::abs(inner_product(s1, s2)) - 1.0) <= tol;
}

PureState apply_local_unitary(const PureState& state, std::size_t party, const Eigen::MatrixXcd& u) {
    if (party >= state.num_parties()) throw std::invalid_argument("party index out of range");
    const int d = state.local_dim(party);
    if (u.rows() != d || u.cols() != d)
        throw std::invalid_argument("local unitary must be " + std::to_string(d) + "x" + std::to_string(d));
    const Eigen::MatrixXcd defect = u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d);
    if (defect.cwiseAbs().maxCoeff() > 1e-10) throw std::invalid_argument("matrix is not unitary");

    const auto in = state.amplitudes();
    std::vector<Complex> out(in.size(), Complex{0.0, 0.0});
    const std::size_t stride = state.stride(party);
    const std::size_t block = stride * static_cast<std::size_t>(d);
    for (std::size_t base = 0; base < in.size(); base += block) {
        for (std::size_t low = 0; low < stride; ++low) {
            for (int r = 0; r < d; ++r) {
                Complex acc{0.0, 0.0};
                for (int c = 0; c < d; ++c) acc += u(r, c) * in[base + static_cast<std::size_t>(c) * stride + low];
                out[base + static_cast<std::size_t>(r) * stride + low] = acc;
            }
        }
    }
    return PureState(std::move(out), state.local_dims(), state.party_labels());
}

PureState tensor_product(const PureState& s1, const PureState& s2) {
    const auto a = s1.amplitudes();
    const auto b = s2.amplitudes();
    std::vector<Complex> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    auto dims = s1.local_dims();
    dims.insert(dims.end(), s2.local_dims().begin(), s2.local_dims().end());
    // Labels of the factors may collide, so the product gets default labels.
    const auto n = dims.size();
    return PureState(std::move(out), std::move(dims), default_party_labels(n));
}

PureState permute_parties(const PureState& state, std::span<const std::size_t> order) {
    const std::size_t n = state.num_parties();
    if (order.size() != n) throw std::invalid_argument("permutation length must equal the party count");
    std::vector<std::size_t> seen(order.begin(), order.end());
    std::sort(seen.begin(), seen.end());
    for (std::size_t k = 0; k < n; ++k)
        if (seen[k] != k) throw std::invalid_argument("not a permutation of the parties");

    std::vector<int> dims(n);
    std::vector<std::string> labels(n);
    for (std::size_t k = 0; k < n; ++k) {
        dims[k] = state.local_dim(order[k]);
        labels[k] = state.label(order[k]);
    }
    std::vector<std::size_t> old_strides(n);
    for (std::size_t k = 0; k < n; ++k) old_strides[k] = state.stride(order[k]);

    const auto in = state.amplitudes();
    std::vector<Complex> out(in.size());
    std::vector<int> idx(n, 0);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        std::size_t src = 0;
        for (std::size_t k = 0; k < n; ++k) src += static_cast<std::size_t>(idx[k]) * old_strides[k];
        out[flat] = in[src];
        for (std::size_t k = n; k-- > 0;) {
            if (++idx[k] < dims[k]) break;
            idx[k] = 0;
        }
    }
    return PureState(std::move(out), std::move(dims), std::move(labels));
}

PureState insert_party(const PureState& state, std::size_t position, const Eigen::VectorXcd& local,
                       std::string label) {
    const std::size_t n = state.num_parties();
    if (position > n) throw std::invalid_argument("insert position out of range");
    if (local.size() < 2) throw std::invalid_argument("inserted party needs dimension >= 2");

    std::vector<Complex> vec(local.data(), local.data() + local.size());
    PureState single(std::move(vec), {static_cast<int>(local.size())});
    PureState joined = tensor_product(single, state);

    // Move the new party (now first) into place.
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == position) order.push_back(0);
        order.push_back(k + 1);
    }
    if (position == n) order.push_back(0);
    auto labels = state.party_labels();
    if (label.empty()) label = "X" + std::to_string(position);
    labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(position), std::move(label));
    PureState placed = permute_parties(joined, order);
    std::vector<Complex> amps(placed.amplitudes().begin(), placed.amplitudes().end());
    return PureState(std::move(amps), placed.local_dims(), std::move(labels));
}

} // namespace mace
