#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "mace/state.hpp"

namespace mace {

// Raw state file: a JSON document
//
//   { "local_dims": [2, 2, 2, 2],
//     "amplitudes": [[re, im], ...],      // flat-index order
//     "party_labels": ["A", "B", "C", "D"] }  // optional
//
// Input is normalized on read; a warning is emitted when the stored norm is
// off by more than 1e-6.
inline constexpr double kRawNormWarnThreshold = 1e-6;

PureState parse_state_document(std::string_view text);
PureState read_state_file(const std::filesystem::path& path);

void write_state_document(std::ostream& out, const PureState& state);
void write_state_file(const std::filesystem::path& path, const PureState& state);

} // namespace mace
