#pragma once

#include <functional>
#include <string_view>

namespace mace {

using WarningHandler = std::function<void(std::string_view)>;

// Installs the sink for non-fatal warnings (slow GM runs, renormalized input files).
// Passing an empty handler restores the default, which writes to stderr.
// Returns the previous handler.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(std::string_view message);

} // namespace mace
