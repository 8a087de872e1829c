#pragma once

#include <string>

namespace mace {

// 12 significant digits; integral values keep a trailing ".0" (1 -> "1.0").
std::string format_number(double value);

// Plain %.12g, used for CSV columns.
std::string format_g12(double value);

} // namespace mace
