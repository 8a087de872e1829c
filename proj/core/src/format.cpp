#include "mace/format.hpp"

#include <cmath>
#include <cstdio>

namespace mace {

std::string format_g12(double value) {
    if (value == 0.0) value = 0.0; // drop negative zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string format_number(double value) {
    std::string s = format_g12(value);
    if (std::isfinite(value) && s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

} // namespace mace
