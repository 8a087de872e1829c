#pragma once

#include <stdexcept>

namespace mace {

// Malformed family spec string or out-of-domain state parameters.
class SpecError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// State has the wrong number of parties or wrong local dimensions for an operation.
class ShapeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Missing, unreadable, or malformed state / output files.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace mace
