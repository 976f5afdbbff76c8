#pragma once

#include <stdexcept>
#include <string>

namespace sigma0 {

/// Input violates the stated hypothesis of a formula or operation.
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (cycle notation, catalog lines, instance dumps).
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured enumeration or lattice cap would be exceeded.
class cap_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace sigma0
