#pragma once

#include <stdexcept>
#include <string>

namespace diamond {

// Malformed or out-of-range input. CLI exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// g_from could not find an index set inside [0, n].
class BoundaryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A structural guarantee of the slide algorithms did not hold. CLI exit code 3.
class TrapError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace diamond
