#pragma once

#include <stdexcept>
#include <string>

namespace dcgen {

// Malformed or inconsistent data files (catalog, library, sweep file).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sizing target that cannot be met with the given reference configuration.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user input: bad flag value, unknown reference name, bad arguments.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dcgen
