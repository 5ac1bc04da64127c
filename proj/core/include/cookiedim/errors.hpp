#pragma once

#include <stdexcept>
#include <string>

namespace cookiedim {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// configuration problems map to exit 2, resource caps to exit 3.

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// argument outside the documented domain (x outside [0,1], bad index, ...)
struct DomainError : Error {
  using Error::Error;
};

// a map or system violating its structural invariants
struct InvalidSystemError : Error {
  using Error::Error;
};

// operation not available for this map variant (composite inversion, ...)
struct UnsupportedVariantError : Error {
  using Error::Error;
};

// malformed config file or CLI arguments
struct ConfigError : Error {
  using Error::Error;
};

// exact enumeration would exceed the word-count cap
struct DepthCapError : Error {
  using Error::Error;
};

}  // namespace cookiedim
