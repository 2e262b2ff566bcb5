#pragma once

#include <stdexcept>
#include <string>

namespace abfringe {

// Raised for invalid run configuration (bad JSON, unknown keys, out-of-range
// parameters). The command line tool maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a requested geometry cannot be constructed (e.g. the field is
// strong enough that an interferometer leg never reaches the next crystal).
// Mapped to exit code 3.
class GeometryError : public std::runtime_error {
public:
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a numerical routine detects a non-finite sample or an internal
// consistency check fails beyond tolerance. Mapped to exit code 3.
class NumericsError : public std::runtime_error {
public:
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace abfringe
