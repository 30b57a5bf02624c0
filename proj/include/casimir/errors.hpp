#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Invalid user input: unknown material, bad units, inconsistent plate setup.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A quadrature or series failed to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Root bracket for the thickness search does not change sign.
class NoZeroCrossing : public std::runtime_error {
 public:
  explicit NoZeroCrossing(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace casimir
