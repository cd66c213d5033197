#pragma once

#include <stdexcept>
#include <string>

namespace lisafit {

/// Invalid tunables, malformed specs, unknown names. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Inputs that violate a data contract (points outside the window, grid
/// mismatches, empty patterns where data is required). CLI exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failures: rank-deficient designs, singular embeddings,
/// non-convergence surfaced as a hard error. CLI exit code 4.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lisafit
