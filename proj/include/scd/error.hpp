#pragma once

#include <stdexcept>
#include <string>

namespace scd {

/// Input data that cannot be processed: malformed files, infeasible
/// generator parameters, degenerate inputs for an operation.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration value. The message names the offending field.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace scd
