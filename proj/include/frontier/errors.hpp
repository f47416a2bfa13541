#pragma once

#include <stdexcept>
#include <string>

namespace frontier {

// Bad user-supplied parameters (CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to converge or produced garbage (CLI exit code 3).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// A step/trial budget ran out before the stopping rule fired (CLI exit code 4).
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frontier
