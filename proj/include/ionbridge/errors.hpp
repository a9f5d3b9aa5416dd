#pragma once

#include <stdexcept>
#include <string>

namespace ionbridge {

/// Bad user input: config mistakes, violated preconditions, unknown
/// identifiers. CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: truncation leakage, non-convergence, infeasible
/// rounding. CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant breach. CLI maps this to exit code 4.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

} // namespace ionbridge
