#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fracgrowth {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result does not fit in a double. Distinct from a NaN failure.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what, double at_time = 0.0)
        : std::overflow_error(what), time_(at_time) {}

    /// Time coordinate at which the overflow happened (0 for scalar evaluations).
    [[nodiscard]] double time() const noexcept { return time_; }

private:
    double time_;
};

/// The requested operation has no defined behaviour for these parameters.
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Scenario configuration could not be parsed or validated.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}

    /// Offending configuration key, empty when the error is not tied to one key.
    [[nodiscard]] const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

}  // namespace fracgrowth
