#pragma once

// Cross-module self-check run by `fracgrowth validate`.

#include <optional>
#include <string>
#include <vector>

namespace fracgrowth {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationOptions {
    std::optional<std::string> only;  ///< run a single check by name
    double ml_tolerance = 1e-10;      ///< relative tolerance of the Mittag-Leffler identities
};

/// Names accepted by ValidationOptions::only, in execution order:
/// ml, inverse, reduction, oracle, figures, regime.
[[nodiscard]] const std::vector<std::string>& validation_checks();

/// Throws ConfigError (key "only") for an unknown check name.
[[nodiscard]] std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

}  // namespace fracgrowth
