#pragma once

// Declarative scenario runs: a flat `key = value` config selects parameters, grid,
// solution variants and an optional alpha sweep; each (variant, alpha) pair becomes one CSV.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracgrowth/growth_model.hpp"

namespace fracgrowth {

/// Upper bound on T / h.
inline constexpr double kMaxGridSteps = 1e7;

struct ScenarioConfig {
    ModelParams params;  ///< params.alpha is the order used when alpha_sweep is empty
    double horizon = 20.0;
    double step = 0.01;
    std::vector<Variant> variants{Variant::Classical, Variant::MemoryClosedForm};
    std::vector<double> alpha_sweep;
    std::string output_path = "out";
    bool gnuplot = false;

    /// Orders actually run: alpha_sweep, or {params.alpha} when the sweep is empty.
    [[nodiscard]] std::vector<double> orders() const;

    /// params with alpha replaced by `alpha`; y1 is kept only when that order needs it.
    [[nodiscard]] ModelParams params_for(double alpha) const;

    /// Throws ConfigError naming the offending key.
    void validate() const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys, malformed numbers and
/// conflicting keys throw ConfigError. Does not validate ranges.
[[nodiscard]] ScenarioConfig parse_config(std::string_view text);

/// Reads and parses a config file. Throws ConfigError when the file cannot be read.
[[nodiscard]] ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(format_config(c)) == c.
[[nodiscard]] std::string format_config(const ScenarioConfig& config);

struct ScenarioResult {
    std::vector<Trajectory> trajectories;  ///< classical first, then per order in sweep order
    std::vector<std::string> warnings;
};

/// Validates and evaluates every requested trajectory. Orders of a sweep are evaluated
/// concurrently; the result order does not depend on scheduling.
/// Throws ConfigError, or OverflowError carrying the time of overflow.
[[nodiscard]] ScenarioResult compute_scenario(const ScenarioConfig& config);

/// File name for a trajectory, e.g. "classical.csv" or "memory-closed-form_alpha-0.9.csv".
[[nodiscard]] std::string trajectory_file_name(const Trajectory& tr);

/// compute_scenario, then one CSV per trajectory (plus plot.gp when requested) under
/// config.output_path. Returns the files written.
std::vector<std::filesystem::path> run_scenario(const ScenarioConfig& config,
                                                std::vector<std::string>* warnings = nullptr);

}  // namespace fracgrowth
