#pragma once

// The four reference scenarios: graph 1 is the memoryless model (alpha = 1), graph 2 the
// model with memory of order `memory_alpha`. Default window [0, 20] with h = 0.01.

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "fracgrowth/growth_model.hpp"

namespace fracgrowth {

inline constexpr double kFigureHorizon = 20.0;
inline constexpr double kFigureStep = 0.01;

struct FigureSetup {
    int number = 0;
    std::string_view title;
    double p_minus_a = 0.0;
    double fixed_cost = 0.0;
    double investment_rate = 0.0;
    double investment_ratio = 0.0;
    double y0 = 0.0;
    std::optional<double> y1;  ///< Y'(0), only for memory orders above 1
    double memory_alpha = 1.0;

    /// Parameters for the given order (a = 0, P = p_minus_a).
    [[nodiscard]] ModelParams params(double alpha) const;
};

/// Throws DomainError unless 1 <= n <= 4.
[[nodiscard]] const FigureSetup& figure_setup(int n);

struct FigureData {
    FigureSetup setup;
    double horizon = kFigureHorizon;
    double step = kFigureStep;
    Trajectory graph1;  ///< alpha = 1
    Trajectory graph2;  ///< alpha = memory_alpha
    std::optional<double> crossover_time;
};

/// First t > 0 where graph2 - graph1 changes sign, linearly interpolated between nodes.
[[nodiscard]] std::optional<double> crossover_time(const Trajectory& a, const Trajectory& b);

[[nodiscard]] FigureData compute_figure(int n, double horizon = kFigureHorizon, double step = kFigureStep);

/// Key-value manifest: every parameter used, the grid, crossover time and tool version.
[[nodiscard]] std::string figure_manifest(const FigureData& data);

/// Writes figure<n>/ under out_dir: graph CSVs, a runnable config, manifest.txt and a
/// gnuplot script. Returns the files written.
std::vector<std::filesystem::path> reproduce_figure(int n, const std::filesystem::path& out_dir,
                                                    double horizon = kFigureHorizon, double step = kFigureStep);

}  // namespace fracgrowth
