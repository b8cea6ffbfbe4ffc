#pragma once

// Natural growth of output Y(t) driven by net investment, with and without power-law memory.
//
//   classical:  Y'(t)        = lambda Y(t) - m b / v
//   memory:     (D^alpha Y)(t) = lambda Y(t) - m b / v,   lambda = m (P - a) / v
//
// The closed forms are Y(t) = Y* + (Y(0) - Y*) E_{alpha,1}(lambda t^alpha)
// [+ Y'(0) t E_{alpha,2}(lambda t^alpha) for 1 < alpha <= 2], with Y* = b / (P - a).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracgrowth/sampled_function.hpp"

namespace fracgrowth {

struct ModelParams {
    double price = 1.0;            ///< P > 0
    double marginal_cost = 0.0;    ///< a >= 0, a != P
    double fixed_cost = 0.0;       ///< b >= 0
    double investment_rate = 0.5;  ///< m > 0; (0, 1) is the economic range
    double investment_ratio = 1.0; ///< v > 0
    double alpha = 1.0;            ///< memory order in (0, 2]
    double y0 = 0.0;               ///< Y(0)
    std::optional<double> y1;      ///< Y'(0), present exactly when alpha > 1

    [[nodiscard]] double margin() const noexcept { return price - marginal_cost; }

    /// Throws DomainError when an invariant is violated.
    void validate() const;

    /// Non-fatal diagnostics (investment_rate outside (0, 1)).
    [[nodiscard]] std::vector<std::string> warnings() const;

    /// Copy with the memory order replaced; y1 is kept only when the new order needs it.
    [[nodiscard]] ModelParams with_alpha(double new_alpha, std::optional<double> slope) const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Parameters from the margin P - a alone (a = 0).
[[nodiscard]] ModelParams params_from_margin(double p_minus_a, double fixed_cost, double investment_rate,
                                             double investment_ratio, double alpha, double y0,
                                             std::optional<double> y1 = std::nullopt);

[[nodiscard]] double lambda_of(const ModelParams& p);

/// Y* = b / (P - a), the output at which net investment vanishes.
[[nodiscard]] double equilibrium_output(const ModelParams& p);

/// C = a y + b.
[[nodiscard]] double costs(const ModelParams& p, double y);

/// I = m (P y - C(y)).
[[nodiscard]] double net_investment(const ModelParams& p, double y);

/// Time grid t_i = i h, i = 0 .. steps.
struct UniformGrid {
    double h = 0.01;
    std::size_t steps = 0;

    /// Grid over [0, horizon]; the horizon must be a whole number of steps.
    [[nodiscard]] static UniformGrid over(double horizon, double h);

    [[nodiscard]] std::size_t points() const noexcept { return steps + 1; }
    [[nodiscard]] double time(std::size_t i) const noexcept { return static_cast<double>(i) * h; }
    [[nodiscard]] double horizon() const noexcept { return static_cast<double>(steps) * h; }

    friend bool operator==(const UniformGrid&, const UniformGrid&) = default;
};

enum class Variant { Classical, MemoryClosedForm, MemoryNumeric };

[[nodiscard]] std::string_view to_string(Variant v) noexcept;
[[nodiscard]] std::optional<Variant> parse_variant(std::string_view name) noexcept;

struct Trajectory {
    UniformGrid grid;
    std::vector<double> values;
    double alpha = 1.0;
    Variant variant = Variant::Classical;

    [[nodiscard]] double time(std::size_t i) const noexcept { return grid.time(i); }
    [[nodiscard]] SampledFunction as_sampled() const;
};

/// Y(t) = Y* + (Y(0) - Y*) e^{lambda t}. Ignores alpha and y1.
/// Throws OverflowError (carrying t) when the exponential leaves the double range.
[[nodiscard]] Trajectory classical_solution(const ModelParams& p, const UniformGrid& grid);

/// Mittag-Leffler closed form, one E_{alpha,k} evaluation per node and term.
[[nodiscard]] Trajectory memory_solution(const ModelParams& p, const UniformGrid& grid);

/// Y = M I^alpha[I]. alpha = 0 is the memoryless multiplier Y = M I.
[[nodiscard]] SampledFunction multiplier_with_memory(const SampledFunction& investment, double alpha,
                                                     double multiplier);

/// I = v D^alpha[Y], the inverse of multiplier_with_memory when v = 1 / M.
[[nodiscard]] SampledFunction accelerator_with_memory(const SampledFunction& output, double alpha,
                                                      double investment_ratio);

enum class Regime { Growth, Downturn, Equilibrium };

[[nodiscard]] std::string_view to_string(Regime r) noexcept;

/// Sign of Y(0) - Y*. Defined only for 0 < alpha <= 1 and lambda > 0; throws
/// UnsupportedError otherwise.
[[nodiscard]] Regime regime_classify(const ModelParams& p);

}  // namespace fracgrowth
