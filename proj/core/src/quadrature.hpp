#pragma once

// Product-integration weights for the kernel (t - tau)^{alpha-1} on a uniform grid, in
// grid-index units (h = 1). Shared by the RL integral and the fractional Adams solver.

#include <cstddef>
#include <span>
#include <vector>

namespace fracgrowth::detail {

/// (k+1)^p - k^p for k >= 0, accurate for large k.
[[nodiscard]] double forward_power_difference(double k, double p);

/// (k+1)^p - 2 k^p + (k-1)^p for k >= 1, accurate for large k.
[[nodiscard]] double second_power_difference(double k, double p);

/// Product-trapezoid weights for I^alpha at node n, all divided by Gamma(alpha + 2):
///   first(n)    weight of f_0,
///   interior(k) weight of f_{n-k} for 1 <= k <= n-1,
///   last        weight of f_n.
struct TrapezoidWeights {
    std::vector<double> first;     ///< indexed by n
    std::vector<double> interior;  ///< indexed by k = n - j
    double last = 0.0;
};

[[nodiscard]] TrapezoidWeights trapezoid_weights(double alpha, std::size_t nodes);

/// Product-rectangle weights for I^alpha: weight of f_j at node n is rect[n - j - 1], 0 <= j < n.
[[nodiscard]] std::vector<double> rectangle_weights(double alpha, std::size_t nodes);

/// I^alpha f at every node by the product-trapezoid rule, index units.
[[nodiscard]] std::vector<double> rl_trapezoid(std::span<const double> f, double alpha);

/// I^alpha f at every node by the product-rectangle rule (left endpoint), index units.
[[nodiscard]] std::vector<double> rl_rectangle(std::span<const double> f, double alpha);

}  // namespace fracgrowth::detail
