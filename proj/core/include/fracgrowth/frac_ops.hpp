#pragma once

// Riemann-Liouville integration and Caputo differentiation of uniformly sampled functions.

#include "fracgrowth/sampled_function.hpp"

namespace fracgrowth {

/// Order of a fractional operator. For non-integer alpha, n = floor(alpha) + 1;
/// for integer alpha, n = alpha.
class FracOrder {
public:
    /// Throws DomainError for negative or non-finite alpha.
    explicit FracOrder(double alpha);

    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] bool is_integer() const noexcept;

private:
    double alpha_;
    int n_;
};

/// (I^alpha f)(t_i) by product-trapezoidal quadrature: f is replaced by its piecewise-linear
/// interpolant and the kernel (t - tau)^{alpha-1} / Gamma(alpha) is integrated exactly on
/// every panel. Second order for smooth f. Result is zero at the first node.
/// Throws DomainError for alpha <= 0.
[[nodiscard]] SampledFunction rl_integral(const SampledFunction& f, FracOrder order);

/// Caputo derivative (D^alpha f)(t_i), 0 < alpha <= 2.
///
///  - 0 < alpha < 1: L1 scheme, i.e. the exact Caputo derivative of the piecewise-linear
///    interpolant of f.
///  - 1 < alpha < 2: the L1 scheme of order alpha - 1 applied to f' (second-order finite
///    differences), using D^alpha f = D^{alpha-1} f' for Caputo operators.
///  - alpha = 1, 2: ordinary finite-difference derivatives, second order everywhere.
///
/// Non-integer orders return 0 at the first node (empty integration range).
/// Throws DomainError for alpha <= 0 or alpha > 2.
[[nodiscard]] SampledFunction caputo_derivative(const SampledFunction& f, FracOrder order);

}  // namespace fracgrowth
