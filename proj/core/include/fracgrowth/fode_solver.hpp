#pragma once

// Numerical solution of (D^alpha Y)(t) - lambda Y(t) = f(t) with Caputo initial data,
// independent of the Mittag-Leffler closed forms it is used to check.

#include <functional>
#include <optional>
#include <vector>

#include "fracgrowth/growth_model.hpp"

namespace fracgrowth {

/// Right-hand side f(t): either a constant or an arbitrary callable.
class Forcing {
public:
    [[nodiscard]] static Forcing constant(double value);
    [[nodiscard]] static Forcing function(std::function<double(double)> fn);

    [[nodiscard]] double operator()(double t) const;
    [[nodiscard]] bool is_constant() const noexcept { return constant_.has_value(); }
    [[nodiscard]] std::optional<double> constant_value() const noexcept { return constant_; }

private:
    std::optional<double> constant_;
    std::function<double(double)> fn_;
};

struct LinearFODE {
    double alpha = 1.0;
    double lambda = 0.0;
    Forcing forcing = Forcing::constant(0.0);
    std::vector<double> init;  ///< Y^{(k)}(0), k = 0 .. ceil(alpha) - 1

    /// Number of initial values the order requires.
    [[nodiscard]] int order_count() const noexcept;

    /// Throws DomainError on alpha outside (0, 2], wrong init length or non-finite fields.
    void validate() const;
};

/// The growth equation as a linear FODE: lambda = m (P - a) / v, f = -m b / v.
[[nodiscard]] LinearFODE to_fode(const ModelParams& p);

/// Fractional Adams-Bashforth-Moulton predictor-corrector (product-rectangle predictor,
/// one product-trapezoid corrector sweep, full history) on [0, horizon] with `steps` steps.
/// Global error O(h^{min(2, 1 + alpha)}). Throws DomainError for steps < 16 or
/// horizon <= 0, OverflowError when the solution leaves the double range.
[[nodiscard]] Trajectory solve_linear(const LinearFODE& eq, double horizon, std::size_t steps);

/// Closed-form solution for constant forcing:
///   Y(t) = f t^alpha E_{alpha,alpha+1}(lambda t^alpha) + sum_k c_k t^k E_{alpha,k+1}(lambda t^alpha).
/// The first term equals f / lambda (E_{alpha,1}(lambda t^alpha) - 1) and stays finite as lambda -> 0.
/// Throws UnsupportedError for non-constant forcing.
[[nodiscard]] Trajectory closed_form_solution(const LinearFODE& eq, const UniformGrid& grid);

}  // namespace fracgrowth
