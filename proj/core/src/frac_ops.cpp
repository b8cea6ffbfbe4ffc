#include "fracgrowth/frac_ops.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "fracgrowth/error.hpp"
#include "fracgrowth/special_fn.hpp"
#include "quadrature.hpp"
#include "starting_weights.hpp"

namespace fracgrowth {
namespace {

// L1 Caputo derivative of order beta in (0, 1), grid-index units.
std::vector<double> l1_index_units(std::span<const double> f, double beta) {
    const std::size_t n_pts = f.size();
    const double p = 1.0 - beta;
    const double norm = 1.0 / gamma(2.0 - beta);

    std::vector<double> b(n_pts);
    for (std::size_t j = 0; j < n_pts; ++j) {
        b[j] = detail::forward_power_difference(static_cast<double>(j), p);
    }
    std::vector<double> diff(n_pts, 0.0);
    for (std::size_t i = 1; i < n_pts; ++i) {
        diff[i] = f[i] - f[i - 1];
    }
    std::vector<double> g(n_pts, 0.0);
    for (std::size_t n = 1; n < n_pts; ++n) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s += b[j] * diff[n - j];
        }
        g[n] = norm * s;
    }
    return g;
}

// Second-order first derivative, grid-index units.
std::vector<double> first_derivative_index_units(std::span<const double> f) {
    const std::size_t n = f.size();
    std::vector<double> d(n);
    if (n == 2) {
        d[0] = d[1] = f[1] - f[0];
        return d;
    }
    d[0] = 0.5 * (-3.0 * f[0] + 4.0 * f[1] - f[2]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d[i] = 0.5 * (f[i + 1] - f[i - 1]);
    }
    d[n - 1] = 0.5 * (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]);
    return d;
}

std::vector<double> second_derivative_index_units(std::span<const double> f) {
    const std::size_t n = f.size();
    std::vector<double> d(n, 0.0);
    if (n < 3) {
        return d;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d[i] = f[i + 1] - 2.0 * f[i] + f[i - 1];
    }
    if (n == 3) {
        d[0] = d[2] = d[1];
        return d;
    }
    d[0] = 2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3];
    d[n - 1] = 2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4];
    return d;
}

// Uncorrected fractional Caputo scheme, grid-index units.
std::vector<double> caputo_base(std::span<const double> f, double alpha) {
    if (alpha < 1.0) {
        return l1_index_units(f, alpha);
    }
    const auto df = first_derivative_index_units(f);
    auto g = l1_index_units(df, alpha - 1.0);
    g[0] = 0.0;
    return g;
}

// Base Caputo scheme plus starting corrections that make it exact on t^alpha and t^{1+alpha}
// (the leading terms of I^alpha applied to smooth data) while keeping its exactness on the
// polynomials it already reproduces.
std::vector<double> caputo_corrected(std::span<const double> f, double alpha) {
    const std::size_t n_pts = f.size();
    auto g = caputo_base(f, alpha);

    std::vector<double> exponents{1.0};
    if (alpha > 1.0) {
        exponents.push_back(2.0);
    }
    const std::size_t polynomial_count = exponents.size();
    detail::add_exponent(exponents, alpha);
    detail::add_exponent(exponents, alpha + 1.0);
    if (exponents.size() == polynomial_count || n_pts <= exponents.size()) {
        return g;
    }

    std::vector<std::vector<double>> residual(exponents.size(), std::vector<double>(n_pts, 0.0));
    for (std::size_t k = polynomial_count; k < exponents.size(); ++k) {
        const double sigma = exponents[k];
        std::vector<double> basis(n_pts);
        for (std::size_t j = 0; j < n_pts; ++j) {
            basis[j] = std::pow(static_cast<double>(j), sigma);
        }
        const auto approx = caputo_base(basis, alpha);
        // D^alpha t^sigma = Gamma(sigma+1) / Gamma(sigma+1-alpha) t^{sigma-alpha}
        const double c = gamma(sigma + 1.0) / gamma(sigma + 1.0 - alpha);
        for (std::size_t n = 1; n < n_pts; ++n) {
            residual[k][n] = c * std::pow(static_cast<double>(n), sigma - alpha) - approx[n];
        }
    }
    const auto lu = detail::power_basis_matrix(exponents);
    const auto w = detail::starting_weights(lu, residual, n_pts);
    for (std::size_t n = 1; n < n_pts; ++n) {
        double corr = 0.0;
        for (std::size_t q = 0; q < exponents.size(); ++q) {
            corr += w[n][q] * (f[q + 1] - f[0]);
        }
        g[n] += corr;
    }
    return g;
}

}  // namespace

FracOrder::FracOrder(double alpha) : alpha_(alpha), n_(0) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        std::ostringstream os;
        os << "FracOrder: order must be a non-negative finite number, got " << alpha;
        throw DomainError(os.str());
    }
    n_ = is_integer() ? static_cast<int>(alpha) : static_cast<int>(std::floor(alpha)) + 1;
}

bool FracOrder::is_integer() const noexcept { return alpha_ == std::floor(alpha_); }

SampledFunction rl_integral(const SampledFunction& f, FracOrder order) {
    const double alpha = order.alpha();
    if (!(alpha > 0.0)) {
        throw DomainError("rl_integral: order must be positive");
    }
    auto g = detail::rl_trapezoid(f.values(), alpha);
    const double scale = std::pow(f.h(), alpha);
    for (double& v : g) {
        v *= scale;
    }
    return SampledFunction(f.t0(), f.h(), std::move(g));
}

SampledFunction caputo_derivative(const SampledFunction& f, FracOrder order) {
    const double alpha = order.alpha();
    if (!(alpha > 0.0) || alpha > 2.0) {
        std::ostringstream os;
        os << "caputo_derivative: order must lie in (0, 2], got " << alpha;
        throw DomainError(os.str());
    }
    std::vector<double> g;
    if (alpha == 1.0) {
        g = first_derivative_index_units(f.values());
    } else if (alpha == 2.0) {
        g = second_derivative_index_units(f.values());
    } else {
        g = caputo_corrected(f.values(), alpha);
    }
    const double scale = std::pow(f.h(), -alpha);
    for (double& v : g) {
        v *= scale;
    }
    return SampledFunction(f.t0(), f.h(), std::move(g));
}

}  // namespace fracgrowth
