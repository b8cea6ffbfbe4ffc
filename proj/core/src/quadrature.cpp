#include "quadrature.hpp"

#include <cmath>

#include "fracgrowth/special_fn.hpp"

namespace fracgrowth::detail {

double forward_power_difference(double k, double p) {
    if (k == 0.0) {
        return 1.0;
    }
    return std::pow(k, p) * std::expm1(p * std::log1p(1.0 / k));
}

double second_power_difference(double k, double p) {
    if (k == 1.0) {
        return std::pow(2.0, p) - 2.0;
    }
    return std::pow(k, p) * (std::expm1(p * std::log1p(1.0 / k)) + std::expm1(p * std::log1p(-1.0 / k)));
}

TrapezoidWeights trapezoid_weights(double alpha, std::size_t nodes) {
    const double p = alpha + 1.0;
    const double norm = 1.0 / gamma(alpha + 2.0);
    TrapezoidWeights w;
    w.first.assign(nodes, 0.0);
    w.interior.assign(nodes, 0.0);
    w.last = norm;
    for (std::size_t n = 1; n < nodes; ++n) {
        const double nd = static_cast<double>(n);
        // (n-1)^{alpha+1} - (n - alpha - 1) n^alpha
        const double a0 = (n == 1) ? alpha : std::pow(nd, p) * (std::expm1(p * std::log1p(-1.0 / nd)) + p / nd);
        w.first[n] = norm * a0;
        w.interior[n] = norm * second_power_difference(nd, p);
    }
    return w;
}

std::vector<double> rectangle_weights(double alpha, std::size_t nodes) {
    const double norm = 1.0 / gamma(alpha + 1.0);
    std::vector<double> r(nodes, 0.0);
    for (std::size_t k = 0; k < nodes; ++k) {
        r[k] = norm * forward_power_difference(static_cast<double>(k), alpha);
    }
    return r;
}

std::vector<double> rl_trapezoid(std::span<const double> f, double alpha) {
    const std::size_t n_pts = f.size();
    const auto w = trapezoid_weights(alpha, n_pts);
    std::vector<double> g(n_pts, 0.0);
    for (std::size_t n = 1; n < n_pts; ++n) {
        double s = w.first[n] * f[0] + w.last * f[n];
        for (std::size_t j = 1; j < n; ++j) {
            s += w.interior[n - j] * f[j];
        }
        g[n] = s;
    }
    return g;
}

std::vector<double> rl_rectangle(std::span<const double> f, double alpha) {
    const std::size_t n_pts = f.size();
    const auto r = rectangle_weights(alpha, n_pts);
    std::vector<double> g(n_pts, 0.0);
    for (std::size_t n = 1; n < n_pts; ++n) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s += r[n - j - 1] * f[j];
        }
        g[n] = s;
    }
    return g;
}

}  // namespace fracgrowth::detail
