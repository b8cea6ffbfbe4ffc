#pragma once

// Starting-weight corrections for convolution quadratures on uniform grids.
//
// A base scheme Q_n[f] is augmented with sum_q W[n][q] (f_{q+1} - f_0), where the weights make
// the corrected scheme exact for a handful of power functions t^sigma that the base scheme
// resolves poorly near t = 0. All quantities are in grid-index units (h = 1).

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fracgrowth::detail {

/// LU factorisation with partial pivoting of a small dense matrix.
class SmallLU {
public:
    explicit SmallLU(std::vector<std::vector<double>> a) : lu_(std::move(a)), perm_(lu_.size()) {
        const std::size_t m = lu_.size();
        for (std::size_t i = 0; i < m; ++i) {
            perm_[i] = i;
        }
        for (std::size_t c = 0; c < m; ++c) {
            std::size_t pivot = c;
            for (std::size_t r = c + 1; r < m; ++r) {
                if (std::abs(lu_[r][c]) > std::abs(lu_[pivot][c])) {
                    pivot = r;
                }
            }
            if (lu_[pivot][c] == 0.0) {
                throw std::runtime_error("SmallLU: singular matrix");
            }
            std::swap(lu_[c], lu_[pivot]);
            std::swap(perm_[c], perm_[pivot]);
            for (std::size_t r = c + 1; r < m; ++r) {
                const double f = lu_[r][c] / lu_[c][c];
                lu_[r][c] = f;
                for (std::size_t k = c + 1; k < m; ++k) {
                    lu_[r][k] -= f * lu_[c][k];
                }
            }
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return lu_.size(); }

    [[nodiscard]] std::vector<double> solve(std::span<const double> b) const {
        const std::size_t m = lu_.size();
        std::vector<double> x(m);
        for (std::size_t i = 0; i < m; ++i) {
            double s = b[perm_[i]];
            for (std::size_t k = 0; k < i; ++k) {
                s -= lu_[i][k] * x[k];
            }
            x[i] = s;
        }
        for (std::size_t i = m; i-- > 0;) {
            double s = x[i];
            for (std::size_t k = i + 1; k < m; ++k) {
                s -= lu_[i][k] * x[k];
            }
            x[i] = s / lu_[i][i];
        }
        return x;
    }

private:
    std::vector<std::vector<double>> lu_;
    std::vector<std::size_t> perm_;
};

/// Matrix M[k][q] = (q + 1)^{sigma_k}: basis k evaluated at node q + 1, minus its (zero) value at 0.
inline SmallLU power_basis_matrix(std::span<const double> exponents) {
    const std::size_t m = exponents.size();
    std::vector<std::vector<double>> a(m, std::vector<double>(m));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t q = 0; q < m; ++q) {
            a[k][q] = std::pow(static_cast<double>(q + 1), exponents[k]);
        }
    }
    return SmallLU(std::move(a));
}

/// Appends `sigma` unless it lies within `min_gap` of an exponent already present.
inline void add_exponent(std::vector<double>& exponents, double sigma, double min_gap = 0.05) {
    for (double e : exponents) {
        if (std::abs(e - sigma) < min_gap) {
            return;
        }
    }
    exponents.push_back(sigma);
}

/// Weights W[n][q] for every node n, given per-basis residuals residual[k][n] =
/// (exact - base scheme) applied to t^{sigma_k} at node n.
inline std::vector<std::vector<double>> starting_weights(const SmallLU& basis,
                                                         const std::vector<std::vector<double>>& residual,
                                                         std::size_t nodes) {
    const std::size_t m = basis.size();
    std::vector<std::vector<double>> w(nodes, std::vector<double>(m, 0.0));
    std::vector<double> rhs(m);
    for (std::size_t n = 0; n < nodes; ++n) {
        for (std::size_t k = 0; k < m; ++k) {
            rhs[k] = residual[k][n];
        }
        w[n] = basis.solve(rhs);
    }
    return w;
}

}  // namespace fracgrowth::detail
