#pragma once

// Gamma and two-parameter Mittag-Leffler functions on real arguments.

#include <string_view>

namespace fracgrowth {

/// Gamma function for x > 0 (Lanczos approximation, relative error below 1e-13 on (0, 50]).
/// Throws DomainError for x <= 0 or non-finite x, OverflowError past x ~ 171.6.
[[nodiscard]] double gamma(double x);

/// log Gamma(x) for x > 0.
[[nodiscard]] double log_gamma(double x);

/// 1 / Gamma(x) for any finite real x; exactly zero at the poles x = 0, -1, -2, ...
[[nodiscard]] double reciprocal_gamma(double x);

/// sin(pi * x) with exact zeros at the integers.
[[nodiscard]] double sin_pi(double x);

/// Argument triple of E_{alpha,beta}(z).
struct MLQuery {
    double alpha = 1.0;
    double beta = 1.0;
    double z = 0.0;

    /// Throws DomainError unless 0 < alpha <= 2, beta > 0 and z finite.
    void validate() const;
};

/// Evaluation strategy chosen for a Mittag-Leffler query.
enum class MLBranch {
    Zero,                ///< z == 0, closed form 1/Gamma(beta)
    Series,              ///< Taylor series in double precision
    ExtendedSeries,      ///< Taylor series in binary128, for cancelling negative-z sums
    Asymptotic,          ///< exponential + algebraic asymptotic expansion
};

[[nodiscard]] std::string_view to_string(MLBranch branch) noexcept;

/// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).
///
/// Relative accuracy is about 1e-12 or better over alpha in (0, 2], beta in (0, 3],
/// |z| <= 100. Throws DomainError on invalid queries and OverflowError when the
/// value exceeds the double range (large positive z with small alpha).
[[nodiscard]] double mittag_leffler(const MLQuery& q);

[[nodiscard]] inline double mittag_leffler(double alpha, double beta, double z) {
    return mittag_leffler(MLQuery{alpha, beta, z});
}

/// Branch that mittag_leffler() would use for this query.
[[nodiscard]] MLBranch select_branch(const MLQuery& q);

namespace ml_detail {

/// Result of one evaluation route together with its own error estimate.
struct Evaluation {
    double value = 0.0;
    double abs_error = 0.0;  ///< estimated absolute error of value
    bool converged = false;  ///< route produced a usable answer
};

/// Term-by-term Taylor series in double precision.
[[nodiscard]] Evaluation series(const MLQuery& q);

/// Taylor series summed in binary128.
[[nodiscard]] Evaluation extended_series(const MLQuery& q);

/// Large-|z| expansion: exponential contributions plus the optimally truncated
/// algebraic series. Valid for |z|^{1/alpha} large.
[[nodiscard]] Evaluation asymptotic(const MLQuery& q);

/// |z|^{1/alpha}; the natural scale of the series peak and of the asymptotic error.
[[nodiscard]] double scale(const MLQuery& q);

}  // namespace ml_detail

}  // namespace fracgrowth
