#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fracgrowth/error.hpp"
#include "fracgrowth/special_fn.hpp"

namespace fracgrowth {
namespace ml_detail {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLogDoubleMax = 709.782712893384;

// Relative error accepted from a route before the next one is tried.
constexpr double kAcceptRelError = 1e-13;

// Scale |z|^{1/alpha} beyond which the asymptotic expansion is tried first.
constexpr double kAsymptoticScale = 30.0;

// Beyond this scale the binary128 series loses all digits to cancellation.
constexpr double kExtendedScaleLimit = 70.0;

constexpr int kMaxSeriesTerms = 100000;
constexpr int kMaxAsymptoticTerms = 2000;

// Neumaier-compensated running sum.
template <typename Real>
struct CompensatedSum {
    Real sum = 0;
    Real carry = 0;

    void add(Real v) {
        const Real t = sum + v;
        const Real abs_sum = sum < 0 ? -sum : sum;
        const Real abs_v = v < 0 ? -v : v;
        if (abs_sum >= abs_v) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }

    [[nodiscard]] Real value() const { return sum + carry; }
};

// z^k / Gamma(alpha k + beta), sign included.
double series_term(double log_abs_z, bool negative, int k, double alpha, double beta) {
    const double arg = alpha * k + beta;
    const double log_mag = k * log_abs_z - log_gamma(arg);
    const double mag = std::exp(log_mag);
    return (negative && (k % 2 == 1)) ? -mag : mag;
}

}  // namespace

double scale(const MLQuery& q) { return std::pow(std::abs(q.z), 1.0 / q.alpha); }

Evaluation series(const MLQuery& q) {
    Evaluation out;
    if (q.z == 0.0) {
        out.value = reciprocal_gamma(q.beta);
        out.converged = true;
        return out;
    }
    const double abs_z = std::abs(q.z);
    const double log_abs_z = std::log(abs_z);
    const bool negative = q.z < 0.0;

    CompensatedSum<double> sum;
    double abs_sum = 0.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        const double arg = q.alpha * k + q.beta;
        double term = 0.0;
        const double zk = std::pow(abs_z, k);
        if (arg < 170.0 && std::isfinite(zk) && zk > 0.0) {
            term = zk / gamma(arg);
            if (negative && (k % 2 == 1)) {
                term = -term;
            }
        } else {
            term = series_term(log_abs_z, negative, k, q.alpha, q.beta);
        }
        if (!std::isfinite(term)) {
            return out;
        }
        sum.add(term);
        const double mag = std::abs(term);
        abs_sum += mag;

        // Past the peak the terms decay at least geometrically with ratio mag/prev_mag,
        // which bounds the neglected tail.
        const double ratio = mag / prev_mag;
        prev_mag = mag;
        if (k > 0 && ratio < 1.0) {
            const double tail = mag * ratio / (1.0 - ratio);
            if (tail <= 0.25 * kEps * std::abs(sum.value()) || mag == 0.0) {
                out.value = sum.value();
                out.abs_error = 4.0 * kEps * abs_sum + tail;
                out.converged = std::isfinite(out.value);
                return out;
            }
        }
    }
    out.value = sum.value();
    out.abs_error = std::numeric_limits<double>::infinity();
    return out;
}

Evaluation extended_series(const MLQuery& q) {
    using quad = __float128;
    Evaluation out;
    if (q.z == 0.0) {
        out.value = reciprocal_gamma(q.beta);
        out.converged = true;
        return out;
    }
    const quad abs_z = static_cast<quad>(std::abs(q.z));
    const quad log_abs_z = logq(abs_z);
    const bool negative = q.z < 0.0;
    const quad alpha = static_cast<quad>(q.alpha);
    const quad beta = static_cast<quad>(q.beta);
    const quad eps = FLT128_EPSILON;

    CompensatedSum<quad> sum;
    quad abs_sum = 0;
    quad prev_mag = FLT128_MAX;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        const quad mag = expq(static_cast<quad>(k) * log_abs_z - lgammaq(alpha * k + beta));
        sum.add((negative && (k % 2 == 1)) ? -mag : mag);
        abs_sum += mag;
        const quad ratio = mag / prev_mag;
        prev_mag = mag;
        if (k > 0 && ratio < 1) {
            const quad tail = mag * ratio / (1 - ratio);
            const quad s = fabsq(sum.value());
            if (tail <= 1e-3Q * eps * s || mag == 0) {
                const quad err = 8 * eps * abs_sum + tail;
                out.value = static_cast<double>(sum.value());
                // Rounding the binary128 result to double costs half an ulp.
                out.abs_error = static_cast<double>(err) + 0.5 * kEps * std::abs(out.value);
                out.converged = std::isfinite(out.value);
                return out;
            }
        }
    }
    out.value = static_cast<double>(sum.value());
    out.abs_error = std::numeric_limits<double>::infinity();
    return out;
}

Evaluation asymptotic(const MLQuery& q) {
    Evaluation out;
    if (q.z == 0.0) {
        return out;
    }
    const double alpha = q.alpha;
    const double beta = q.beta;
    const double abs_z = std::abs(q.z);
    const double log_abs_z = std::log(abs_z);
    const double x = scale(q);
    const double log_x = log_abs_z / alpha;
    const int side = q.z < 0.0 ? 1 : 0;  // arg z = side * pi

    // Exponential contributions (1/alpha) w^{1-beta} exp(w), w = x exp(i (arg z + 2 pi m) / alpha),
    // for every branch m with |arg z + 2 pi m| < alpha pi; branches exactly on the boundary
    // (integer alpha) carry half weight.
    double exp_part = 0.0;
    double excluded_mag = 0.0;
    for (int m = -2; m <= 2; ++m) {
        const int n = std::abs(side + 2 * m);
        double weight = 0.0;
        if (static_cast<double>(n) < alpha) {
            weight = 1.0;
        } else if (static_cast<double>(n) == alpha) {
            weight = 0.5;
        }
        const double phi = std::numbers::pi * (side + 2 * m) / alpha;
        const double log_mag = x * std::cos(phi) + (1.0 - beta) * log_x - std::log(alpha);
        if (weight == 0.0) {
            // A branch just past the cut |arg w| = pi switches off smoothly, not abruptly;
            // its magnitude bounds what the sharp cutoff misses.
            if (n < 1.25 * alpha) {
                excluded_mag = std::max(excluded_mag, std::exp(std::min(log_mag, kLogDoubleMax)));
            }
            continue;
        }
        if (log_mag + std::log(weight) > kLogDoubleMax) {
            std::ostringstream os;
            os << "mittag_leffler: E_{" << alpha << "," << beta << "}(" << q.z
               << ") exceeds the double range";
            throw OverflowError(os.str());
        }
        exp_part += weight * std::exp(log_mag) * std::cos((1.0 - beta) * phi + x * std::sin(phi));
    }

    // Algebraic part -sum_{k>=1} z^{-k} / Gamma(beta - alpha k), truncated at its smallest term.
    // With integer alpha and beta every term with beta - alpha k <= 0 vanishes exactly.
    const bool finite_algebraic = alpha == std::floor(alpha) && beta == std::floor(beta);
    CompensatedSum<double> alg;
    double last_envelope = std::numeric_limits<double>::infinity();
    double truncation = 0.0;
    bool truncated = false;
    for (int k = 1; k <= kMaxAsymptoticTerms; ++k) {
        const double y = beta - alpha * k;
        if (finite_algebraic && y <= 0.0) {
            truncation = 0.0;
            truncated = true;
            break;
        }
        double log_env = 0.0;  // log of |z^{-k}| times the Gamma magnitude, ignoring sin(pi y)
        double sign = 1.0;
        double sin_factor = 1.0;
        if (y > 0.0) {
            log_env = -k * log_abs_z - log_gamma(y);
        } else {
            sin_factor = sin_pi(y);
            log_env = -k * log_abs_z + log_gamma(1.0 - y) - std::log(std::numbers::pi);
        }
        const double envelope = std::exp(log_env);
        // The expansion only diverges once beta - alpha k is negative; stop at its smallest term.
        if (y <= 0.0) {
            if (envelope > last_envelope) {
                truncation = last_envelope;
                truncated = true;
                break;
            }
            last_envelope = envelope;
        }
        if (sin_factor < 0.0) {
            sign = -1.0;
        }
        double term = sign * envelope * std::abs(sin_factor);
        if (q.z < 0.0 && (k % 2 == 1)) {
            term = -term;
        }
        alg.add(-term);
        const double total = std::abs(exp_part + alg.value());
        if (envelope <= 0.25 * kEps * total) {
            truncation = envelope;
            truncated = true;
            break;
        }
    }
    if (!truncated) {
        truncation = last_envelope;
    }
    out.value = exp_part + alg.value();
    out.abs_error = truncation + excluded_mag + 4.0 * kEps * (std::abs(exp_part) + std::abs(alg.value()));
    out.converged = std::isfinite(out.value);
    return out;
}

}  // namespace ml_detail

namespace {

struct Routed {
    double value;
    MLBranch branch;
};

bool acceptable(const ml_detail::Evaluation& e) {
    return e.converged && e.abs_error <= ml_detail::kAcceptRelError * std::abs(e.value);
}

double relative_error(const ml_detail::Evaluation& e) {
    if (!e.converged) {
        return std::numeric_limits<double>::infinity();
    }
    return e.abs_error / std::max(std::abs(e.value), std::numeric_limits<double>::min());
}

Routed evaluate(const MLQuery& q) {
    q.validate();
    if (q.z == 0.0) {
        return {reciprocal_gamma(q.beta), MLBranch::Zero};
    }
    const double x = ml_detail::scale(q);

    if (q.z > 0.0) {
        // All terms positive: no cancellation, so the double series is exact to rounding
        // wherever it converges. Large scales go to the exponential asymptotics, which
        // also detect overflow.
        if (x <= ml_detail::kAsymptoticScale) {
            const auto s = ml_detail::series(q);
            if (s.converged) {
                return {s.value, MLBranch::Series};
            }
        }
        const auto a = ml_detail::asymptotic(q);
        return {a.value, MLBranch::Asymptotic};
    }

    // Negative z: alternating series. Try the cheapest route that certifies its accuracy.
    ml_detail::Evaluation best;
    MLBranch best_branch = MLBranch::Series;
    auto consider = [&](const ml_detail::Evaluation& e, MLBranch branch) {
        if (relative_error(e) < relative_error(best)) {
            best = e;
            best_branch = branch;
        }
    };

    if (x >= ml_detail::kAsymptoticScale) {
        const auto a = ml_detail::asymptotic(q);
        if (acceptable(a)) {
            return {a.value, MLBranch::Asymptotic};
        }
        consider(a, MLBranch::Asymptotic);
    } else {
        const auto s = ml_detail::series(q);
        if (acceptable(s)) {
            return {s.value, MLBranch::Series};
        }
        consider(s, MLBranch::Series);
    }
    if (x <= ml_detail::kExtendedScaleLimit) {
        const auto e = ml_detail::extended_series(q);
        if (acceptable(e)) {
            return {e.value, MLBranch::ExtendedSeries};
        }
        consider(e, MLBranch::ExtendedSeries);
    }
    if (x < ml_detail::kAsymptoticScale) {
        consider(ml_detail::asymptotic(q), MLBranch::Asymptotic);
    }
    if (!best.converged) {
        std::ostringstream os;
        os << "mittag_leffler: no evaluation route converged for alpha=" << q.alpha
           << ", beta=" << q.beta << ", z=" << q.z;
        throw DomainError(os.str());
    }
    return {best.value, best_branch};
}

}  // namespace

double mittag_leffler(const MLQuery& q) { return evaluate(q).value; }

MLBranch select_branch(const MLQuery& q) { return evaluate(q).branch; }

}  // namespace fracgrowth
