#include "fracgrowth/special_fn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fracgrowth/error.hpp"

namespace fracgrowth {
namespace {

// Lanczos approximation with g = 607/128 and 15 coefficients (Godfrey's set),
// good to roughly one ulp of log Gamma for all x > 0.
constexpr double kLanczosShift = 5.2421875;  // g + 1/2
constexpr double kLanczosLead = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoef = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5,
};
constexpr double kSqrtTwoPi = 2.5066282746310005024;

// Largest x with Gamma(x) < DBL_MAX.
constexpr double kGammaMaxArg = 171.61447887182298;

double lanczos_series(double x) {
    double ser = kLanczosLead;
    double y = x;
    for (double c : kLanczosCoef) {
        ser += c / ++y;
    }
    return ser;
}

// (n-1)! for integer arguments; exact in double up to 22!.
constexpr std::array<double, 23> kFactorial = [] {
    std::array<double, 23> f{};
    f[0] = 1.0;
    for (std::size_t i = 1; i < f.size(); ++i) {
        f[i] = f[i - 1] * static_cast<double>(i);
    }
    return f;
}();

[[noreturn]] void throw_domain(const char* fn, double x) {
    std::ostringstream os;
    os << fn << ": argument must be a positive finite number, got " << x;
    throw DomainError(os.str());
}

}  // namespace

double gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw_domain("gamma", x);
    }
    if (x > kGammaMaxArg) {
        std::ostringstream os;
        os << "gamma: Gamma(" << x << ") exceeds the double range";
        throw OverflowError(os.str());
    }
    if (x == std::floor(x) && x <= static_cast<double>(kFactorial.size())) {
        return kFactorial[static_cast<std::size_t>(x) - 1];
    }
    const double base = x + kLanczosShift;
    // Split the power so that base^(x+1/2) cannot overflow before the exponential damps it.
    const double half_power = std::pow(base, 0.5 * (x + 0.5));
    const double value = (half_power * std::exp(-base)) * half_power * (kSqrtTwoPi * lanczos_series(x) / x);
    if (!std::isfinite(value)) {
        std::ostringstream os;
        os << "gamma: Gamma(" << x << ") exceeds the double range";
        throw OverflowError(os.str());
    }
    return value;
}

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw_domain("log_gamma", x);
    }
    if (x == 1.0 || x == 2.0) {
        return 0.0;
    }
    if (x < 20.0) {
        return std::log(gamma(x));
    }
    const double base = x + kLanczosShift;
    return (x + 0.5) * std::log(base) - base + std::log(kSqrtTwoPi * lanczos_series(x) / x);
}

double sin_pi(double x) {
    if (!std::isfinite(x)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double r = std::fmod(x, 2.0);
    if (r < 0.0) {
        r += 2.0;
    }
    if (r == 0.0 || r == 1.0) {
        return 0.0;
    }
    constexpr double pi = std::numbers::pi;
    if (r < 0.5) {
        return std::sin(pi * r);
    }
    if (r < 1.5) {
        return -std::sin(pi * (r - 1.0));
    }
    return std::sin(pi * (r - 2.0));
}

double reciprocal_gamma(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("reciprocal_gamma: argument must be finite");
    }
    if (x > 0.0) {
        if (x > kGammaMaxArg) {
            return std::exp(-log_gamma(x));
        }
        return 1.0 / gamma(x);
    }
    if (x == std::floor(x)) {
        return 0.0;
    }
    // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi.
    const double s = sin_pi(x);
    const double reflected = 1.0 - x;
    if (reflected > kGammaMaxArg) {
        const double mag = std::exp(log_gamma(reflected) + std::log(std::abs(s)) - std::log(std::numbers::pi));
        return std::copysign(mag, s);
    }
    return s * gamma(reflected) / std::numbers::pi;
}

std::string_view to_string(MLBranch branch) noexcept {
    switch (branch) {
        case MLBranch::Zero: return "zero";
        case MLBranch::Series: return "series";
        case MLBranch::ExtendedSeries: return "extended-series";
        case MLBranch::Asymptotic: return "asymptotic";
    }
    return "unknown";
}

void MLQuery::validate() const {
    if (!(alpha > 0.0) || !(alpha <= 2.0)) {
        std::ostringstream os;
        os << "mittag_leffler: alpha must lie in (0, 2], got " << alpha;
        throw DomainError(os.str());
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        std::ostringstream os;
        os << "mittag_leffler: beta must be positive and finite, got " << beta;
        throw DomainError(os.str());
    }
    if (!std::isfinite(z)) {
        throw DomainError("mittag_leffler: z must be finite");
    }
}

}  // namespace fracgrowth
