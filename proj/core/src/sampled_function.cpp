#include "fracgrowth/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracgrowth/error.hpp"

namespace fracgrowth {

SampledFunction::SampledFunction(double t0, double h, std::vector<double> values)
    : t0_(t0), h_(h), values_(std::move(values)) {
    if (!std::isfinite(t0_)) {
        throw DomainError("SampledFunction: t0 must be finite");
    }
    if (!(h_ > 0.0) || !std::isfinite(h_)) {
        throw DomainError("SampledFunction: step h must be positive and finite");
    }
    if (values_.size() < 2) {
        throw DomainError("SampledFunction: at least two samples are required");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            std::ostringstream os;
            os << "SampledFunction: sample " << i << " is not finite";
            throw DomainError(os.str());
        }
    }
}

SampledFunction SampledFunction::from_samples(std::span<const double> times, std::span<const double> values) {
    if (times.size() != values.size()) {
        throw DomainError("SampledFunction: times and values differ in length");
    }
    if (times.size() < 2) {
        throw DomainError("SampledFunction: at least two samples are required");
    }
    const double h = times[1] - times[0];
    const double tol = 1e-9 * std::max(std::abs(h), std::abs(times.back()));
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double expected = times[0] + static_cast<double>(i) * h;
        if (std::abs(times[i] - expected) > tol) {
            std::ostringstream os;
            os << "SampledFunction: grid is not uniform at index " << i;
            throw DomainError(os.str());
        }
    }
    return SampledFunction(times[0], h, std::vector<double>(values.begin(), values.end()));
}

double SampledFunction::max_abs() const noexcept {
    double m = 0.0;
    for (double v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

SampledFunction SampledFunction::scaled(double factor) const {
    std::vector<double> v(values_);
    for (double& x : v) {
        x *= factor;
    }
    return SampledFunction(t0_, h_, std::move(v));
}

}  // namespace fracgrowth
