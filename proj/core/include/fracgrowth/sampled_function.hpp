#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace fracgrowth {

/// Real samples f(t0 + i h) on a uniform grid with at least two nodes.
class SampledFunction {
public:
    /// Throws DomainError unless h > 0, values.size() >= 2 and every sample is finite.
    SampledFunction(double t0, double h, std::vector<double> values);

    /// Samples `f` at t0 + i h for i = 0 .. n-1.
    template <typename F>
    [[nodiscard]] static SampledFunction sample(double t0, double h, std::size_t n, F&& f) {
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = f(t0 + static_cast<double>(i) * h);
        }
        return SampledFunction(t0, h, std::move(v));
    }

    /// Builds from explicit (time, value) pairs; rejects grids that are not uniform.
    [[nodiscard]] static SampledFunction from_samples(std::span<const double> times,
                                                      std::span<const double> values);

    [[nodiscard]] double t0() const noexcept { return t0_; }
    [[nodiscard]] double h() const noexcept { return h_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double time(std::size_t i) const noexcept {
        return t0_ + static_cast<double>(i) * h_;
    }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }

    [[nodiscard]] double max_abs() const noexcept;

    /// Same grid, values multiplied by `factor`.
    [[nodiscard]] SampledFunction scaled(double factor) const;

private:
    double t0_;
    double h_;
    std::vector<double> values_;
};

}  // namespace fracgrowth
