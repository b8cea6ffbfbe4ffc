#include "fracgrowth/growth_model.hpp"

#include <cmath>
#include <sstream>

#include "fracgrowth/error.hpp"
#include "fracgrowth/frac_ops.hpp"
#include "fracgrowth/special_fn.hpp"

namespace fracgrowth {
namespace {

[[noreturn]] void invalid(const std::string& what) { throw DomainError("ModelParams: " + what); }

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        invalid(std::string(name) + " must be finite");
    }
}

[[noreturn]] void overflow_at(double t, const char* what) {
    std::ostringstream os;
    os << what << ": output overflows at t = " << t;
    throw OverflowError(os.str(), t);
}

}  // namespace

void ModelParams::validate() const {
    require_finite(price, "price");
    require_finite(marginal_cost, "marginal_cost");
    require_finite(fixed_cost, "fixed_cost");
    require_finite(investment_rate, "investment_rate");
    require_finite(investment_ratio, "investment_ratio");
    require_finite(alpha, "alpha");
    require_finite(y0, "y0");
    if (!(price > 0.0)) invalid("price P must be positive");
    if (marginal_cost < 0.0) invalid("marginal_cost a must be non-negative");
    if (fixed_cost < 0.0) invalid("fixed_cost b must be non-negative");
    if (price == marginal_cost) invalid("price P must differ from marginal_cost a (equilibrium b/(P-a) undefined)");
    if (!(investment_rate > 0.0)) invalid("investment_rate m must be positive");
    if (!(investment_ratio > 0.0)) invalid("investment_ratio v must be positive");
    if (!(alpha > 0.0) || alpha > 2.0) invalid("alpha must lie in (0, 2]");
    if (alpha > 1.0 && !y1) invalid("y1 = Y'(0) is required when alpha > 1");
    if (alpha <= 1.0 && y1) invalid("y1 = Y'(0) is only meaningful when alpha > 1");
    if (y1) require_finite(*y1, "y1");
}

std::vector<std::string> ModelParams::warnings() const {
    std::vector<std::string> out;
    if (investment_rate >= 1.0) {
        std::ostringstream os;
        os << "investment_rate m = " << investment_rate
           << " is outside (0, 1): more than the whole profit is reinvested";
        out.push_back(os.str());
    }
    return out;
}

ModelParams ModelParams::with_alpha(double new_alpha, std::optional<double> slope) const {
    ModelParams p = *this;
    p.alpha = new_alpha;
    p.y1 = new_alpha > 1.0 ? slope : std::nullopt;
    return p;
}

ModelParams params_from_margin(double p_minus_a, double fixed_cost, double investment_rate, double investment_ratio,
                               double alpha, double y0, std::optional<double> y1) {
    ModelParams p;
    p.price = p_minus_a;
    p.marginal_cost = 0.0;
    p.fixed_cost = fixed_cost;
    p.investment_rate = investment_rate;
    p.investment_ratio = investment_ratio;
    p.alpha = alpha;
    p.y0 = y0;
    p.y1 = y1;
    return p;
}

double lambda_of(const ModelParams& p) { return p.investment_rate * p.margin() / p.investment_ratio; }

double equilibrium_output(const ModelParams& p) { return p.fixed_cost / p.margin(); }

double costs(const ModelParams& p, double y) { return p.marginal_cost * y + p.fixed_cost; }

double net_investment(const ModelParams& p, double y) { return p.investment_rate * (p.price * y - costs(p, y)); }

UniformGrid UniformGrid::over(double horizon, double h) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw DomainError("UniformGrid: horizon must be positive and finite");
    }
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("UniformGrid: step must be positive and finite");
    }
    if (h > horizon) {
        throw DomainError("UniformGrid: step exceeds the horizon");
    }
    const double ratio = horizon / h;
    const double steps = std::round(ratio);
    if (std::abs(ratio - steps) > 1e-9 * steps) {
        std::ostringstream os;
        os << "UniformGrid: horizon " << horizon << " is not a whole number of steps of " << h;
        throw DomainError(os.str());
    }
    return UniformGrid{h, static_cast<std::size_t>(steps)};
}

std::string_view to_string(Variant v) noexcept {
    switch (v) {
        case Variant::Classical: return "classical";
        case Variant::MemoryClosedForm: return "memory-closed-form";
        case Variant::MemoryNumeric: return "memory-numeric";
    }
    return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
    for (Variant v : {Variant::Classical, Variant::MemoryClosedForm, Variant::MemoryNumeric}) {
        if (name == to_string(v)) {
            return v;
        }
    }
    return std::nullopt;
}

SampledFunction Trajectory::as_sampled() const { return SampledFunction(0.0, grid.h, values); }

Trajectory classical_solution(const ModelParams& p, const UniformGrid& grid) {
    ModelParams base = p.with_alpha(1.0, std::nullopt);
    base.validate();
    const double lambda = lambda_of(p);
    const double y_star = equilibrium_output(p);
    Trajectory tr{grid, std::vector<double>(grid.points()), 1.0, Variant::Classical};
    for (std::size_t i = 0; i < grid.points(); ++i) {
        const double t = grid.time(i);
        const double growth = std::exp(lambda * t);
        const double y = y_star + (p.y0 - y_star) * growth;
        if (!std::isfinite(growth) || !std::isfinite(y)) {
            overflow_at(t, "classical_solution");
        }
        tr.values[i] = y;
    }
    tr.values[0] = p.y0;
    return tr;
}

Trajectory memory_solution(const ModelParams& p, const UniformGrid& grid) {
    p.validate();
    const double alpha = p.alpha;
    const double lambda = lambda_of(p);
    const double y_star = equilibrium_output(p);
    const double slope = p.y1.value_or(0.0);
    Trajectory tr{grid, std::vector<double>(grid.points()), alpha, Variant::MemoryClosedForm};
    for (std::size_t i = 0; i < grid.points(); ++i) {
        const double t = grid.time(i);
        const double z = lambda * std::pow(t, alpha);
        double y = 0.0;
        try {
            y = y_star + (p.y0 - y_star) * mittag_leffler(alpha, 1.0, z);
            if (alpha > 1.0) {
                y += slope * t * mittag_leffler(alpha, 2.0, z);
            }
        } catch (const OverflowError&) {
            overflow_at(t, "memory_solution");
        }
        if (!std::isfinite(y)) {
            overflow_at(t, "memory_solution");
        }
        tr.values[i] = y;
    }
    return tr;
}

SampledFunction multiplier_with_memory(const SampledFunction& investment, double alpha, double multiplier) {
    if (!(multiplier != 0.0) || !std::isfinite(multiplier)) {
        throw DomainError("multiplier_with_memory: multiplier M must be finite and non-zero");
    }
    if (alpha == 0.0) {
        return investment.scaled(multiplier);
    }
    return rl_integral(investment, FracOrder(alpha)).scaled(multiplier);
}

SampledFunction accelerator_with_memory(const SampledFunction& output, double alpha, double investment_ratio) {
    if (!(investment_ratio > 0.0) || !std::isfinite(investment_ratio)) {
        throw DomainError("accelerator_with_memory: investment ratio v must be positive");
    }
    if (!(alpha > 0.0) || alpha > 2.0) {
        throw DomainError("accelerator_with_memory: alpha must lie in (0, 2]");
    }
    return caputo_derivative(output, FracOrder(alpha)).scaled(investment_ratio);
}

std::string_view to_string(Regime r) noexcept {
    switch (r) {
        case Regime::Growth: return "growth";
        case Regime::Downturn: return "downturn";
        case Regime::Equilibrium: return "equilibrium";
    }
    return "unknown";
}

Regime regime_classify(const ModelParams& p) {
    p.validate();
    if (p.alpha > 1.0) {
        throw UnsupportedError("regime_classify: no growth/downturn criterion for alpha > 1");
    }
    if (!(lambda_of(p) > 0.0)) {
        throw UnsupportedError("regime_classify: criterion requires lambda = m(P-a)/v > 0");
    }
    const double gap = p.y0 - equilibrium_output(p);
    if (gap > 0.0) return Regime::Growth;
    if (gap < 0.0) return Regime::Downturn;
    return Regime::Equilibrium;
}

}  // namespace fracgrowth
