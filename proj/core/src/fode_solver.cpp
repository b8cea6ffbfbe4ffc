#include "fracgrowth/fode_solver.hpp"

#include <cmath>
#include <sstream>

#include "fracgrowth/error.hpp"
#include "fracgrowth/special_fn.hpp"
#include "quadrature.hpp"
#include "starting_weights.hpp"

namespace fracgrowth {
namespace {

[[noreturn]] void overflow_at(double t, const char* what) {
    std::ostringstream os;
    os << what << ": solution overflows at t = " << t;
    throw OverflowError(os.str(), t);
}

// Exponents of the singular terms t^{k alpha} < 1 carried by solutions of order alpha < 1,
// plus t itself so the corrections leave linear data untouched.
std::vector<double> correction_exponents(double alpha) {
    std::vector<double> e;
    if (alpha >= 1.0) {
        return e;
    }
    for (int k = 1; k * alpha < 1.0 - 1e-9; ++k) {
        detail::add_exponent(e, k * alpha);
    }
    std::vector<double> out;
    for (double s : e) {
        if (std::abs(s - 1.0) >= 0.05) {
            out.push_back(s);
        }
    }
    if (!out.empty()) {
        out.push_back(1.0);
    }
    return out;
}

struct Corrections {
    std::size_t count = 0;
    std::vector<std::vector<double>> corrector;  ///< [n][q]
    std::vector<std::vector<double>> predictor;  ///< [n][q]
};

Corrections build_corrections(double alpha, std::size_t nodes) {
    Corrections c;
    const auto exponents = correction_exponents(alpha);
    if (exponents.empty() || nodes <= exponents.size() + 1) {
        return c;
    }
    const std::size_t m = exponents.size();
    std::vector<std::vector<double>> res_trap(m, std::vector<double>(nodes, 0.0));
    std::vector<std::vector<double>> res_rect(m, std::vector<double>(nodes, 0.0));
    std::vector<double> basis(nodes);
    for (std::size_t k = 0; k < m; ++k) {
        const double sigma = exponents[k];
        for (std::size_t j = 0; j < nodes; ++j) {
            basis[j] = std::pow(static_cast<double>(j), sigma);
        }
        // I^alpha t^sigma = Gamma(sigma+1) / Gamma(sigma+alpha+1) t^{sigma+alpha}
        const double coef = gamma(sigma + 1.0) / gamma(sigma + alpha + 1.0);
        const auto trap = detail::rl_trapezoid(basis, alpha);
        const bool singular = sigma < 1.0;
        const auto rect = singular ? detail::rl_rectangle(basis, alpha) : std::vector<double>{};
        for (std::size_t n = 1; n < nodes; ++n) {
            const double exact = coef * std::pow(static_cast<double>(n), sigma + alpha);
            res_trap[k][n] = exact - trap[n];
            if (singular) {
                res_rect[k][n] = exact - rect[n];
            }
        }
    }
    const auto lu = detail::power_basis_matrix(exponents);
    c.count = m;
    c.corrector = detail::starting_weights(lu, res_trap, nodes);
    c.predictor = detail::starting_weights(lu, res_rect, nodes);
    return c;
}

}  // namespace

Forcing Forcing::constant(double value) {
    Forcing f;
    f.constant_ = value;
    return f;
}

Forcing Forcing::function(std::function<double(double)> fn) {
    if (!fn) {
        throw DomainError("Forcing: empty callable");
    }
    Forcing f;
    f.fn_ = std::move(fn);
    return f;
}

double Forcing::operator()(double t) const { return constant_ ? *constant_ : fn_(t); }

int LinearFODE::order_count() const noexcept { return alpha > 1.0 ? 2 : 1; }

void LinearFODE::validate() const {
    if (!(alpha > 0.0) || alpha > 2.0) {
        std::ostringstream os;
        os << "LinearFODE: alpha must lie in (0, 2], got " << alpha;
        throw DomainError(os.str());
    }
    if (!std::isfinite(lambda)) {
        throw DomainError("LinearFODE: lambda must be finite");
    }
    if (forcing.is_constant() && !std::isfinite(*forcing.constant_value())) {
        throw DomainError("LinearFODE: forcing must be finite");
    }
    if (static_cast<int>(init.size()) != order_count()) {
        std::ostringstream os;
        os << "LinearFODE: order " << alpha << " needs " << order_count() << " initial value(s), got "
           << init.size();
        throw DomainError(os.str());
    }
    for (double c : init) {
        if (!std::isfinite(c)) {
            throw DomainError("LinearFODE: initial values must be finite");
        }
    }
}

LinearFODE to_fode(const ModelParams& p) {
    p.validate();
    LinearFODE eq;
    eq.alpha = p.alpha;
    eq.lambda = lambda_of(p);
    eq.forcing = Forcing::constant(-p.investment_rate * p.fixed_cost / p.investment_ratio);
    eq.init = {p.y0};
    if (p.alpha > 1.0) {
        eq.init.push_back(*p.y1);
    }
    return eq;
}

Trajectory solve_linear(const LinearFODE& eq, double horizon, std::size_t steps) {
    eq.validate();
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw DomainError("solve_linear: horizon must be positive and finite");
    }
    if (steps < 16) {
        throw DomainError("solve_linear: at least 16 steps are required");
    }
    const double alpha = eq.alpha;
    const double lambda = eq.lambda;
    const double h = horizon / static_cast<double>(steps);
    const std::size_t nodes = steps + 1;
    const double ha = std::pow(h, alpha);

    UniformGrid grid{h, steps};
    auto taylor = [&](double t) {
        double s = eq.init[0];
        if (eq.init.size() > 1) {
            s += eq.init[1] * t;
        }
        return s;
    };

    const auto trap = detail::trapezoid_weights(alpha, nodes);
    const auto rect = detail::rectangle_weights(alpha, nodes);
    const auto corr = build_corrections(alpha, nodes);
    const std::size_t m = corr.count;

    std::vector<double> y(nodes, 0.0);
    std::vector<double> rhs_f(nodes);  // f(t_j)
    std::vector<double> F(nodes, 0.0);  // lambda y_j + f(t_j)
    for (std::size_t j = 0; j < nodes; ++j) {
        rhs_f[j] = eq.forcing(grid.time(j));
    }
    y[0] = eq.init[0];
    F[0] = lambda * y[0] + rhs_f[0];

    auto correction = [&](const std::vector<double>& w) {
        double s = 0.0;
        for (std::size_t q = 0; q < m; ++q) {
            s += w[q] * (F[q + 1] - F[0]);
        }
        return s;
    };

    // The first m nodes are coupled through the starting weights; the equation is linear,
    // so they are solved together exactly.
    if (m > 0) {
        std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
        std::vector<double> b(m, 0.0);
        for (std::size_t n = 1; n <= m; ++n) {
            const auto& w = corr.corrector[n];
            auto& row = a[n - 1];
            row[n - 1] += 1.0;
            double known = trap.first[n] * F[0];
            for (std::size_t j = 1; j <= n; ++j) {
                const double wj = (j == n) ? trap.last : trap.interior[n - j];
                row[j - 1] -= ha * wj * lambda;
                known += wj * rhs_f[j];
            }
            for (std::size_t q = 0; q < m; ++q) {
                row[q] -= ha * w[q] * lambda;
                known += w[q] * (rhs_f[q + 1] - F[0]);
            }
            b[n - 1] = taylor(grid.time(n)) + ha * known;
        }
        const auto sol = detail::SmallLU(std::move(a)).solve(b);
        for (std::size_t n = 1; n <= m; ++n) {
            y[n] = sol[n - 1];
            F[n] = lambda * y[n] + rhs_f[n];
        }
    }

    for (std::size_t n = m + 1; n < nodes; ++n) {
        const double t = grid.time(n);
        double hist_rect = 0.0;
        double hist_trap = trap.first[n] * F[0];
        for (std::size_t j = 0; j < n; ++j) {
            hist_rect += rect[n - j - 1] * F[j];
        }
        for (std::size_t j = 1; j < n; ++j) {
            hist_trap += trap.interior[n - j] * F[j];
        }
        double pred_corr = 0.0;
        double corr_corr = 0.0;
        if (m > 0) {
            pred_corr = correction(corr.predictor[n]);
            corr_corr = correction(corr.corrector[n]);
        }
        const double base = taylor(t);
        const double predicted = base + ha * (hist_rect + pred_corr);
        const double corrected = base + ha * (hist_trap + trap.last * (lambda * predicted + rhs_f[n]) + corr_corr);
        if (!std::isfinite(corrected)) {
            overflow_at(t, "solve_linear");
        }
        y[n] = corrected;
        F[n] = lambda * corrected + rhs_f[n];
    }
    for (std::size_t n = 1; n <= m; ++n) {
        if (!std::isfinite(y[n])) {
            overflow_at(grid.time(n), "solve_linear");
        }
    }
    return Trajectory{grid, std::move(y), alpha, Variant::MemoryNumeric};
}

Trajectory closed_form_solution(const LinearFODE& eq, const UniformGrid& grid) {
    eq.validate();
    if (!eq.forcing.is_constant()) {
        throw UnsupportedError("closed_form_solution: only constant forcing has a closed form here");
    }
    const double f = *eq.forcing.constant_value();
    const double alpha = eq.alpha;
    Trajectory tr{grid, std::vector<double>(grid.points()), alpha, Variant::MemoryClosedForm};
    for (std::size_t i = 0; i < grid.points(); ++i) {
        const double t = grid.time(i);
        const double ta = std::pow(t, alpha);
        const double z = eq.lambda * ta;
        double y = 0.0;
        try {
            y = f * ta * mittag_leffler(alpha, alpha + 1.0, z);
            double tk = 1.0;
            for (std::size_t k = 0; k < eq.init.size(); ++k) {
                y += eq.init[k] * tk * mittag_leffler(alpha, static_cast<double>(k) + 1.0, z);
                tk *= t;
            }
        } catch (const OverflowError&) {
            overflow_at(t, "closed_form_solution");
        }
        if (!std::isfinite(y)) {
            overflow_at(t, "closed_form_solution");
        }
        tr.values[i] = y;
    }
    return tr;
}

}  // namespace fracgrowth
