#include "fracgrowth/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "fracgrowth/error.hpp"
#include "fracgrowth/figures.hpp"
#include "fracgrowth/fode_solver.hpp"
#include "fracgrowth/frac_ops.hpp"
#include "fracgrowth/special_fn.hpp"

namespace fracgrowth {
namespace {

std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

CheckResult check_ml(double tol) {
    double worst_exp = 0.0;
    for (int i = -100; i <= 100; ++i) {
        const double z = 0.1 * i;
        worst_exp = std::max(worst_exp, std::abs(mittag_leffler(1.0, 1.0, z) - std::exp(z)) / std::max(1.0, std::exp(z)));
    }
    double worst_cosh = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double z = 0.25 * i;
        const double c = std::cosh(std::sqrt(z));
        worst_cosh = std::max(worst_cosh, std::abs(mittag_leffler(2.0, 1.0, z) - c) / c);
    }
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> a_dist(1e-3, 2.0);
    std::uniform_real_distribution<double> b_dist(0.05, 3.0);
    double worst_zero = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double beta = b_dist(rng);
        worst_zero = std::max(worst_zero, std::abs(mittag_leffler(a_dist(rng), beta, 0.0) * gamma(beta) - 1.0));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const bool ok = worst_exp <= tol && worst_cosh <= tol && worst_zero <= eps;
    return {"ml", ok,
            "exp " + sci(worst_exp) + ", cosh " + sci(worst_cosh) + " (tol " + sci(tol) + "); E(0) Gamma(beta) - 1 " +
                sci(worst_zero)};
}

CheckResult check_inverse() {
    const double h = 1e-3;
    const std::vector<std::function<double(double)>> fs{
        [](double) { return 1.0; }, [](double t) { return t; }, [](double t) { return t * t; },
        [](double t) { return std::sin(t); }};
    double worst = 0.0;
    for (double a : {0.3, 0.7, 1.5}) {
        for (const auto& fn : fs) {
            const auto f = SampledFunction::sample(0.0, h, 2001, fn);
            const auto back = caputo_derivative(rl_integral(f, FracOrder(a)), FracOrder(a));
            double err = 0.0;
            for (std::size_t i = 5; i < f.size(); ++i) {
                err = std::max(err, std::abs(back[i] - f[i]));
            }
            worst = std::max(worst, err / f.max_abs());
        }
    }
    return {"inverse", worst <= 5e-3, "max relative error " + sci(worst) + " (tol 5.000e-03)"};
}

CheckResult check_reduction() {
    const auto grid = UniformGrid::over(kFigureHorizon, kFigureStep);
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
        const auto p = figure_setup(n).params(1.0);
        const auto a = memory_solution(p, grid);
        const auto b = classical_solution(p, grid);
        for (std::size_t i = 0; i < a.values.size(); ++i) {
            worst = std::max(worst, std::abs(a.values[i] - b.values[i]) / std::abs(b.values[i]));
        }
    }
    return {"reduction", worst <= 1e-9, "max relative deviation " + sci(worst) + " (tol 1.000e-09)"};
}

CheckResult check_oracle() {
    bool ok = true;
    std::ostringstream detail;
    // Figure 3 carries Figure 1's economics plus the Y'(0) needed above order 1.
    for (int n : {3, 4}) {
        for (double a : {0.4, 0.9, 1.1}) {
            const auto p = figure_setup(n).params(a);
            const auto eq = to_fode(p);
            const auto error_at = [&](std::size_t steps) {
                const auto num = solve_linear(eq, 10.0, steps);
                const auto exact = memory_solution(p, num.grid);
                double e = 0.0;
                for (std::size_t i = 0; i < num.values.size(); ++i) {
                    e = std::max(e, std::abs(num.values[i] - exact.values[i]));
                }
                return e;
            };
            const double e2000 = error_at(2000);
            const double order = std::log2(error_at(1000) / e2000);
            const bool pass = e2000 <= 1e-3 && order >= 0.7 * std::min(2.0, 1.0 + a);
            ok = ok && pass;
            detail << "fig" << n << " a=" << a << ": err " << sci(e2000) << " order " << std::round(order * 100) / 100
                   << (pass ? "" : " FAIL") << "; ";
        }
    }
    return {"oracle", ok, detail.str()};
}

CheckResult check_figures() {
    std::ostringstream detail;
    bool ok = true;

    // Figures 1 and 2: below the memoryless path after the early crossover, and ordered at T.
    for (int n : {1, 2}) {
        const auto d = compute_figure(n);
        const double tc = d.crossover_time.value_or(0.0);
        bool below = d.crossover_time.has_value();
        for (std::size_t i = 1; i < d.graph1.values.size(); ++i) {
            if (d.graph1.time(i) > tc + d.step) {
                below = below && d.graph2.values[i] < d.graph1.values[i];
            }
        }
        ok = ok && below;
        detail << "fig" << n << " slower after t=" << std::round(tc * 1e4) / 1e4 << (below ? "" : " FAIL") << "; ";
    }
    {
        const auto d = compute_figure(1);
        const auto d2 = compute_figure(2);
        const bool ordered = d2.graph2.values.back() < d.graph2.values.back() &&
                             d.graph2.values.back() < d.graph1.values.back();
        ok = ok && ordered;
        detail << "Y_0.4(T) < Y_0.9(T) < Y_1(T)" << (ordered ? "" : " FAIL") << "; ";
    }
    {
        const auto d = compute_figure(3);
        const bool faster = d.graph2.values.back() > d.graph1.values.back();
        ok = ok && faster;
        detail << "fig3 Y_1.1(T) > Y_1(T)" << (faster ? "" : " FAIL") << "; ";
    }
    {
        const auto d = compute_figure(4);
        bool decreasing = true;
        for (std::size_t i = 1; i < d.graph1.values.size(); ++i) {
            decreasing = decreasing && d.graph1.values[i] < d.graph1.values[i - 1];
        }
        const bool grows = d.graph2.values.back() > d.graph2.values.front();
        const bool downturn = regime_classify(d.setup.params(1.0)) == Regime::Downturn;
        ok = ok && decreasing && grows && downturn;
        detail << "fig4 classical decreasing/memory grows/downturn " << decreasing << grows << downturn;
    }
    return {"figures", ok, detail.str()};
}

CheckResult check_regime() {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> alpha(0.2, 1.0);
    std::uniform_real_distribution<double> margin(0.05, 1.0);
    std::uniform_real_distribution<double> rate(0.1, 2.0);
    std::uniform_real_distribution<double> ratio(2.0, 20.0);
    std::uniform_real_distribution<double> pos(0.1, 5.0);
    std::uniform_real_distribution<double> offset(-5.0, 5.0);
    int agree = 0;
    const int trials = 20;
    for (int k = 0; k < trials; ++k) {
        const double b = pos(rng);
        const double pa = margin(rng);
        auto p = params_from_margin(pa, b, rate(rng), ratio(rng), alpha(rng), 0.0);
        p.y0 = b / pa + offset(rng);
        const auto tr = memory_solution(p, UniformGrid{10.0 / 1999.0, 1999});
        bool nondecreasing = true;
        for (std::size_t i = 1; i < tr.values.size(); ++i) {
            nondecreasing = nondecreasing && tr.values[i] >= tr.values[i - 1];
        }
        agree += nondecreasing == (p.y0 >= equilibrium_output(p)) ? 1 : 0;
    }
    return {"regime", agree == trials, std::to_string(agree) + "/" + std::to_string(trials) + " parameter sets agree"};
}

}  // namespace

const std::vector<std::string>& validation_checks() {
    static const std::vector<std::string> names{"ml", "inverse", "reduction", "oracle", "figures", "regime"};
    return names;
}

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
    const auto& names = validation_checks();
    if (options.only && std::find(names.begin(), names.end(), *options.only) == names.end()) {
        std::string known;
        for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
        throw ConfigError("only", "unknown check '" + *options.only + "' (known: " + known + ")");
    }
    std::vector<CheckResult> results;
    const auto selected = [&](const char* name) { return !options.only || *options.only == name; };
    const auto guarded = [&](const char* name, const std::function<CheckResult()>& fn) {
        if (!selected(name)) return;
        try {
            results.push_back(fn());
        } catch (const std::exception& e) {
            results.push_back({name, false, std::string("threw: ") + e.what()});
        }
    };
    guarded("ml", [&] { return check_ml(options.ml_tolerance); });
    guarded("inverse", check_inverse);
    guarded("reduction", check_reduction);
    guarded("oracle", check_oracle);
    guarded("figures", check_figures);
    guarded("regime", check_regime);
    return results;
}

}  // namespace fracgrowth
