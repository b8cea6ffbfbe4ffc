#include "fracgrowth/figures.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "fracgrowth/error.hpp"
#include "fracgrowth/output.hpp"
#include "fracgrowth/scenario.hpp"
#include "fracgrowth/version.hpp"

namespace fracgrowth {
namespace {

const std::array<FigureSetup, 4> kFigures{{
    {1, "memory slows growth", 0.2, 2.0, 20.0, 30.0, 12.0, std::nullopt, 0.9},
    {2, "memory slows growth", 0.2, 2.0, 20.0, 30.0, 12.0, std::nullopt, 0.4},
    {3, "memory speeds up growth", 0.2, 2.0, 20.0, 30.0, 12.0, 0.1, 1.1},
    {4, "growth instead of downturn", 0.2, 4.0, 20.0, 35.0, 12.0, 10.0, 1.1},
}};

std::string graph_file(int graph, double alpha) {
    return "graph" + std::to_string(graph) + "_alpha-" + format_shortest(alpha) + ".csv";
}

std::string config_file(int n) { return "figure" + std::to_string(n) + ".conf"; }

}  // namespace

ModelParams FigureSetup::params(double alpha) const {
    return params_from_margin(p_minus_a, fixed_cost, investment_rate, investment_ratio, alpha, y0,
                              alpha > 1.0 ? y1 : std::nullopt);
}

const FigureSetup& figure_setup(int n) {
    if (n < 1 || n > static_cast<int>(kFigures.size())) {
        throw DomainError("figure number must be 1, 2, 3 or 4, got " + std::to_string(n));
    }
    return kFigures[static_cast<std::size_t>(n - 1)];
}

std::optional<double> crossover_time(const Trajectory& a, const Trajectory& b) {
    const std::size_t n = std::min(a.values.size(), b.values.size());
    double prev = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double d = b.values[i] - a.values[i];
        if (prev != 0.0 && d != 0.0 && std::signbit(d) != std::signbit(prev)) {
            const double t0 = a.time(i - 1);
            return t0 + a.grid.h * prev / (prev - d);
        }
        if (d != 0.0) {
            prev = d;
        }
    }
    return std::nullopt;
}

FigureData compute_figure(int n, double horizon, double step) {
    FigureData data;
    data.setup = figure_setup(n);
    data.horizon = horizon;
    data.step = step;
    const auto grid = UniformGrid::over(horizon, step);
    data.graph1 = classical_solution(data.setup.params(1.0), grid);
    data.graph2 = memory_solution(data.setup.params(data.setup.memory_alpha), grid);
    data.crossover_time = crossover_time(data.graph1, data.graph2);
    return data;
}

std::string figure_manifest(const FigureData& d) {
    const auto& s = d.setup;
    std::ostringstream os;
    os << "figure = " << s.number << '\n'
       << "title = " << s.title << '\n'
       << "p_minus_a = " << format_shortest(s.p_minus_a) << '\n'
       << "fixed_cost = " << format_shortest(s.fixed_cost) << '\n'
       << "investment_rate = " << format_shortest(s.investment_rate) << '\n'
       << "investment_ratio = " << format_shortest(s.investment_ratio) << '\n'
       << "y0 = " << format_shortest(s.y0) << '\n';
    if (s.y1) {
        os << "y1 = " << format_shortest(*s.y1) << '\n';
    }
    os << "alpha_graph1 = 1\n"
       << "alpha_graph2 = " << format_shortest(s.memory_alpha) << '\n'
       << "horizon = " << format_shortest(d.horizon) << '\n'
       << "step = " << format_shortest(d.step) << '\n'
       << "graph1 = " << graph_file(1, 1.0) << '\n'
       << "graph2 = " << graph_file(2, s.memory_alpha) << '\n'
       << "config = " << config_file(s.number) << '\n'
       << "crossover_time = " << (d.crossover_time ? format_full(*d.crossover_time) : std::string("none")) << '\n'
       << "tool_version = " << version() << '\n';
    return os.str();
}

std::vector<std::filesystem::path> reproduce_figure(int n, const std::filesystem::path& out_dir, double horizon,
                                                    double step) {
    const auto data = compute_figure(n, horizon, step);
    const auto& s = data.setup;
    const auto dir = out_dir / ("figure" + std::to_string(n));

    ScenarioConfig config;
    config.params = s.params(s.memory_alpha);
    config.horizon = horizon;
    config.step = step;
    config.variants = {Variant::Classical, Variant::MemoryClosedForm};
    config.output_path = ".";
    config.gnuplot = true;

    const std::vector<std::pair<std::filesystem::path, std::string>> files{
        {dir / graph_file(1, 1.0), format_csv(data.graph1)},
        {dir / graph_file(2, s.memory_alpha), format_csv(data.graph2)},
        {dir / config_file(n), format_config(config)},
        {dir / "manifest.txt", figure_manifest(data)},
        {dir / "plot.gp", gnuplot_script("Figure " + std::to_string(n) + ": " + std::string(s.title),
                                         {{graph_file(1, 1.0), "alpha = 1"},
                                          {graph_file(2, s.memory_alpha), "alpha = " + format_shortest(s.memory_alpha)}})},
    };
    std::vector<std::filesystem::path> written;
    for (const auto& [path, content] : files) {
        write_file_atomic(path, content);
        written.push_back(path);
    }
    return written;
}

}  // namespace fracgrowth
