#include "fracgrowth/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "fracgrowth/error.hpp"
#include "fracgrowth/fode_solver.hpp"
#include "fracgrowth/output.hpp"

namespace fracgrowth {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (!item.empty()) {
            out.push_back(item);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        s.remove_prefix(comma + 1);
    }
    return out;
}

double parse_number(const std::string& key, std::string_view text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw ConfigError(key, "not a number: '" + std::string(text) + "'");
    }
    if (!std::isfinite(v)) {
        throw ConfigError(key, "must be finite");
    }
    return v;
}

bool parse_bool(const std::string& key, std::string_view text) {
    if (text == "true" || text == "yes" || text == "1") return true;
    if (text == "false" || text == "no" || text == "0") return false;
    throw ConfigError(key, "expected true or false, got '" + std::string(text) + "'");
}

const std::set<std::string, std::less<>> kKnownKeys{
    "price", "marginal_cost", "p_minus_a", "fixed_cost", "investment_rate", "investment_ratio", "alpha",
    "y0",    "y1",            "horizon",   "step",       "variants",        "alpha_sweep",      "output",
    "gnuplot",
};

std::string format_list(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_shortest(xs[i]);
    }
    return out;
}

}  // namespace

std::vector<double> ScenarioConfig::orders() const {
    return alpha_sweep.empty() ? std::vector<double>{params.alpha} : alpha_sweep;
}

ModelParams ScenarioConfig::params_for(double alpha) const { return params.with_alpha(alpha, params.y1); }

void ScenarioConfig::validate() const {
    const auto& p = params;
    if (!(p.price > 0.0)) throw ConfigError("price", "must be positive");
    if (p.marginal_cost < 0.0) throw ConfigError("marginal_cost", "must be non-negative");
    if (p.price == p.marginal_cost) throw ConfigError("marginal_cost", "must differ from price");
    if (p.fixed_cost < 0.0) throw ConfigError("fixed_cost", "must be non-negative");
    if (!(p.investment_rate > 0.0)) throw ConfigError("investment_rate", "must be positive");
    if (!(p.investment_ratio > 0.0)) throw ConfigError("investment_ratio", "must be positive");
    if (!(p.alpha > 0.0) || p.alpha > 2.0) throw ConfigError("alpha", "must lie in (0, 2]");
    for (double a : alpha_sweep) {
        if (!(a > 0.0) || a > 2.0) {
            throw ConfigError("alpha_sweep", "every order must lie in (0, 2], got " + format_shortest(a));
        }
    }
    const auto ords = orders();
    const bool needs_slope = std::any_of(ords.begin(), ords.end(), [](double a) { return a > 1.0; });
    if (needs_slope && !p.y1) throw ConfigError("y1", "required when an order exceeds 1");

    if (!(horizon > 0.0)) throw ConfigError("horizon", "must be positive");
    if (!(step > 0.0)) throw ConfigError("step", "must be positive");
    if (step > horizon) throw ConfigError("step", "exceeds the horizon");
    if (horizon / step > kMaxGridSteps) {
        throw ConfigError("step", "horizon / step exceeds " + format_shortest(kMaxGridSteps));
    }
    UniformGrid grid;
    try {
        grid = UniformGrid::over(horizon, step);
    } catch (const DomainError& e) {
        throw ConfigError("step", e.what());
    }
    if (variants.empty()) throw ConfigError("variants", "at least one variant is required");
    const bool numeric =
        std::find(variants.begin(), variants.end(), Variant::MemoryNumeric) != variants.end();
    if (numeric && grid.steps < 16) throw ConfigError("step", "memory-numeric needs at least 16 steps");
    if (output_path.empty()) throw ConfigError("output", "must not be empty");

    for (double a : ords) {
        try {
            params_for(a).validate();
        } catch (const DomainError& e) {
            throw ConfigError("", e.what());
        }
    }
}

ScenarioConfig parse_config(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));
        if (!kKnownKeys.contains(key)) {
            throw ConfigError(key, "unknown key (line " + std::to_string(line_no) + ")");
        }
        if (value.empty()) {
            throw ConfigError(key, "missing value");
        }
        if (!kv.emplace(key, std::string(value)).second) {
            throw ConfigError(key, "given more than once");
        }
    }

    const auto number = [&](const std::string& key) -> std::optional<double> {
        const auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return parse_number(key, it->second);
    };
    const auto required = [&](const std::string& key) {
        const auto v = number(key);
        if (!v) throw ConfigError(key, "required");
        return *v;
    };

    ScenarioConfig c;
    auto& p = c.params;
    if (const auto pa = number("p_minus_a")) {
        if (kv.contains("price") || kv.contains("marginal_cost")) {
            throw ConfigError("p_minus_a", "give either p_minus_a or price and marginal_cost, not both");
        }
        p.price = *pa;
        p.marginal_cost = 0.0;
    } else {
        if (!kv.contains("price")) throw ConfigError("price", "required (or give p_minus_a)");
        p.price = required("price");
        p.marginal_cost = required("marginal_cost");
    }
    p.fixed_cost = required("fixed_cost");
    p.investment_rate = required("investment_rate");
    p.investment_ratio = required("investment_ratio");
    p.alpha = required("alpha");
    p.y0 = required("y0");
    p.y1 = number("y1");
    if (const auto v = number("horizon")) c.horizon = *v;
    if (const auto v = number("step")) c.step = *v;

    if (const auto it = kv.find("variants"); it != kv.end()) {
        c.variants.clear();
        for (const auto item : split_list(it->second)) {
            const auto v = parse_variant(item);
            if (!v) throw ConfigError("variants", "unknown variant '" + std::string(item) + "'");
            if (std::find(c.variants.begin(), c.variants.end(), *v) != c.variants.end()) {
                throw ConfigError("variants", "variant '" + std::string(item) + "' listed twice");
            }
            c.variants.push_back(*v);
        }
    }
    if (const auto it = kv.find("alpha_sweep"); it != kv.end()) {
        for (const auto item : split_list(it->second)) {
            c.alpha_sweep.push_back(parse_number("alpha_sweep", item));
        }
    }
    if (const auto it = kv.find("output"); it != kv.end()) c.output_path = it->second;
    if (const auto it = kv.find("gnuplot"); it != kv.end()) c.gnuplot = parse_bool("gnuplot", it->second);
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("", "cannot read config file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string format_config(const ScenarioConfig& c) {
    const auto& p = c.params;
    std::ostringstream os;
    // a = 0 is exactly what p_minus_a parses to.
    if (p.marginal_cost == 0.0) {
        os << "p_minus_a = " << format_shortest(p.price) << '\n';
    } else {
        os << "price = " << format_shortest(p.price) << '\n'
           << "marginal_cost = " << format_shortest(p.marginal_cost) << '\n';
    }
    os << "fixed_cost = " << format_shortest(p.fixed_cost) << '\n'
       << "investment_rate = " << format_shortest(p.investment_rate) << '\n'
       << "investment_ratio = " << format_shortest(p.investment_ratio) << '\n'
       << "alpha = " << format_shortest(p.alpha) << '\n'
       << "y0 = " << format_shortest(p.y0) << '\n';
    if (p.y1) {
        os << "y1 = " << format_shortest(*p.y1) << '\n';
    }
    os << "horizon = " << format_shortest(c.horizon) << '\n' << "step = " << format_shortest(c.step) << '\n';
    os << "variants = ";
    for (std::size_t i = 0; i < c.variants.size(); ++i) {
        os << (i > 0 ? ", " : "") << to_string(c.variants[i]);
    }
    os << '\n';
    if (!c.alpha_sweep.empty()) {
        os << "alpha_sweep = " << format_list(c.alpha_sweep) << '\n';
    }
    os << "output = " << c.output_path << '\n' << "gnuplot = " << (c.gnuplot ? "true" : "false") << '\n';
    return os.str();
}

ScenarioResult compute_scenario(const ScenarioConfig& config) {
    config.validate();
    const auto grid = UniformGrid::over(config.horizon, config.step);
    const auto wants = [&](Variant v) {
        return std::find(config.variants.begin(), config.variants.end(), v) != config.variants.end();
    };

    ScenarioResult result;
    result.warnings = config.params.warnings();
    const auto ords = config.orders();
    if (config.params.y1 && std::none_of(ords.begin(), ords.end(), [](double a) { return a > 1.0; })) {
        result.warnings.emplace_back("y1 is ignored: no order exceeds 1");
    }
    if (wants(Variant::Classical)) {
        result.trajectories.push_back(classical_solution(config.params_for(1.0), grid));
    }

    std::vector<std::future<std::vector<Trajectory>>> jobs;
    for (double a : config.orders()) {
        jobs.push_back(std::async(std::launch::async, [&config, &grid, &wants, a] {
            const auto p = config.params_for(a);
            std::vector<Trajectory> out;
            if (wants(Variant::MemoryClosedForm)) {
                out.push_back(memory_solution(p, grid));
            }
            if (wants(Variant::MemoryNumeric)) {
                out.push_back(solve_linear(to_fode(p), grid.horizon(), grid.steps));
            }
            return out;
        }));
    }
    // Collect every job before rethrowing so no task outlives `config`.
    std::exception_ptr failure;
    for (auto& job : jobs) {
        try {
            auto part = job.get();
            std::move(part.begin(), part.end(), std::back_inserter(result.trajectories));
        } catch (...) {
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return result;
}

std::string trajectory_file_name(const Trajectory& tr) {
    if (tr.variant == Variant::Classical) {
        return "classical.csv";
    }
    return std::string(to_string(tr.variant)) + "_alpha-" + format_shortest(tr.alpha) + ".csv";
}

std::vector<std::filesystem::path> run_scenario(const ScenarioConfig& config, std::vector<std::string>* warnings) {
    const auto result = compute_scenario(config);
    if (warnings) {
        *warnings = result.warnings;
    }
    const std::filesystem::path dir(config.output_path);
    std::vector<std::filesystem::path> written;
    std::vector<PlotSeries> series;
    for (const auto& tr : result.trajectories) {
        const auto name = trajectory_file_name(tr);
        write_file_atomic(dir / name, format_csv(tr));
        written.push_back(dir / name);
        series.push_back({name, std::string(to_string(tr.variant)) + ", alpha = " + format_shortest(tr.alpha)});
    }
    if (config.gnuplot) {
        write_file_atomic(dir / "plot.gp", gnuplot_script("Output Y(t)", series));
        written.push_back(dir / "plot.gp");
    }
    return written;
}

}  // namespace fracgrowth
