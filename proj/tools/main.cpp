// fracgrowth: scenario runs, reference figures and self-validation.
//
// Exit codes: 0 success, 1 failed check or numeric overflow, 2 usage or config error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "fracgrowth/error.hpp"
#include "fracgrowth/figures.hpp"
#include "fracgrowth/output.hpp"
#include "fracgrowth/scenario.hpp"
#include "fracgrowth/validation.hpp"
#include "fracgrowth/version.hpp"

namespace fs = std::filesystem;
using namespace fracgrowth;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RunArgs {
    std::string config;
    std::optional<double> horizon;
    std::optional<double> step;
    std::optional<double> alpha;
    std::optional<std::string> out;
    bool echo = false;
};

int cmd_run(const RunArgs& args) {
    auto config = load_config(args.config);
    if (args.horizon) config.horizon = *args.horizon;
    if (args.step) config.step = *args.step;
    if (args.alpha) {
        config.params.alpha = *args.alpha;
        config.alpha_sweep.clear();
    }
    if (args.out) config.output_path = *args.out;
    config.validate();
    if (args.echo) {
        std::cout << format_config(config);
        return kOk;
    }
    std::vector<std::string> warnings;
    const auto files = run_scenario(config, &warnings);
    for (const auto& w : warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    for (const auto& f : files) {
        std::cout << f.string() << '\n';
    }
    return kOk;
}

int cmd_figure(int n, const std::string& out, std::optional<double> horizon, std::optional<double> step) {
    const auto files = reproduce_figure(n, out, horizon.value_or(kFigureHorizon), step.value_or(kFigureStep));
    for (const auto& f : files) {
        std::cout << f.string() << '\n';
    }
    return kOk;
}

int cmd_validate(const ValidationOptions& opts) {
    const auto results = run_validation(opts);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        all = all && r.passed;
    }
    return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Natural growth of output with power-law memory"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Evaluate a scenario config and write one CSV per trajectory");
    run->add_option("config", run_args.config, "Scenario config file")->required();
    run->add_option("--horizon", run_args.horizon, "Override the horizon T");
    run->add_option("--step", run_args.step, "Override the step h");
    run->add_option("--alpha", run_args.alpha, "Override the memory order (drops alpha_sweep)");
    run->add_option("--out", run_args.out, "Override the output directory");
    run->add_flag("--echo", run_args.echo, "Print the resolved config instead of running");

    int figure = 0;
    std::string figure_out = ".";
    std::optional<double> figure_horizon;
    std::optional<double> figure_step;
    auto* fig = app.add_subcommand("reproduce-figure", "Write the data of a reference figure");
    fig->add_option("figure", figure, "Figure number")->required()->check(CLI::Range(1, 4));
    fig->add_option("--out", figure_out, "Output directory")->capture_default_str();
    fig->add_option("--horizon", figure_horizon, "Horizon T (default 20)");
    fig->add_option("--step", figure_step, "Step h (default 0.01)");

    ValidationOptions vopts;
    std::string only;
    auto* val = app.add_subcommand("validate", "Run the cross-module self-check");
    val->add_option("--only", only, "Run a single check")->check(CLI::IsMember(validation_checks()));
    val->add_option("--ml-tolerance", vopts.ml_tolerance, "Relative tolerance of the Mittag-Leffler identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run) {
            return cmd_run(run_args);
        }
        if (*fig) {
            return cmd_figure(figure, figure_out, figure_horizon, figure_step);
        }
        if (!only.empty()) {
            vopts.only = only;
        }
        return cmd_validate(vopts);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const OverflowError& e) {
        std::cerr << "overflow: " << e.what() << " (t = " << format_shortest(e.time()) << ")\n";
        return kFailed;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
}
