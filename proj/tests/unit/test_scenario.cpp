#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fracgrowth/error.hpp"
#include "fracgrowth/figures.hpp"
#include "fracgrowth/output.hpp"
#include "fracgrowth/scenario.hpp"
#include "fracgrowth/validation.hpp"

using namespace fracgrowth;
namespace fs = std::filesystem;

namespace {

const char* const kFigure1 = R"(
# comment line
p_minus_a = 0.2
fixed_cost = 2
investment_rate = 20    # trailing comment
investment_ratio = 30
alpha = 0.9
y0 = 12
)";

std::string key_of(const std::string& text) {
    try {
        (void)parse_config(text).validate();
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<none>";
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("fracgrowth_test_" + name);
    fs::remove_all(dir);
    return dir;
}

ScenarioConfig random_config(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);
    ScenarioConfig c;
    c.params.price = 0.1 + 3.0 * u(rng);
    c.params.marginal_cost = coin(rng) ? 0.0 : c.params.price * u(rng) * 0.9;
    c.params.fixed_cost = 10.0 * u(rng);
    c.params.investment_rate = 0.01 + 30.0 * u(rng);
    c.params.investment_ratio = 0.5 + 50.0 * u(rng);
    c.params.alpha = 0.01 + 1.99 * u(rng);
    c.params.y0 = -20.0 + 60.0 * u(rng);
    if (coin(rng)) {
        c.alpha_sweep = {0.1 + u(rng), 1.0 + u(rng)};
    }
    const auto orders = c.orders();
    if (std::any_of(orders.begin(), orders.end(), [](double a) { return a > 1.0; })) {
        c.params.y1 = -5.0 + 10.0 * u(rng);
    }
    c.horizon = 2.0 + std::floor(40.0 * u(rng));
    c.step = coin(rng) ? 0.01 : 0.125;
    std::vector<Variant> all{Variant::Classical, Variant::MemoryClosedForm, Variant::MemoryNumeric};
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(1 + static_cast<std::size_t>(coin(rng)) + static_cast<std::size_t>(coin(rng)));
    c.variants = all;
    c.output_path = "runs/case-" + std::to_string(rng() % 1000);
    c.gnuplot = coin(rng) == 1;
    return c;
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_shortest(0.9) == "0.9");
    CHECK(format_shortest(20.0) == "20");
    CHECK(format_full(0.1) == "0.10000000000000001");
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng) / (1.0 + i);
        CHECK(std::stod(format_full(v)) == v);
        CHECK(std::stod(format_shortest(v)) == v);
    }
}

TEST_CASE("parse_config: caption-style config") {
    const auto c = parse_config(kFigure1);
    CHECK(c.params.price == 0.2);
    CHECK(c.params.marginal_cost == 0.0);
    CHECK(c.params.fixed_cost == 2.0);
    CHECK(c.params.investment_rate == 20.0);
    CHECK(c.params.alpha == 0.9);
    CHECK_FALSE(c.params.y1.has_value());
    CHECK(c.horizon == 20.0);
    CHECK(c.step == 0.01);
    CHECK(c.orders() == std::vector<double>{0.9});
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("parse_config: errors name the offending key") {
    const std::string base = kFigure1;
    CHECK(key_of(base + "colour = red\n") == "colour");
    CHECK(key_of(base + "fixed_cost = 3\n") == "fixed_cost");
    CHECK(key_of(base + "price = 1\n") == "p_minus_a");
    CHECK(key_of(base + "step = fast\n") == "step");
    CHECK(key_of(base + "step = 30\n") == "step");
    CHECK(key_of(base + "step = 0.3\n") == "step");
    CHECK(key_of(base + "horizon = -1\n") == "horizon");
    CHECK(key_of(base + "step = 1e-7\n") == "step");
    CHECK(key_of(base + "alpha_sweep = 0.5, 2.5\n") == "alpha_sweep");
    CHECK(key_of(base + "alpha_sweep = 0.5, 1.5\n") == "y1");
    CHECK(key_of(base + "y1 = 1\n") == "<none>");
    CHECK(key_of(base + "variants = classical, sideways\n") == "variants");
    CHECK(key_of(base + "gnuplot = maybe\n") == "gnuplot");
    CHECK(key_of("p_minus_a = 0.2\nfixed_cost = 2\ninvestment_rate = 20\nalpha = 0.9\ny0 = 12\n") ==
          "investment_ratio");
    CHECK(key_of(std::string(kFigure1).replace(std::string(kFigure1).find("p_minus_a = 0.2"), 15, "")) == "price");
    CHECK(key_of(base + "investment_ratio2 = 0\n") == "investment_ratio2");
    CHECK(key_of(base + "variants = classical, classical\n") == "variants");
    CHECK(key_of(base) == "<none>");
}

TEST_CASE("config round-trip through the canonical form") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const auto c = random_config(rng);
        REQUIRE_NOTHROW(c.validate());
        const auto text = format_config(c);
        CAPTURE(text);
        CHECK(parse_config(text) == c);
        CHECK(format_config(parse_config(text)) == text);
    }
}

TEST_CASE("load_config reports unreadable files") {
    CHECK_THROWS_AS((void)load_config("/nonexistent/fracgrowth.conf"), ConfigError);
}

TEST_CASE("compute_scenario: closed form and numeric agree, classical leads at T") {
    auto c = parse_config(std::string(kFigure1) + "variants = classical, memory-closed-form, memory-numeric\n"
                                                  "horizon = 10\nstep = 0.005\n");
    const auto r = compute_scenario(c);
    REQUIRE(r.trajectories.size() == 3);
    CHECK(r.trajectories[0].variant == Variant::Classical);
    CHECK(r.trajectories[1].variant == Variant::MemoryClosedForm);
    CHECK(r.trajectories[2].variant == Variant::MemoryNumeric);
    double worst = 0.0;
    for (std::size_t i = 0; i < r.trajectories[1].values.size(); ++i) {
        worst = std::max(worst, std::abs(r.trajectories[1].values[i] - r.trajectories[2].values[i]));
    }
    CHECK(worst <= 1e-3);
    CHECK(r.trajectories[1].values.back() < r.trajectories[0].values.back());
    CHECK(r.warnings.size() == 1);

    const auto unused = compute_scenario(parse_config(std::string(kFigure1) + "y1 = 3\nhorizon = 1\n"));
    CHECK(unused.warnings.size() == 2);
}

TEST_CASE("compute_scenario: sweep keeps the requested order and reports overflow") {
    auto c = parse_config(std::string(kFigure1) + "alpha_sweep = 1.5, 0.3, 1\ny1 = 0\nvariants = memory-closed-form\n");
    const auto r = compute_scenario(c);
    REQUIRE(r.trajectories.size() == 3);
    CHECK(r.trajectories[0].alpha == 1.5);
    CHECK(r.trajectories[1].alpha == 0.3);
    CHECK(r.trajectories[2].alpha == 1.0);

    auto wild = parse_config(std::string(kFigure1) + "horizon = 20000\nstep = 10\n");
    CHECK_THROWS_AS((void)compute_scenario(wild), OverflowError);
}

TEST_CASE("run_scenario: CSV layout and determinism") {
    const auto dir = scratch_dir("run");
    auto c = parse_config(std::string(kFigure1) + "variants = classical, memory-closed-form\ngnuplot = true\n");
    c.output_path = (dir / "a").string();
    const auto files = run_scenario(c);
    REQUIRE(files.size() == 3);
    CHECK(files[0].filename() == "classical.csv");
    CHECK(files[1].filename() == "memory-closed-form_alpha-0.9.csv");
    CHECK(files[2].filename() == "plot.gp");

    const auto csv = read_file(files[1]);
    CHECK(csv.rfind("t,Y\n0,12\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2002);

    c.output_path = (dir / "b").string();
    const auto again = run_scenario(c);
    for (std::size_t i = 0; i < files.size(); ++i) {
        CHECK(read_file(files[i]) == read_file(again[i]));
    }
    for (const auto& entry : fs::directory_iterator(dir / "a")) {
        CHECK(entry.path().extension() != ".tmp");
    }
    fs::remove_all(dir);
}

TEST_CASE("figure setups carry the caption parameters") {
    const auto& f1 = figure_setup(1);
    CHECK(f1.memory_alpha == 0.9);
    CHECK(f1.y0 == 12.0);
    CHECK(f1.fixed_cost == 2.0);
    CHECK(f1.p_minus_a == 0.2);
    CHECK(f1.investment_rate == 20.0);
    CHECK(f1.investment_ratio == 30.0);
    CHECK(figure_setup(2).memory_alpha == 0.4);
    CHECK(figure_setup(3).memory_alpha == 1.1);
    CHECK(figure_setup(3).y1 == 0.1);
    const auto& f4 = figure_setup(4);
    CHECK(f4.memory_alpha == 1.1);
    CHECK(f4.y1 == 10.0);
    CHECK(f4.fixed_cost == 4.0);
    CHECK(f4.investment_ratio == 35.0);
    CHECK_THROWS_AS((void)figure_setup(0), DomainError);
    CHECK_THROWS_AS((void)figure_setup(5), DomainError);
}

TEST_CASE("figure manifest lists exactly the parameters used") {
    for (int n = 1; n <= 4; ++n) {
        const auto manifest = figure_manifest(compute_figure(n, 2.0, 0.01));
        std::map<std::string, std::string> kv;
        std::istringstream in(manifest);
        for (std::string line; std::getline(in, line);) {
            const auto eq = line.find(" = ");
            REQUIRE(eq != std::string::npos);
            kv[line.substr(0, eq)] = line.substr(eq + 3);
        }
        std::set<std::string> keys;
        for (const auto& [k, v] : kv) keys.insert(k);
        std::set<std::string> want{"figure",       "title",        "p_minus_a", "fixed_cost", "investment_rate",
                                   "investment_ratio", "y0",       "alpha_graph1", "alpha_graph2", "horizon",
                                   "step",         "graph1",       "graph2",    "config",     "crossover_time",
                                   "tool_version"};
        if (n >= 3) want.insert("y1");
        CAPTURE(n);
        CHECK(keys == want);
        CHECK(kv["horizon"] == "2");
        CHECK(kv["alpha_graph2"] == format_shortest(figure_setup(n).memory_alpha));
    }
}

TEST_CASE("crossover_time") {
    const UniformGrid g{0.5, 4};
    const Trajectory a{g, {0, 0, 0, 0, 0}};
    const Trajectory rising{g, {1, 1, -1, -2, -3}};
    CHECK(crossover_time(a, rising) == doctest::Approx(0.75));
    const Trajectory above{g, {0, 1, 2, 3, 4}};
    CHECK_FALSE(crossover_time(a, above).has_value());
}

TEST_CASE("reproduce_figure writes a self-consistent bundle") {
    const auto dir = scratch_dir("figure");
    const auto files = reproduce_figure(4, dir, 5.0, 0.05);
    REQUIRE(files.size() == 5);
    const auto conf = load_config(dir / "figure4" / "figure4.conf");
    CHECK(conf.params == figure_setup(4).params(1.1));
    CHECK(conf.horizon == 5.0);
    const auto csv = read_file(dir / "figure4" / "graph1_alpha-1.csv");
    CHECK(csv.rfind("t,Y\n", 0) == 0);
    fs::remove_all(dir);
}

TEST_CASE("validation: filtering and tolerance") {
    ValidationOptions only_ml;
    only_ml.only = "ml";
    const auto r = run_validation(only_ml);
    REQUIRE(r.size() == 1);
    CHECK(r[0].name == "ml");
    CHECK(r[0].passed);

    only_ml.ml_tolerance = 1e-16;
    const auto strict = run_validation(only_ml);
    CHECK_FALSE(strict[0].passed);
    CHECK(strict[0].name == "ml");

    ValidationOptions bogus;
    bogus.only = "everything";
    CHECK_THROWS_AS((void)run_validation(bogus), ConfigError);
    CHECK(validation_checks().size() == 6);
}
