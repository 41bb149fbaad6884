#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "ssband/experiments.hpp"

using namespace ssband;

namespace {

std::map<std::string, std::string> base_config() {
    return {
        {"experiment", "coverage"},  {"model", "white_noise"},
        {"band_kind", "adaptive"},   {"function_source", "pi_sample"},
        {"s", "1.0"},                {"M", "1.0"},
        {"epsilon", "0.5"},          {"rho", "2"},
        {"s_max", "5.5"},            {"gamma", "0.1"},
        {"N", "6"},                  {"j0", "1"},
        {"n_grid", "2^12"},          {"replicates", "8"},
        {"seed", "12345"},           {"workers", "2"},
    };
}

}  // namespace

TEST_CASE("config parsing") {
    const auto kv = parse_config_text(
        "# comment line\n"
        "experiment = coverage\n"
        "n_grid = 2^10, 4096\n"
        "seed=42   # trailing comment\n");
    CHECK(kv.at("experiment") == "coverage");
    CHECK(kv.at("seed") == "42");
    auto full = base_config();
    full["n_grid"] = "2^10,4096";
    const auto cfg = config_from_map(full);
    CHECK(cfg.n_grid == std::vector<std::uint64_t>{1024, 4096});
    CHECK(cfg.params.min_level_floor == 4);  // rho^2 j0 by default

    auto bad = base_config();
    bad["bogus_key"] = "1";
    CHECK_THROWS_AS(config_from_map(bad), ConfigError);
    auto decreasing = base_config();
    decreasing["n_grid"] = "4096,1024";
    CHECK_THROWS_AS(config_from_map(decreasing), ConfigError);
    CHECK_THROWS_AS(parse_config_text("no equals sign here"), ConfigError);
}

TEST_CASE("ks distance against a perfect gumbel grid") {
    // quantiles of exp(-e^{-x}) themselves: KS is at most the bin width
    std::vector<double> q;
    const int n = 1000;
    for (int i = 1; i <= n; ++i) {
        const double u = (i - 0.5) / n;
        q.push_back(-std::log(-std::log(u)));
    }
    CHECK(ks_distance_gumbel(q) <= 0.5 / n + 1e-12);
    // a shifted sample is far
    for (auto& v : q) v += 1.0;
    CHECK(ks_distance_gumbel(q) > 0.2);
}

TEST_CASE("regression slope helper") {
    std::vector<double> x{1, 2, 3, 4}, y;
    for (double v : x) y.push_back(-0.5 * v + 3.0);
    CHECK(regression_slope(x, y) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("coverage smoke run with aggregates from rows") {
    const auto cfg = config_from_map(base_config());
    const auto report = run_experiment(cfg);
    CHECK(report.rows.size() == 8);
    for (const auto& row : report.rows) {
        CHECK(row.n == (1u << 12));
        CHECK(row.seed != 0);
    }
    CHECK(report.aggregates_json == compute_aggregates(cfg, report.rows));
    const auto agg = nlohmann::json::parse(report.aggregates_json);
    CHECK(agg.at("non_coverage_rate").get<double>() >= 0.0);
    CHECK(agg.at("non_coverage_rate").get<double>() <= 1.0);
}

TEST_CASE("determinism across worker counts") {
    auto kv = base_config();
    kv["replicates"] = "6";
    kv["workers"] = "1";
    const auto serial = run_experiment(config_from_map(kv));
    kv["workers"] = "5";
    const auto parallel = run_experiment(config_from_map(kv));
    CHECK(rows_to_csv(serial.rows) == rows_to_csv(parallel.rows));
}

TEST_CASE("zero-noise coverage is total") {
    auto kv = base_config();
    kv["zero_noise"] = "1";
    kv["replicates"] = "6";
    kv["function_source"] = "prop1";
    kv["j0"] = "3";
    kv["min_level_floor"] = "12";
    kv["n_grid"] = "2^17";
    const auto report = run_experiment(config_from_map(kv));
    for (const auto& row : report.rows) CHECK(row.covered);
}

TEST_CASE("gumbel experiment emits both statistics") {
    auto kv = base_config();
    kv["experiment"] = "gumbel";
    kv["gumbel_level"] = "6";
    kv["n_grid"] = "2^12";
    kv["replicates"] = "400";
    const auto report = run_experiment(config_from_map(kv));
    const auto agg = nlohmann::json::parse(report.aggregates_json);
    CHECK(agg.at("ks_distance").get<double>() > 0.0);
    CHECK(agg.at("ks_distance").get<double>() < 0.25);
    CHECK(agg.at("ks_distance_control").get<double>() >
          agg.at("ks_distance").get<double>());
    // centred statistic lands near the distribution's median
    const double med = agg.at("median_statistic").get<double>();
    CHECK(std::abs(med - agg.at("gumbel_median").get<double>()) < 0.25);
}

TEST_CASE("testing bound monotone in mu and xi") {
    auto kv = base_config();
    kv["experiment"] = "testing_bound";
    kv["replicates"] = "400";
    kv["mu2"] = "0.693147180559945";
    kv["n_hypotheses"] = "100";
    const auto cfg = config_from_map(kv);
    const auto report = run_experiment(cfg);
    const auto agg = nlohmann::json::parse(report.aggregates_json);
    const double bound =
        agg.at("bound_check").at("analytic_bound").get<double>();
    CHECK(bound == doctest::Approx(0.9).epsilon(1e-12));

    // bound decreases in mu and xi
    auto stronger = kv;
    stronger["mu2"] = "1.5";
    const auto agg2 = nlohmann::json::parse(
        run_experiment(config_from_map(stronger)).aggregates_json);
    CHECK(agg2.at("bound_check").at("analytic_bound").get<double>() < bound);
    auto perturbed = kv;
    perturbed["xi"] = "0.5";
    const auto agg3 = nlohmann::json::parse(
        run_experiment(config_from_map(perturbed)).aggregates_json);
    CHECK(agg3.at("bound_check").at("analytic_bound").get<double>() < bound);

    // degenerate case: identical hypotheses force error sum 1
    auto null = kv;
    null["mu2"] = "0.0";
    null["thresholds"] = "1.0";
    const auto agg4 = nlohmann::json::parse(
        run_experiment(config_from_map(null)).aggregates_json);
    CHECK(agg4.at("bound_check").at("analytic_bound").get<double>() ==
          doctest::Approx(1.0));
    const double sum = agg4.at("bound_check")
                           .at("sweep")[0]
                           .at("sum")
                           .get<double>();
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("report files are written") {
    namespace fs = std::filesystem;
    auto kv = base_config();
    kv["replicates"] = "3";
    const fs::path dir = fs::temp_directory_path() / "ssband_report_test";
    fs::remove_all(dir);
    kv["output_dir"] = dir.string();
    const auto report = run_experiment(config_from_map(kv));
    write_report(report);
    CHECK(fs::exists(dir / "report.json"));
    CHECK(fs::exists(dir / "rows.csv"));
    std::ifstream rows(dir / "rows.csv");
    std::string header;
    std::getline(rows, header);
    CHECK(header == "n,rep,covered,radius,level,s_hat,M_hat,flags");
    bool any_finite = false;
    for (const auto& r : report.rows)
        if (!std::isinf(r.radius)) any_finite = true;
    CHECK(fs::exists(dir / "band.csv") == any_finite);
    if (any_finite) {
        std::ifstream band(dir / "band.csv");
        std::getline(band, header);
        CHECK(header == "t,center,lo,hi");
    }
    // per-row seeds land in the json report
    std::ifstream rj(dir / "report.json");
    std::stringstream ss;
    ss << rj.rdbuf();
    const auto doc = nlohmann::json::parse(ss.str());
    CHECK(doc.at("rows").size() == 3);
    CHECK(doc.at("rows")[0].contains("seed"));
    fs::remove_all(dir);
}

TEST_CASE("adversarial experiment aggregates") {
    auto kv = base_config();
    kv["experiment"] = "adversarial";
    kv["function_source"] = "adversarial_c1";
    kv["j0"] = "3";
    kv["min_level_floor"] = "12";
    kv["s_min"] = "0.25";
    kv["s_max"] = "2.0";
    kv["m"] = "3";
    kv["replicates"] = "3";
    kv["n_grid"] = "2^17";
    kv["require_self_similar"] = "0";
    const auto cfg = config_from_map(kv);
    const auto report = run_experiment(cfg);
    const auto agg = nlohmann::json::parse(report.aggregates_json);
    const auto& cons = agg.at("construction");
    CHECK(cons.at("s_strictly_decreasing").get<bool>());
    CHECK(cons.at("t_strictly_increasing").get<bool>());
    CHECK(cons.at("all_windowed_checks_pass").get<bool>());
    CHECK(report.rows.size() == 3);
}
