#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ssband/bands.hpp"
#include "ssband/generators.hpp"

namespace ssband {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind {
    coverage,
    exactness,
    rates,
    smoothness,
    gumbel,
    testing_bound,
    adversarial
};

ExperimentKind experiment_from_string(const std::string& name);
std::string to_string(ExperimentKind k);

enum class FunctionSource {
    pi_sample,
    prop1,
    minimax_pair,
    adversarial_c1,
    custom_file
};

FunctionSource source_from_string(const std::string& name);

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::coverage;
    Model model = Model::white_noise;
    BandKind band_kind = BandKind::adaptive;
    FunctionSource function_source = FunctionSource::pi_sample;

    SmoothnessClass cls;           // s, M, epsilon, rho, s_max
    BandParameters params;         // gamma, lambda, delta, nu, ...
    std::string family = "daubechies";
    int cascade_depth = 12;
    int store_margin = 6;
    int grid_depth_offset = 3;
    double sigma = 1.0;            // regression noise
    double density_floor = 0.1;
    bool require_self_similar = true;
    bool zero_noise = false;

    std::vector<std::uint64_t> n_grid{1u << 10, 1u << 12, 1u << 14, 1u << 16};
    int replicates = 500;
    std::uint64_t seed = 20120901;
    int workers = 0;  // 0 = hardware concurrency
    std::string output_dir;
    std::string custom_file_path;

    // experiment-specific knobs
    int gumbel_level = 10;
    double gumbel_perturb = 1.1;
    double mu = 0.8325546111576977;  // sqrt(ln 2)
    double xi = 0.0;
    int n_hypotheses = 100;
    std::vector<double> thresholds{0.8, 0.9, 1.0, 1.1, 1.25};
    int adversarial_count = 3;
    std::vector<int> rho_schedule{2, 2, 2, 2, 3, 3, 4, 4, 5, 6};

    void validate() const;
};

// key=value text (one key per line, # comments); later sources override.
std::map<std::string, std::string> parse_config_text(const std::string& text);
ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv);

struct ReportRow {
    std::uint64_t n = 0;
    int rep = 0;
    bool covered = false;
    double radius = 0.0;
    int level = 0;
    double s_hat = 0.0;
    double m_hat = 0.0;
    std::string flags;
    std::uint64_t seed = 0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<ReportRow> rows;
    std::string aggregates_json;  // recomputable from rows
    std::vector<std::array<double, 4>> band_curve;  // t, center, lo, hi
};

ExperimentReport run_experiment(const ExperimentConfig& config);

// Aggregate block computed purely from the rows (the writer and the tests
// share this code path).
std::string compute_aggregates(const ExperimentConfig& config,
                               const std::vector<ReportRow>& rows);

void write_report(const ExperimentReport& report);
std::string rows_to_csv(const std::vector<ReportRow>& rows);

// Kolmogorov-Smirnov distance to the standard Gumbel cdf exp(-e^-x).
double ks_distance_gumbel(std::vector<double> sample);

// Least-squares slope of y against x.
double regression_slope(const std::vector<double>& x,
                        const std::vector<double>& y);

double gumbel_statistic(double sup_dist, int level, std::uint64_t n,
                        const ScalingProfile& profile, double a_scale);

}  // namespace ssband
