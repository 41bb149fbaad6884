#include "ssband/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ssband/rng.hpp"

namespace ssband {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

std::uint64_t parse_n(const std::string& tok) {
    const auto caret = tok.find('^');
    if (caret != std::string::npos) {
        const auto base = std::stoull(tok.substr(0, caret));
        const auto expo = std::stoul(tok.substr(caret + 1));
        std::uint64_t v = 1;
        for (std::uint64_t i = 0; i < expo; ++i) v *= base;
        return v;
    }
    return std::stoull(tok);
}

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool has_flag(const std::string& flags, const std::string& token) {
    std::size_t pos = 0;
    while ((pos = flags.find(token, pos)) != std::string::npos) {
        const bool left = pos == 0 || flags[pos - 1] == ';';
        const std::size_t end = pos + token.size();
        const bool right = end == flags.size() || flags[end] == ';';
        if (left && right) return true;
        pos = end;
    }
    return false;
}

double median(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 4;
    }
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

ExperimentKind experiment_from_string(const std::string& name) {
    if (name == "coverage") return ExperimentKind::coverage;
    if (name == "exactness") return ExperimentKind::exactness;
    if (name == "rates") return ExperimentKind::rates;
    if (name == "smoothness") return ExperimentKind::smoothness;
    if (name == "gumbel") return ExperimentKind::gumbel;
    if (name == "testing_bound" || name == "testing-bound")
        return ExperimentKind::testing_bound;
    if (name == "adversarial") return ExperimentKind::adversarial;
    throw ConfigError("unknown experiment: " + name);
}

std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::coverage: return "coverage";
        case ExperimentKind::exactness: return "exactness";
        case ExperimentKind::rates: return "rates";
        case ExperimentKind::smoothness: return "smoothness";
        case ExperimentKind::gumbel: return "gumbel";
        case ExperimentKind::testing_bound: return "testing_bound";
        case ExperimentKind::adversarial: return "adversarial";
    }
    return "?";
}

FunctionSource source_from_string(const std::string& name) {
    if (name == "pi_sample") return FunctionSource::pi_sample;
    if (name == "prop1") return FunctionSource::prop1;
    if (name == "minimax_pair") return FunctionSource::minimax_pair;
    if (name == "adversarial_c1") return FunctionSource::adversarial_c1;
    if (name == "custom_file") return FunctionSource::custom_file;
    throw ConfigError("unknown function source: " + name);
}

void ExperimentConfig::validate() const {
    if (n_grid.empty()) throw ConfigError("n_grid must be nonempty");
    for (std::size_t i = 0; i + 1 < n_grid.size(); ++i)
        if (n_grid[i] >= n_grid[i + 1])
            throw ConfigError("n_grid must be strictly increasing");
    if (replicates < 1) throw ConfigError("replicates must be >= 1");
    cls.validate();
    params.validate();
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line without '=': " + line);
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv) {
    ExperimentConfig cfg;
    bool floor_given = false;
    for (const auto& [key, value] : kv) {
        try {
            if (key == "experiment") cfg.experiment = experiment_from_string(value);
            else if (key == "model") cfg.model = model_from_string(value);
            else if (key == "band_kind")
                cfg.band_kind = value == "exact" ? BandKind::exact
                                                 : BandKind::adaptive;
            else if (key == "function_source")
                cfg.function_source = source_from_string(value);
            else if (key == "s") cfg.cls.s = std::stod(value);
            else if (key == "M") cfg.cls.hoelder_bound = std::stod(value);
            else if (key == "epsilon") {
                cfg.cls.epsilon = std::stod(value);
                cfg.params.epsilon = cfg.cls.epsilon;
            } else if (key == "rho") {
                cfg.cls.rho = std::stoi(value);
                cfg.params.rho = cfg.cls.rho;
            } else if (key == "s_max") {
                cfg.cls.s_max = std::stod(value);
                cfg.params.s_max = cfg.cls.s_max;
            } else if (key == "s_min") cfg.params.s_min = std::stod(value);
            else if (key == "gamma") cfg.params.gamma = std::stod(value);
            else if (key == "lambda") cfg.params.lambda = std::stod(value);
            else if (key == "delta") cfg.params.delta = std::stod(value);
            else if (key == "nu") cfg.params.nu = std::stod(value);
            else if (key == "family") cfg.family = value;
            else if (key == "N") cfg.params.n_moments = std::stoi(value);
            else if (key == "j0") cfg.params.j0 = std::stoi(value);
            else if (key == "cascade_depth") cfg.cascade_depth = std::stoi(value);
            else if (key == "min_level_floor") {
                cfg.params.min_level_floor = std::stoi(value);
                floor_given = true;
            } else if (key == "storage_ceiling")
                cfg.params.storage_ceiling = std::stoi(value);
            else if (key == "store_margin") cfg.store_margin = std::stoi(value);
            else if (key == "grid_depth_offset")
                cfg.grid_depth_offset = std::stoi(value);
            else if (key == "sigma") cfg.sigma = std::stod(value);
            else if (key == "density_floor") cfg.density_floor = std::stod(value);
            else if (key == "require_self_similar")
                cfg.require_self_similar = value == "1" || value == "true";
            else if (key == "zero_noise")
                cfg.zero_noise = value == "1" || value == "true";
            else if (key == "n_grid") {
                cfg.n_grid.clear();
                for (const auto& tok : split(value, ','))
                    cfg.n_grid.push_back(parse_n(tok));
            } else if (key == "replicates") cfg.replicates = std::stoi(value);
            else if (key == "seed") cfg.seed = std::stoull(value);
            else if (key == "workers") cfg.workers = std::stoi(value);
            else if (key == "output_dir") cfg.output_dir = value;
            else if (key == "custom_file") cfg.custom_file_path = value;
            else if (key == "gumbel_level") cfg.gumbel_level = std::stoi(value);
            else if (key == "gumbel_perturb")
                cfg.gumbel_perturb = std::stod(value);
            else if (key == "mu") cfg.mu = std::stod(value);
            else if (key == "mu2") cfg.mu = std::sqrt(std::stod(value));
            else if (key == "xi") cfg.xi = std::stod(value);
            else if (key == "n_hypotheses") cfg.n_hypotheses = std::stoi(value);
            else if (key == "thresholds") {
                cfg.thresholds.clear();
                for (const auto& tok : split(value, ','))
                    cfg.thresholds.push_back(std::stod(tok));
            } else if (key == "m") cfg.adversarial_count = std::stoi(value);
            else if (key == "rho_schedule") {
                cfg.rho_schedule.clear();
                for (const auto& tok : split(value, ','))
                    cfg.rho_schedule.push_back(std::stoi(tok));
            } else
                throw ConfigError("unknown config key: " + key);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError("bad value for key '" + key + "': " + value);
        }
    }
    if (!floor_given)
        cfg.params.min_level_floor = cfg.params.rho * cfg.params.rho *
                                     cfg.params.j0;
    cfg.validate();
    return cfg;
}

namespace {

struct RunContext {
    ExperimentConfig config;
    ScalingProfile profile;

    BandParameters variant(BandKind kind) const {
        BandParameters p = config.params;
        if (kind == BandKind::adaptive) {
            p.nu = 1.0;
            p.s_min = 0.0;
        } else {
            if (p.nu <= 1.0) p.nu = 1.5;
            if (p.s_min <= 0.0) p.s_min = 0.25;
        }
        return p;
    }

    int store_top(std::uint64_t n) const {
        return std::min(config.params.j_max(n) + config.store_margin,
                        config.params.storage_ceiling);
    }

    int grid_depth(std::uint64_t n) const {
        return config.params.j_max(n) + config.grid_depth_offset;
    }

    // membership grids must resolve the finest scale of the band centre,
    // which can sit above j_max(n) when undersmoothing
    int membership_depth(std::uint64_t n, int chosen_level) const {
        return std::max(config.params.j_max(n), chosen_level + 1) +
               config.grid_depth_offset;
    }
};

RunContext make_context(const ExperimentConfig& config) {
    RunContext ctx;
    ctx.config = config;
    const FilterBank bank =
        load_filter(config.family, config.params.n_moments);
    ctx.profile = cascade_evaluate(bank, config.cascade_depth);
    compute_constants(ctx.profile, config.params.j0);
    return ctx;
}

CoefficientField draw_function(const RunContext& ctx, int top_level, int rep,
                               std::uint64_t seed, std::string* flags) {
    const auto& cfg = ctx.config;
    const int j0 = cfg.params.j0;
    switch (cfg.function_source) {
        case FunctionSource::pi_sample: {
            for (int attempt = 0; attempt < 200; ++attempt) {
                auto f = sample_pi(cfg.cls, j0, top_level,
                                   derive_seed(seed, 7, attempt));
                if (!cfg.require_self_similar ||
                    is_self_similar(f, cfg.cls, j0))
                    return f;
            }
            *flags += ";not_self_similar";
            return sample_pi(cfg.cls, j0, top_level, derive_seed(seed, 7, 0));
        }
        case FunctionSource::prop1:
            return prop1_counterexample(cfg.cls, j0, top_level);
        case FunctionSource::minimax_pair: {
            int j = cfg.cls.rho * j0 + 1;
            while ((std::int64_t{1} << j) < 2 * cfg.params.n_moments + 2) ++j;
            const std::int64_t k = (std::int64_t{1} << (j - 1)) + 1;
            auto pair = minimax_pair(cfg.cls, j0, j, k, top_level,
                                     cfg.params.n_moments);
            if (rep % 2 == 0) {
                *flags += ";hypothesis:f0";
                return pair.first;
            }
            *flags += ";hypothesis:fk";
            return pair.second;
        }
        case FunctionSource::adversarial_c1: {
            auto seq = adversarial_c1_sequence(
                cfg.cls.hoelder_bound, cfg.params.s_min, cfg.cls.s_max,
                cfg.cls.epsilon, cfg.rho_schedule, cfg.adversarial_count, j0,
                top_level, cfg.params.n_moments);
            const int m = rep % cfg.adversarial_count;
            *flags += ";field:" + std::to_string(m + 1);
            return seq.fields[static_cast<std::size_t>(m)];
        }
        case FunctionSource::custom_file: {
            std::ifstream in(cfg.custom_file_path);
            if (!in) throw ConfigError("cannot open " + cfg.custom_file_path);
            std::stringstream ss;
            ss << in.rdbuf();
            return field_from_json(ss.str());
        }
    }
    throw ConfigError("unhandled function source");
}

NoisyCoefficients observe_any(const RunContext& ctx,
                              const CoefficientField& truth, std::uint64_t n,
                              int top_level, std::uint64_t seed) {
    const auto& cfg = ctx.config;
    if (cfg.zero_noise) {
        NoisyCoefficients obs;
        obs.model = cfg.model;
        obs.n = n;
        obs.seed = seed;
        obs.hat = CoefficientField(truth.j0(), top_level);
        for (int j = truth.j0(); j <= top_level; ++j)
            obs.hat.level(j) = truth.level(j);
        return obs;
    }
    switch (cfg.model) {
        case Model::white_noise:
            return observe_white_noise(truth, n, top_level, seed);
        case Model::density:
            return observe_density(truth, ctx.profile, n, top_level, seed);
        case Model::regression:
            return observe_regression(truth, ctx.profile, n, cfg.sigma,
                                      top_level, seed);
    }
    throw ConfigError("unhandled model");
}

// Shared body for coverage / exactness / rates: build one replicate's truth
// and observation, then hand bands back to the caller.
struct ReplicateDraw {
    CoefficientField truth;
    NoisyCoefficients obs;
    std::uint64_t master_seed = 0;
    std::string flags;
};

ReplicateDraw make_replicate(const RunContext& ctx, std::size_t n_idx,
                             int rep) {
    const auto& cfg = ctx.config;
    const std::uint64_t n = cfg.n_grid[n_idx];
    ReplicateDraw out;
    out.master_seed = derive_seed(cfg.seed, n_idx, static_cast<unsigned>(rep));
    const int top = ctx.store_top(n);
    CoefficientField base = draw_function(ctx, top, rep,
                                          derive_seed(out.master_seed, 1),
                                          &out.flags);
    if (cfg.model == Model::density) {
        out.truth = make_density(base, ctx.profile, cfg.density_floor,
                                 ctx.grid_depth(n));
    } else {
        out.truth = std::move(base);
    }
    out.obs = observe_any(ctx, out.truth, n, top,
                          derive_seed(out.master_seed, 2));
    return out;
}

ConfidenceBand build_band(const RunContext& ctx, BandKind kind,
                          const NoisyCoefficients& obs, std::uint64_t n) {
    const BandParameters p = ctx.variant(kind);
    return kind == BandKind::exact
               ? build_exact_band(obs, p, n, ctx.profile)
               : build_adaptive_band(obs, p, n, ctx.profile);
}

void fill_band_row(ReportRow& row, const ConfidenceBand& band) {
    row.radius = band.radius;
    row.level = band.chosen_level;
    row.s_hat = band.diagnostics.s_hat;
    row.m_hat = band.diagnostics.m_hat;
    if (band.level_clamped) row.flags += ";clamped";
    if (std::isinf(band.radius)) row.flags += ";inf_radius";
}

void tidy_flags(ReportRow& row, BandKind kind) {
    row.flags = "kind:" + to_string(kind) + row.flags;
}

std::vector<std::array<double, 4>> sample_band_curve(
    const RunContext& ctx, const ConfidenceBand& band, std::uint64_t n) {
    std::vector<std::array<double, 4>> curve;
    if (std::isinf(band.radius)) return curve;
    const int depth = std::min(10, ctx.grid_depth(n));
    const auto vals = expand_on_grid(band.center, ctx.profile, depth);
    curve.reserve(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const double t =
            static_cast<double>(i) / static_cast<double>(vals.size() - 1);
        curve.push_back({t, vals[i], vals[i] - band.radius,
                         vals[i] + band.radius});
    }
    return curve;
}

ExperimentReport run_coverage_like(const RunContext& ctx) {
    const auto& cfg = ctx.config;
    const int reps = cfg.replicates;
    const auto n_count = cfg.n_grid.size();
    ExperimentReport report;
    report.config = cfg;
    report.rows.assign(n_count * static_cast<std::size_t>(reps), {});

    parallel_for(static_cast<int>(report.rows.size()), cfg.workers,
                 [&](int idx) {
        const std::size_t n_idx = static_cast<std::size_t>(idx) /
                                  static_cast<std::size_t>(reps);
        const int rep = idx % reps;
        const std::uint64_t n = cfg.n_grid[n_idx];
        auto draw = make_replicate(ctx, n_idx, rep);
        auto band = build_band(ctx, cfg.band_kind, draw.obs, n);
        ReportRow row;
        row.n = n;
        row.rep = rep;
        row.seed = draw.master_seed;
        row.flags = draw.flags;
        fill_band_row(row, band);
        row.covered =
            band_contains(band, draw.truth, ctx.profile,
                          ctx.membership_depth(n, band.chosen_level));
        tidy_flags(row, cfg.band_kind);
        report.rows[static_cast<std::size_t>(idx)] = std::move(row);
    });
    report.aggregates_json = compute_aggregates(cfg, report.rows);

    // plottable curve: first finite-radius replicate at the largest n,
    // rebuilt serially so the output does not depend on scheduling
    const std::uint64_t n_top = cfg.n_grid.back();
    for (int rep = 0; rep < reps; ++rep) {
        const auto& row =
            report.rows[(n_count - 1) * static_cast<std::size_t>(reps) +
                        static_cast<std::size_t>(rep)];
        if (std::isinf(row.radius)) continue;
        auto draw = make_replicate(ctx, n_count - 1, rep);
        const auto band = build_band(ctx, cfg.band_kind, draw.obs, n_top);
        report.band_curve = sample_band_curve(ctx, band, n_top);
        break;
    }
    return report;
}

ExperimentReport run_rates(const RunContext& ctx) {
    const auto& cfg = ctx.config;
    if (cfg.n_grid.size() < 4 ||
        static_cast<double>(cfg.n_grid.back()) <
            100.0 * static_cast<double>(cfg.n_grid.front()))
        throw ConfigError(
            "rates needs at least 4 sample sizes spanning two decades");
    const int reps = cfg.replicates;
    const auto n_count = cfg.n_grid.size();
    ExperimentReport report;
    report.config = cfg;
    report.rows.assign(2 * n_count * static_cast<std::size_t>(reps), {});

    parallel_for(static_cast<int>(n_count) * reps, cfg.workers, [&](int idx) {
        const std::size_t n_idx = static_cast<std::size_t>(idx) /
                                  static_cast<std::size_t>(reps);
        const int rep = idx % reps;
        const std::uint64_t n = cfg.n_grid[n_idx];
        auto draw = make_replicate(ctx, n_idx, rep);
        const BandKind kinds[2] = {BandKind::adaptive, BandKind::exact};
        for (int v = 0; v < 2; ++v) {
            auto band = build_band(ctx, kinds[v], draw.obs, n);
            ReportRow row;
            row.n = n;
            row.rep = rep;
            row.seed = draw.master_seed;
            row.flags = draw.flags + ";radius_only";
            fill_band_row(row, band);
            row.covered = true;
            tidy_flags(row, kinds[v]);
            report.rows[2 * static_cast<std::size_t>(idx) +
                        static_cast<std::size_t>(v)] = std::move(row);
        }
    });
    report.aggregates_json = compute_aggregates(cfg, report.rows);
    return report;
}

ExperimentReport run_smoothness(const RunContext& ctx) {
    const auto& cfg = ctx.config;
    const int reps = cfg.replicates;
    const auto n_count = cfg.n_grid.size();
    ExperimentReport report;
    report.config = cfg;
    report.rows.assign(n_count * static_cast<std::size_t>(reps), {});
    const BandParameters params = ctx.variant(cfg.band_kind);

    parallel_for(static_cast<int>(report.rows.size()), cfg.workers,
                 [&](int idx) {
        const std::size_t n_idx = static_cast<std::size_t>(idx) /
                                  static_cast<std::size_t>(reps);
        const int rep = idx % reps;
        const std::uint64_t n = cfg.n_grid[n_idx];
        auto draw = make_replicate(ctx, n_idx, rep);
        const auto est = estimate_smoothness(draw.obs, params, n);
        ReportRow row;
        row.n = n;
        row.rep = rep;
        row.seed = draw.master_seed;
        row.flags = draw.flags;
        row.level = est.j_ad_hat;
        row.s_hat = est.s_hat;
        row.m_hat = est.m_hat;
        row.radius = est.r_curve_at_s_hat;
        const double s = cfg.cls.s;
        const double m = cfg.cls.hoelder_bound;
        const double j1 = est.j1;
        const bool s_le = est.s_hat <= s + 1e-12;
        const bool m_ineq =
            est.m_hat * std::exp2(-j1 * (est.s_hat + 0.5)) >=
            m * std::exp2(-j1 * (s + 0.5)) - 1e-12;
        if (s_le) row.flags += ";s_le";
        if (m_ineq) row.flags += ";m_ineq";
        row.covered = s_le && m_ineq;
        report.rows[static_cast<std::size_t>(idx)] = std::move(row);
    });
    report.aggregates_json = compute_aggregates(cfg, report.rows);
    return report;
}

ExperimentReport run_gumbel(const RunContext& ctx) {
    const auto& cfg = ctx.config;
    const int reps = cfg.replicates;
    const std::uint64_t n = cfg.n_grid.back();
    const int j = cfg.gumbel_level;
    ExperimentReport report;
    report.config = cfg;
    report.rows.assign(static_cast<std::size_t>(reps), {});
    const CoefficientField zero(cfg.params.j0, j);

    parallel_for(reps, cfg.workers, [&](int rep) {
        const std::uint64_t master =
            derive_seed(cfg.seed, 0, static_cast<unsigned>(rep));
        const auto obs =
            observe_white_noise(zero, n, j, derive_seed(master, 2));
        // oversample relative to the finest scale of the expansion, which
        // sits one level above the top wavelet level
        const double sup = sup_norm_distance(truncated_estimate(obs, j), zero,
                                             ctx.profile,
                                             j + 1 + cfg.grid_depth_offset);
        ReportRow row;
        row.n = n;
        row.rep = rep;
        row.seed = master;
        row.level = j;
        row.covered = true;
        row.radius = gumbel_statistic(sup, j, n, ctx.profile, 1.0);
        row.s_hat = gumbel_statistic(sup, j, n, ctx.profile,
                                     cfg.gumbel_perturb);
        report.rows[static_cast<std::size_t>(rep)] = std::move(row);
    });
    report.aggregates_json = compute_aggregates(cfg, report.rows);
    return report;
}

ExperimentReport run_testing_bound(const RunContext& ctx) {
    const auto& cfg = ctx.config;
    const int reps = cfg.replicates;
    const int n_hyp = cfg.n_hypotheses;
    const double mu = cfg.mu;
    ExperimentReport report;
    report.config = cfg;
    report.rows.assign(static_cast<std::size_t>(reps), {});

    parallel_for(reps, cfg.workers, [&](int rep) {
        const std::uint64_t master =
            derive_seed(cfg.seed, 0, static_cast<unsigned>(rep));
        RandomStream rng(derive_seed(master, 2));
        double z = 0.0;
        double e0 = 0.0;  // likelihood term of the fixed alternative k = 0
        for (int k = 0; k < n_hyp; ++k) {
            const double x = rng.normal();
            const double ek = std::exp(mu * x - 0.5 * mu * mu);
            z += ek;
            if (k == 0) e0 = ek;
        }
        z /= n_hyp;
        // the same uniform draw viewed under H_{k=0}: X_0 shifts by mu
        const double z_alt =
            z + (e0 * std::exp(mu * mu) - e0) / static_cast<double>(n_hyp);
        ReportRow row;
        row.n = static_cast<std::uint64_t>(n_hyp);
        row.rep = rep;
        row.seed = master;
        row.covered = z > 1.0;
        row.radius = z;
        row.s_hat = z_alt;
        report.rows[static_cast<std::size_t>(rep)] = std::move(row);
    });
    report.aggregates_json = compute_aggregates(cfg, report.rows);
    return report;
}

ExperimentReport run_adversarial(const RunContext& ctx) {
    ExperimentConfig sub = ctx.config;
    sub.function_source = FunctionSource::adversarial_c1;
    sub.band_kind = BandKind::adaptive;
    RunContext sub_ctx = ctx;
    sub_ctx.config = sub;
    return run_coverage_like(sub_ctx);
}

}  // namespace

// level is the finest wavelet level of the estimate; the expansion spans a
// space of dimension ~2^{level+1}, so the extreme-value constants are
// evaluated at that index.
double gumbel_statistic(double sup_dist, int level, std::uint64_t n,
                        const ScalingProfile& profile, double a_scale) {
    const int dim = level + 1;
    const double log2v = std::log(2.0);
    const double a =
        a_scale * std::sqrt(2.0 * log2v * static_cast<double>(dim));
    const double b = a - (std::log(3.141592653589793 * log2v) +
                          std::log(static_cast<double>(dim)) -
                          0.5 * std::log1p(profile.upsilon)) /
                             (2.0 * a);
    const double c = std::sqrt(profile.sigma2_max / static_cast<double>(n)) *
                     std::exp2(0.5 * dim);
    return a * (sup_dist / c - b);
}

double ks_distance_gumbel(std::vector<double> sample) {
    std::sort(sample.begin(), sample.end());
    const auto n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = std::exp(-std::exp(-sample[i]));
        const double hi = static_cast<double>(i + 1) / n;
        const double lo = static_cast<double>(i) / n;
        d = std::max({d, std::abs(hi - f), std::abs(f - lo)});
    }
    return d;
}

double regression_slope(const std::vector<double>& x,
                        const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

std::string compute_aggregates(const ExperimentConfig& config,
                               const std::vector<ReportRow>& rows) {
    nlohmann::json agg;
    const auto kind = config.experiment;

    if (kind == ExperimentKind::coverage ||
        kind == ExperimentKind::exactness ||
        kind == ExperimentKind::adversarial ||
        kind == ExperimentKind::rates) {
        nlohmann::json per_n = nlohmann::json::array();
        const std::vector<std::string> kinds =
            kind == ExperimentKind::rates
                ? std::vector<std::string>{"adaptive", "exact"}
                : std::vector<std::string>{to_string(config.band_kind)};
        double overall_bad = 0.0, overall_count = 0.0;
        std::vector<double> x_ad, y_ad, x_ex, y_ex;
        for (std::uint64_t n : config.n_grid) {
            for (const auto& kname : kinds) {
                double count = 0, bad = 0, inf_count = 0, clamped = 0;
                std::vector<double> radii;
                for (const auto& r : rows) {
                    if (r.n != n) continue;
                    if (!has_flag(r.flags, "kind:" + kname)) continue;
                    const bool is_clamped = has_flag(r.flags, "clamped");
                    if (is_clamped) clamped += 1;
                    if (has_flag(r.flags, "inf_radius")) inf_count += 1;
                    else radii.push_back(r.radius);
                    // exact-band exactness statistics skip clamped rows
                    if (kname == "exact" && is_clamped) continue;
                    count += 1;
                    if (!r.covered) bad += 1;
                }
                nlohmann::json e;
                e["n"] = n;
                e["kind"] = kname;
                e["rows"] = count;
                e["non_coverage"] = count > 0
                                        ? nlohmann::json(bad / count)
                                        : nlohmann::json();
                e["median_radius"] =
                    radii.empty() ? nlohmann::json() : nlohmann::json(median(radii));
                e["inf_radius_rate"] =
                    (count + clamped) > 0 ? inf_count / (count + clamped) : 0.0;
                e["clamped_rate"] =
                    (count + clamped) > 0 ? clamped / (count + clamped) : 0.0;
                e["deviation_from_gamma"] =
                    count > 0 ? nlohmann::json(std::abs(bad / count -
                                                        config.params.gamma))
                              : nlohmann::json();
                per_n.push_back(e);
                overall_bad += bad;
                overall_count += count;
                if (kind == ExperimentKind::rates && !radii.empty()) {
                    const double x = std::log(static_cast<double>(n) /
                                              std::log(static_cast<double>(n)));
                    if (kname == "adaptive") {
                        x_ad.push_back(x);
                        y_ad.push_back(std::log(median(radii)));
                    } else {
                        x_ex.push_back(x);
                        y_ex.push_back(std::log(
                            median(radii) / std::log(static_cast<double>(n))));
                    }
                }
            }
        }
        agg["per_n"] = per_n;
        agg["non_coverage_rate"] =
            overall_count > 0 ? overall_bad / overall_count : 0.0;
        if (kind == ExperimentKind::rates && x_ad.size() >= 2 &&
            x_ex.size() >= 2) {
            agg["rate_slope"] = nlohmann::json{
                {"adaptive", regression_slope(x_ad, y_ad)},
                {"exact_log_adjusted", regression_slope(x_ex, y_ex)},
                {"target", -config.cls.s / (2.0 * config.cls.s + 1.0)}};
        }
    }

    if (kind == ExperimentKind::smoothness) {
        nlohmann::json per_n = nlohmann::json::array();
        for (std::uint64_t n : config.n_grid) {
            double count = 0, s_le = 0, m_ineq = 0, both = 0, s_sum = 0;
            for (const auto& r : rows) {
                if (r.n != n) continue;
                count += 1;
                s_sum += r.s_hat;
                if (has_flag(r.flags, "s_le")) s_le += 1;
                if (has_flag(r.flags, "m_ineq")) m_ineq += 1;
                if (r.covered) both += 1;
            }
            per_n.push_back(nlohmann::json{
                {"n", n},
                {"rows", count},
                {"freq_s_le_s", count > 0 ? s_le / count : 0.0},
                {"freq_m_inequality", count > 0 ? m_ineq / count : 0.0},
                {"freq_both", count > 0 ? both / count : 0.0},
                {"mean_s_hat", count > 0 ? s_sum / count : 0.0}});
        }
        agg["per_n"] = per_n;
    }

    if (kind == ExperimentKind::gumbel) {
        std::vector<double> g, gc;
        for (const auto& r : rows) {
            g.push_back(r.radius);
            gc.push_back(r.s_hat);
        }
        agg["ks_distance"] = ks_distance_gumbel(g);
        agg["ks_distance_control"] = ks_distance_gumbel(gc);
        agg["median_statistic"] = median(g);
        agg["gumbel_median"] = -std::log(std::log(2.0));
    }

    if (kind == ExperimentKind::testing_bound) {
        const double mu = config.mu, xi = config.xi;
        const double n_hyp = static_cast<double>(config.n_hypotheses);
        const double bound =
            1.0 - std::sqrt((std::exp(mu * mu) - 1.0) / n_hyp) -
            std::sqrt(std::exp(xi * xi) - 1.0);
        nlohmann::json sweep = nlohmann::json::array();
        double best = kInf;
        for (double t : config.thresholds) {
            double n_rows = 0, rej = 0, acc_alt = 0;
            for (const auto& r : rows) {
                n_rows += 1;
                if (r.radius > t) rej += 1;
                if (r.s_hat <= t) acc_alt += 1;
            }
            const double type1 = n_rows > 0 ? rej / n_rows : 0.0;
            const double type2 = n_rows > 0 ? acc_alt / n_rows : 0.0;
            sweep.push_back(nlohmann::json{{"threshold", t},
                                           {"type1", type1},
                                           {"type2", type2},
                                           {"sum", type1 + type2}});
            best = std::min(best, type1 + type2);
        }
        agg["bound_check"] = nlohmann::json{{"analytic_bound", bound},
                                            {"sweep", sweep},
                                            {"min_error_sum", best}};
    }

    if (config.model == Model::regression && config.params.s_min < 0.5)
        agg["scope_note"] =
            "regression run with s_min < 1/2: outside the regime covered by "
            "the regression/density extension of the band theory";

    if (kind == ExperimentKind::adversarial) {
        auto seq = adversarial_c1_sequence(
            config.cls.hoelder_bound, config.params.s_min, config.cls.s_max,
            config.cls.epsilon, config.rho_schedule, config.adversarial_count,
            config.params.j0,
            std::min(config.params.j_max(config.n_grid.back()) +
                         config.store_margin,
                     config.params.storage_ceiling),
            config.params.n_moments);
        bool s_dec = true, t_inc = true, windows = true;
        for (std::size_t i = 0; i + 1 < seq.s_values.size(); ++i) {
            if (seq.s_values[i + 1] >= seq.s_values[i]) s_dec = false;
            if (seq.t_values[i + 1] <= seq.t_values[i]) t_inc = false;
        }
        for (std::size_t m = 0; m < seq.fields.size(); ++m) {
            if (!is_self_similar_windowed(
                    seq.fields[m], seq.s_values[m], config.cls.hoelder_bound,
                    config.cls.epsilon,
                    [&seq](int j) { return seq.rho_of_level(j); },
                    config.params.j0))
                windows = false;
        }
        agg["construction"] = nlohmann::json{
            {"s_values", seq.s_values},
            {"t_values", seq.t_values},
            {"ladder", seq.ladder},
            {"spike_index", seq.spike_index},
            {"s_strictly_decreasing", s_dec},
            {"t_strictly_increasing", t_inc},
            {"all_windowed_checks_pass", windows},
            {"note", "finite-n demonstration; the construction separates "
                     "hypotheses only at resolution levels far beyond any "
                     "desk-scale sample size, so coverage degradation is "
                     "expected to appear only in the recorded radii trend"}};
    }

    return agg.dump();
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    config.validate();
    RunContext ctx = make_context(config);
    switch (config.experiment) {
        case ExperimentKind::coverage:
        case ExperimentKind::exactness:
            return run_coverage_like(ctx);
        case ExperimentKind::rates: return run_rates(ctx);
        case ExperimentKind::smoothness: return run_smoothness(ctx);
        case ExperimentKind::gumbel: return run_gumbel(ctx);
        case ExperimentKind::testing_bound: return run_testing_bound(ctx);
        case ExperimentKind::adversarial: return run_adversarial(ctx);
    }
    throw ConfigError("unhandled experiment kind");
}

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
    std::string out = "n,rep,covered,radius,level,s_hat,M_hat,flags\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.rep);
        out += ',';
        out += r.covered ? '1' : '0';
        out += ',';
        out += fmt(r.radius);
        out += ',';
        out += std::to_string(r.level);
        out += ',';
        out += fmt(r.s_hat);
        out += ',';
        out += fmt(r.m_hat);
        out += ',';
        out += r.flags;
        out += '\n';
    }
    return out;
}

void write_report(const ExperimentReport& report) {
    namespace fs = std::filesystem;
    const fs::path dir = report.config.output_dir.empty()
                             ? fs::path(".")
                             : fs::path(report.config.output_dir);
    fs::create_directories(dir);

    nlohmann::json doc;
    doc["experiment"] = to_string(report.config.experiment);
    doc["model"] = to_string(report.config.model);
    doc["band_kind"] = to_string(report.config.band_kind);
    doc["seed"] = report.config.seed;
    doc["replicates"] = report.config.replicates;
    doc["n_grid"] = report.config.n_grid;
    doc["aggregates"] = nlohmann::json::parse(report.aggregates_json);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows)
        rows.push_back(nlohmann::json{
            {"n", r.n},
            {"rep", r.rep},
            {"covered", r.covered},
            {"radius", std::isinf(r.radius) ? -1.0 : r.radius},
            {"radius_infinite", std::isinf(r.radius)},
            {"level", r.level},
            {"s_hat", r.s_hat},
            {"M_hat", r.m_hat},
            {"flags", r.flags},
            {"seed", r.seed}});
    doc["rows"] = rows;

    std::ofstream(dir / "report.json") << doc.dump(2) << '\n';
    std::ofstream(dir / "rows.csv") << rows_to_csv(report.rows);
    if (!report.band_curve.empty()) {
        std::ofstream out(dir / "band.csv");
        out << "t,center,lo,hi\n";
        for (const auto& p : report.band_curve)
            out << fmt(p[0]) << ',' << fmt(p[1]) << ',' << fmt(p[2]) << ','
                << fmt(p[3]) << '\n';
    }
}

}  // namespace ssband
