#include "ssband/bands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "ssband/expand.hpp"

namespace ssband {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kAssumptionTol = 1e-6;

void gate_profile(const ScalingProfile& profile) {
    if (!profile.constants_ready)
        throw Assumption2Failed("profile constants not computed");
    const auto rep = verify_assumption2(profile, kAssumptionTol);
    if (!rep.pass())
        throw Assumption2Failed(
            "variance profile fails the unique-maximum assumption");
}

}  // namespace

std::string to_string(BandKind k) {
    return k == BandKind::exact ? "exact" : "adaptive";
}

BandConstants band_constants(int j, double gamma, std::uint64_t n,
                             const ScalingProfile& profile) {
    if (j < 1) throw std::invalid_argument("need j >= 1");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("need gamma in (0,1)");
    BandConstants out;
    const double log2v = std::log(2.0);
    out.a = std::sqrt(2.0 * log2v * static_cast<double>(j));
    out.b = out.a - (std::log(3.141592653589793 * log2v) +
                     std::log(static_cast<double>(j)) -
                     0.5 * std::log1p(profile.upsilon)) /
                        (2.0 * out.a);
    out.c = std::sqrt(profile.sigma2_max / static_cast<double>(n)) *
            std::exp2(0.5 * j);
    out.x = -std::log(-std::log1p(-gamma));
    return out;
}

double radius_r1(int j, double gamma, std::uint64_t n,
                 const ScalingProfile& profile) {
    const auto k = band_constants(j, gamma, n, profile);
    return k.c * (k.x / k.a + k.b);
}

TailRadii radius_r2_r3(int j, const SmoothnessEstimate& est, std::uint64_t n,
                       const BandParameters& params,
                       const ScalingProfile& profile) {
    TailRadii out;
    const auto cl = j_cl_hat(est, params.lambda_bar(), 1.0, n, params);
    out.l = std::max(j, std::min(cl.level, params.j_max(n)));
    const double c_nu = threshold_scale(n, params.nu);
    out.r2 = profile.tau * params.lambda_bar() *
             (std::exp2(0.5 * out.l) - std::exp2(0.5 * j)) * c_nu /
             (1.0 - std::exp2(-0.5));
    out.r3 = est.s_hat > 0.0
                 ? profile.tau * est.m_hat * std::exp2(-out.l * est.s_hat) /
                       (std::exp2(est.s_hat) - 1.0)
                 : kInf;
    return out;
}

ConfidenceBand build_exact_band(const NoisyCoefficients& obs,
                                const BandParameters& params, std::uint64_t n,
                                const ScalingProfile& profile) {
    params.validate();
    if (!params.exact_mode())
        throw ModeMismatch("exact band needs s_min > 0 and nu > 1");
    gate_profile(profile);

    ConfidenceBand band;
    band.kind = BandKind::exact;
    band.diagnostics = estimate_smoothness(obs, params, n);
    auto ex = j_ex_hat(band.diagnostics, params.lambda_low(), 1.0, n, params);
    int level = ex.level;
    if (level > obs.hat.max_level()) {
        level = obs.hat.max_level();
        band.level_clamped = true;
    }
    band.level_clamped = band.level_clamped || ex.clamped;
    band.chosen_level = level;
    band.center = truncated_estimate(obs, level);
    // the centre spans a space of dimension 2^{level+1}; the calibrated
    // variance constants take that index
    band.r1 = radius_r1(level + 1, params.gamma, n, profile);
    band.radius = band.r1;
    band.gamma_effective = params.gamma;
    return band;
}

ConfidenceBand build_adaptive_band(const NoisyCoefficients& obs,
                                   const BandParameters& params,
                                   std::uint64_t n,
                                   const ScalingProfile& profile) {
    params.validate();
    if (!params.adaptive_mode())
        throw ModeMismatch("adaptive band needs s_min = 0 and nu = 1");
    gate_profile(profile);

    ConfidenceBand band;
    band.kind = BandKind::adaptive;
    band.diagnostics = estimate_smoothness(obs, params, n);
    const int j = band.diagnostics.j_ad_hat;
    band.chosen_level = j;
    band.center = truncated_estimate(obs, j);
    const int levels = params.j_max(n) - params.j_min(n) + 1;
    band.gamma_effective = params.gamma / static_cast<double>(levels);
    band.r1 = radius_r1(j + 1, band.gamma_effective, n, profile);
    const auto tail = radius_r2_r3(j, band.diagnostics, n, params, profile);
    band.r2 = tail.r2;
    band.r3 = tail.r3;
    band.radius = band.r1 + band.r2 + band.r3;
    return band;
}

bool band_contains(const ConfidenceBand& band, const CoefficientField& f,
                   const ScalingProfile& profile, int grid_depth) {
    if (std::isinf(band.radius)) return true;
    return sup_norm_distance(f, band.center, profile, grid_depth) <=
           band.radius;
}

std::string band_to_json(const ConfidenceBand& band) {
    nlohmann::json j;
    j["kind"] = to_string(band.kind);
    j["chosen_level"] = band.chosen_level;
    j["radius"] = std::isinf(band.radius) ? -1.0 : band.radius;
    j["radius_infinite"] = std::isinf(band.radius);
    j["R1"] = band.r1;
    j["R2"] = band.r2;
    j["R3"] = std::isinf(band.r3) ? -1.0 : band.r3;
    j["gamma_effective"] = band.gamma_effective;
    j["level_clamped"] = band.level_clamped;
    j["diagnostics"] = nlohmann::json::parse(estimate_to_json(band.diagnostics));
    return j.dump();
}

}  // namespace ssband
