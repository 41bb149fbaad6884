#include "ssband/estimators.hpp"

#include <algorithm>
#include <limits>

#include "json.hpp"

namespace ssband {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

double log_n(std::uint64_t n) { return std::log(static_cast<double>(n)); }

}  // namespace

int BandParameters::j_min(std::uint64_t n) const {
    const double target =
        std::log2(static_cast<double>(n) / log_n(n)) / (2.0 * n_moments + 1.0);
    const int sched = static_cast<int>(std::ceil(target));
    return std::max({j0, min_level_floor, sched});
}

int BandParameters::j_max(std::uint64_t n) const {
    return static_cast<int>(
        std::floor(std::log2(static_cast<double>(n) / log_n(n))));
}

int BandParameters::u_n(std::uint64_t n) const {
    return static_cast<int>(std::ceil(std::log2(log_n(n))));
}

void BandParameters::validate() const {
    if (!(lambda > kSqrt2)) throw std::invalid_argument("need lambda > sqrt(2)");
    if (!(delta > 0.0 && delta <= kSqrt2))
        throw std::invalid_argument("need delta in (0, sqrt(2)]");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("need gamma in (0,1)");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("need epsilon in (0,1)");
    if (rho < 2) throw std::invalid_argument("need rho >= 2");
    if (nu < 1.0) throw std::invalid_argument("need nu >= 1");
    if (s_min < 0.0 || s_min > s_max)
        throw std::invalid_argument("need 0 <= s_min <= s_max");
}

double threshold_scale(std::uint64_t n, double mu) {
    if (n < 3) throw std::invalid_argument("need n >= 3");
    return std::sqrt(std::pow(log_n(n), mu) / static_cast<double>(n));
}

namespace {

double level_sup(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

int j_ad_hat(const NoisyCoefficients& obs, double kappa, double mu,
             const BandParameters& params) {
    const int lo = params.j_min(obs.n);
    const int hi = params.j_max(obs.n);
    if (lo > hi)
        throw TooFewLevels("j_min(n) > j_max(n); n below the level schedule");
    if (obs.hat.max_level() < hi)
        throw InvalidRange("observation not stored through j_max(n)");
    const double bar = kappa * threshold_scale(obs.n, mu);
    for (int j = hi; j > lo; --j)
        if (level_sup(obs.hat.level(j)) >= bar) return j;
    return lo;
}

NormBracket norm_bracket(const NoisyCoefficients& obs, double s, int i, int j,
                         std::uint64_t n) {
    if (i < obs.hat.j0() || j > obs.hat.max_level() || i > j)
        throw InvalidRange("bracket range outside stored levels");
    const double slack = kSqrt2 * threshold_scale(n, 1.0);
    NormBracket out;
    for (int l = i; l <= j; ++l) {
        const double weight =
            (l == obs.hat.j0()) ? 1.0 : std::exp2(l * (s + 0.5));
        const double sup = level_sup(obs.hat.level(l));
        out.lower = std::max(out.lower, weight * std::max(0.0, sup - slack));
        out.upper = std::max(out.upper, weight * (sup + slack));
    }
    return out;
}

SmoothnessEstimate estimate_smoothness(const NoisyCoefficients& obs,
                                       const BandParameters& params,
                                       std::uint64_t n) {
    params.validate();
    SmoothnessEstimate est;
    est.j1 = params.rho * params.j0;
    if (params.j_min(n) < params.rho * est.j1)
        throw TooFewLevels("j_min(n) < rho * j1; raise n or min_level_floor");
    est.j_ad_hat = j_ad_hat(obs, params.lambda, params.nu, params);
    est.j2 = est.j_ad_hat / params.rho;
    est.j3 = est.j_ad_hat;

    const int j0 = params.j0;
    auto ratio = [&](double s) {
        const auto den = norm_bracket(obs, s, j0, est.j1, n);
        const auto num = norm_bracket(obs, s, est.j2, est.j3, n);
        if (den.lower == 0.0) return std::numeric_limits<double>::infinity();
        return num.upper / den.lower;
    };

    const double eps = params.epsilon;
    double s_hat;
    if (ratio(params.s_min) >= eps) {
        s_hat = params.s_min;
    } else if (ratio(params.s_max) < eps) {
        s_hat = params.s_max;
    } else {
        double lo = params.s_min, hi = params.s_max;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (ratio(mid) >= eps ? hi : lo) = mid;
        }
        s_hat = hi;
    }
    est.s_hat = s_hat;
    est.denominator_zero =
        norm_bracket(obs, s_hat, j0, est.j1, n).lower == 0.0;
    est.r_curve_at_s_hat = ratio(s_hat);
    est.m_hat = norm_bracket(obs, s_hat, j0, est.j1, n).upper / eps;
    return est;
}

LevelChoice j_cl_hat(const SmoothnessEstimate& est, double kappa, double mu,
                     std::uint64_t n, const BandParameters& params) {
    LevelChoice out;
    const int lo = params.j_min(n);
    const double ratio = est.m_hat / (kappa * threshold_scale(n, mu));
    if (!(ratio > 1.0)) {
        out.level = lo;
        out.nonpositive_ratio = true;
        return out;
    }
    const int raw =
        static_cast<int>(std::floor(std::log2(ratio) / (est.s_hat + 0.5)));
    out.level = std::max(lo, raw);
    if (out.level > params.storage_ceiling) {
        out.level = params.storage_ceiling;
        out.clamped = true;
    }
    return out;
}

LevelChoice j_ex_hat(const SmoothnessEstimate& est, double kappa, double mu,
                     std::uint64_t n, const BandParameters& params) {
    LevelChoice cl = j_cl_hat(est, kappa, mu, n, params);
    LevelChoice out;
    out.nonpositive_ratio = cl.nonpositive_ratio;
    const int bump = static_cast<int>(
        std::ceil(std::log2(static_cast<double>(std::max(1, cl.level)))));
    out.level = cl.level + bump + params.u_n(n);
    if (out.level > params.storage_ceiling) {
        out.level = params.storage_ceiling;
        out.clamped = true;
    }
    return out;
}

std::string estimate_to_json(const SmoothnessEstimate& est) {
    nlohmann::json j;
    j["s_hat"] = est.s_hat;
    j["M_hat"] = est.m_hat;
    j["j1"] = est.j1;
    j["j2"] = est.j2;
    j["j3"] = est.j3;
    j["j_ad_hat"] = est.j_ad_hat;
    j["R_at_s_hat"] = est.r_curve_at_s_hat;
    j["flags"] =
        nlohmann::json{{"denominator_zero", est.denominator_zero}};
    return j.dump();
}

}  // namespace ssband
