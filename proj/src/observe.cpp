#include "ssband/observe.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "ssband/rng.hpp"

namespace ssband {

std::string to_string(Model m) {
    switch (m) {
        case Model::white_noise: return "white_noise";
        case Model::density: return "density";
        case Model::regression: return "regression";
    }
    return "?";
}

Model model_from_string(const std::string& name) {
    if (name == "white_noise") return Model::white_noise;
    if (name == "density") return Model::density;
    if (name == "regression") return Model::regression;
    throw std::invalid_argument("unknown observation model: " + name);
}

NoisyCoefficients observe_white_noise(const CoefficientField& f,
                                      std::uint64_t n, int top_level,
                                      std::uint64_t seed) {
    if (top_level > f.max_level())
        throw InsufficientLevels("f not stored through the requested level");
    NoisyCoefficients obs;
    obs.model = Model::white_noise;
    obs.n = n;
    obs.seed = seed;
    obs.hat = CoefficientField(f.j0(), top_level);
    RandomStream rng(seed);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = f.j0(); j <= top_level; ++j) {
        const auto& src = f.level(j);
        auto& dst = obs.hat.level(j);
        for (std::size_t k = 0; k < dst.size(); ++k)
            dst[k] = src[k] + scale * rng.normal();
    }
    return obs;
}

namespace {

// Scatter one observation point into all empirical coefficients:
// hat[j][k] += w * B_{j,k}(x) for the few k whose support covers x.
void scatter_point(CoefficientField& hat, const ScalingProfile& profile,
                   double x, double w) {
    for (int j = hat.j0(); j <= hat.max_level(); ++j) {
        const bool scaling = (j == hat.j0());
        const double u = std::ldexp(x, j);
        const double amp = w * std::sqrt(std::ldexp(1.0, j));
        const std::int64_t period = std::int64_t{1} << j;
        const auto q_lo =
            static_cast<std::int64_t>(std::ceil(u - profile.support()));
        const auto q_hi =
            static_cast<std::int64_t>(std::floor(u + profile.support() - 1));
        auto& row = hat.level(j);
        for (std::int64_t q = q_lo; q <= q_hi; ++q) {
            std::int64_t k = q % period;
            if (k < 0) k += period;
            const double v = scaling ? profile.phi_at(u - double(q))
                                     : profile.psi_at(u - double(q));
            row[static_cast<std::size_t>(k)] += amp * v;
        }
    }
}

}  // namespace

NoisyCoefficients observe_density(const CoefficientField& f,
                                  const ScalingProfile& profile,
                                  std::uint64_t n, int top_level,
                                  std::uint64_t seed) {
    const int grid_depth = top_level + 3;
    const auto vals = expand_on_grid(f, profile, grid_depth);
    const std::size_t cells = vals.size() - 1;
    double integral = 0.0;
    std::vector<double> cdf(vals.size(), 0.0);
    for (std::size_t i = 0; i < cells; ++i) {
        const double cell = 0.5 * (vals[i] + vals[i + 1]);
        if (vals[i] < -1e-9 || cell < 0.0)
            throw NotADensity("negative values on the sampling grid");
        integral += cell;
        cdf[i + 1] = integral;
    }
    integral /= static_cast<double>(cells);
    if (std::abs(integral - 1.0) > 1e-6)
        throw NotADensity("grid integral " + std::to_string(integral));

    NoisyCoefficients obs;
    obs.model = Model::density;
    obs.n = n;
    obs.seed = seed;
    obs.hat = CoefficientField(f.j0(), top_level);
    RandomStream rng(seed);
    const double total = cdf.back();
    const double h = 1.0 / static_cast<double>(cells);
    const double w = 1.0 / static_cast<double>(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double target = rng.uniform() * total;
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), target);
        std::size_t cell = it == cdf.begin()
                               ? 0
                               : static_cast<std::size_t>(it - cdf.begin()) - 1;
        cell = std::min(cell, cells - 1);
        const double mass = cdf[cell + 1] - cdf[cell];
        const double frac = mass > 0.0 ? (target - cdf[cell]) / mass : 0.5;
        scatter_point(obs.hat, profile,
                      (static_cast<double>(cell) + frac) * h, w);
    }
    return obs;
}

NoisyCoefficients observe_regression(const CoefficientField& f,
                                     const ScalingProfile& profile,
                                     std::uint64_t n, double sigma,
                                     int top_level, std::uint64_t seed) {
    if (n < (std::uint64_t{1} << top_level))
        throw DesignTooCoarse("need n >= 2^top_level design points");
    NoisyCoefficients obs;
    obs.model = Model::regression;
    obs.n = n;
    obs.sigma = sigma;
    obs.seed = seed;
    obs.hat = CoefficientField(f.j0(), top_level);
    std::vector<double> xs(n);
    for (std::uint64_t i = 0; i < n; ++i)
        xs[i] = static_cast<double>(i + 1) / static_cast<double>(n);
    const auto fx = expand_at_points(f, profile, xs);
    RandomStream rng(seed);
    const double w = 1.0 / static_cast<double>(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double y = fx[i] + sigma * rng.normal();
        scatter_point(obs.hat, profile, xs[i], w * y);
    }
    return obs;
}

CoefficientField truncated_estimate(const NoisyCoefficients& obs, int j) {
    if (j < obs.hat.j0() || j > obs.hat.max_level())
        throw LevelOutOfRange("truncation level outside stored range");
    CoefficientField out(obs.hat.j0(), j);
    for (int l = obs.hat.j0(); l <= j; ++l) out.level(l) = obs.hat.level(l);
    return out;
}

std::string noisy_to_json(const NoisyCoefficients& obs) {
    nlohmann::json j = nlohmann::json::parse(field_to_json(obs.hat));
    j["model"] = to_string(obs.model);
    j["n"] = obs.n;
    j["sigma"] = obs.sigma;
    j["seed"] = obs.seed;
    return j.dump();
}

}  // namespace ssband
