#pragma once

#include <cstdint>
#include <string>

#include "ssband/expand.hpp"
#include "ssband/field.hpp"
#include "ssband/wavelet.hpp"

namespace ssband {

struct NotADensity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DesignTooCoarse : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LevelOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

enum class Model { white_noise, density, regression };

std::string to_string(Model m);
Model model_from_string(const std::string& name);

// Empirical wavelet coefficients of one observation draw, stored through a
// chosen top level.  Deterministic given (model, f, n, seed).
struct NoisyCoefficients {
    Model model = Model::white_noise;
    std::uint64_t n = 0;
    double sigma = 0.0;  // regression noise scale
    CoefficientField hat;
    std::uint64_t seed = 0;
};

// beta_hat = beta + n^{-1/2} Z with independent standard normals, the exact
// coefficient law of the continuous-observation model.
NoisyCoefficients observe_white_noise(const CoefficientField& f,
                                      std::uint64_t n, int top_level,
                                      std::uint64_t seed);

// n i.i.d. draws from the density f by inverse-CDF sampling on a dyadic
// grid of depth top_level + 3; beta_hat_{j,k} = mean of psi_{j,k}(X_i).
NoisyCoefficients observe_density(const CoefficientField& f,
                                  const ScalingProfile& profile,
                                  std::uint64_t n, int top_level,
                                  std::uint64_t seed);

// Fixed design x_i = i/n, Y_i = f(x_i) + sigma eps_i, and
// beta_hat_{j,k} = mean of psi_{j,k}(x_i) Y_i.
NoisyCoefficients observe_regression(const CoefficientField& f,
                                     const ScalingProfile& profile,
                                     std::uint64_t n, double sigma,
                                     int top_level, std::uint64_t seed);

// Truncated empirical expansion: levels j0..j of the empirical field.
CoefficientField truncated_estimate(const NoisyCoefficients& obs, int j);

std::string noisy_to_json(const NoisyCoefficients& obs);

}  // namespace ssband
