#pragma once

#include <cstdint>
#include <string>

#include "ssband/estimators.hpp"

namespace ssband {

struct Assumption2Failed : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class BandKind { exact, adaptive };

std::string to_string(BandKind k);

struct BandConstants {
    double a = 0.0;  // sqrt(2 log(2) j)
    double b = 0.0;  // a - (log(pi log 2) + log j - log(1+upsilon)/2) / (2a)
    double c = 0.0;  // sigma_bar n^{-1/2} 2^{j/2}
    double x = 0.0;  // -log(-log(1-gamma))
};

struct ConfidenceBand {
    BandKind kind = BandKind::adaptive;
    CoefficientField center;
    int chosen_level = 0;
    double radius = 0.0;  // +inf when s_hat = 0 in adaptive mode
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    double gamma_effective = 0.0;
    SmoothnessEstimate diagnostics;
    bool level_clamped = false;  // undersmoothing exceeded stored levels
};

BandConstants band_constants(int j, double gamma, std::uint64_t n,
                             const ScalingProfile& profile);

// R_1(j, gamma) = c(j) (x(gamma)/a(j) + b(j))
double radius_r1(int j, double gamma, std::uint64_t n,
                 const ScalingProfile& profile);

struct TailRadii {
    double r2 = 0.0;
    double r3 = 0.0;  // +inf when s_hat == 0
    int l = 0;        // max(j, min(j_cl_hat(lambda_bar, 1), j_max(n)))
};

TailRadii radius_r2_r3(int j, const SmoothnessEstimate& est, std::uint64_t n,
                       const BandParameters& params,
                       const ScalingProfile& profile);

// Undersmoothed band with radius R_1(j_ex_hat, gamma); requires exact-mode
// parameters (s_min > 0, nu > 1) and a basis passing the variance-profile
// assumption.
ConfidenceBand build_exact_band(const NoisyCoefficients& obs,
                                const BandParameters& params, std::uint64_t n,
                                const ScalingProfile& profile);

// Lepskii-centred band with radius R_1(j_ad_hat, gamma_n) + R_2 + R_3 and
// the Bonferroni level gamma_n = gamma / (j_max - j_min + 1).
ConfidenceBand build_adaptive_band(const NoisyCoefficients& obs,
                                   const BandParameters& params,
                                   std::uint64_t n,
                                   const ScalingProfile& profile);

bool band_contains(const ConfidenceBand& band, const CoefficientField& f,
                   const ScalingProfile& profile, int grid_depth);

std::string band_to_json(const ConfidenceBand& band);

}  // namespace ssband
