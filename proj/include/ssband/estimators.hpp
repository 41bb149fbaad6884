#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "ssband/observe.hpp"

namespace ssband {

struct TooFewLevels : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ModeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tuning parameters of the band construction, together with the level
// schedules.  min_level_floor raises j_min(n) by a constant, which only
// changes the constant inside the 2^{j_min} ~ (n/log n)^{1/(2N+1)}
// asymptotics; desk-scale runs need it so that j_min >= rho^2 j0.
struct BandParameters {
    double gamma = 0.05;
    double epsilon = 0.5;
    int rho = 2;
    double lambda = 2.0;
    double nu = 1.0;
    double delta = 0.5;
    double s_min = 0.0;
    double s_max = 5.5;
    int n_moments = 6;  // vanishing moments of the basis in use
    int j0 = 1;
    int min_level_floor = 0;
    int storage_ceiling = 26;

    double lambda_bar() const { return lambda + delta; }
    double lambda_low() const { return lambda - std::sqrt(2.0); }

    int j_min(std::uint64_t n) const;
    int j_max(std::uint64_t n) const;
    int u_n(std::uint64_t n) const;  // 2^{u_n} ~ log n

    bool exact_mode() const { return s_min > 0.0 && nu > 1.0; }
    bool adaptive_mode() const { return s_min == 0.0 && nu == 1.0; }
    void validate() const;
};

struct SmoothnessEstimate {
    double s_hat = 0.0;
    double m_hat = 0.0;
    int j1 = 0, j2 = 0, j3 = 0;
    int j_ad_hat = 0;
    double r_curve_at_s_hat = 0.0;
    bool denominator_zero = false;
};

struct LevelChoice {
    int level = 0;
    bool clamped = false;           // hit the storage ceiling
    bool nonpositive_ratio = false; // M_hat <= kappa c_{n,mu}
};

// c_{n,mu} = (n / (log n)^mu)^{-1/2}, natural logarithm.
double threshold_scale(std::uint64_t n, double mu);

// Largest level in (j_min, j_max] whose empirical coefficients reach the
// threshold kappa c_{n,mu}; j_min when none does.  Comparison is >=.
int j_ad_hat(const NoisyCoefficients& obs, double kappa, double mu,
             const BandParameters& params);

struct NormBracket {
    double lower = 0.0;
    double upper = 0.0;
};

// sup_{i<=l<=j,k} 2^{l(s+1/2)} (|beta_hat| -+ sqrt(2) c_{n,1}) with the
// level-j0 row entering unweighted, mirroring the truncated norm.
NormBracket norm_bracket(const NoisyCoefficients& obs, double s, int i, int j,
                         std::uint64_t n);

// s_hat = inf({s_max} u {s in [s_min, s_max) : R(s) >= eps}) by bisection
// on the monotone curve R(s) = upper(j2, j3) / lower(j0, j1);
// M_hat = eps^{-1} upper_{j0,j1}(s_hat).
SmoothnessEstimate estimate_smoothness(const NoisyCoefficients& obs,
                                       const BandParameters& params,
                                       std::uint64_t n);

// max(j_min, floor(log2(M_hat / kappa c_{n,mu}) / (s_hat + 1/2)))
LevelChoice j_cl_hat(const SmoothnessEstimate& est, double kappa, double mu,
                     std::uint64_t n, const BandParameters& params);

// j_cl + ceil(log2 j_cl) + u_n
LevelChoice j_ex_hat(const SmoothnessEstimate& est, double kappa, double mu,
                     std::uint64_t n, const BandParameters& params);

std::string estimate_to_json(const SmoothnessEstimate& est);

}  // namespace ssband
