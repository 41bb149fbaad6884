#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ssband/filters.hpp"

namespace ssband {

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Dyadic-grid evaluations of phi, psi, phi' on [1-K, K] (spacing 2^-depth)
// plus every basis-dependent constant the bands need.  Values at dyadic
// points come from the exact two-scale recursion, so refining the depth
// never changes previously computed samples.
class ScalingProfile {
  public:
    FilterBank bank;
    int depth = 0;
    std::vector<double> phi;   // index i <-> x = (1-K) + i * 2^-depth
    std::vector<double> psi;
    std::vector<double> dphi;  // central differences with Richardson step

    // constants (filled by compute_constants)
    int j0 = 0;
    int sigma_grid_depth = 14;
    std::vector<double> sigma2;      // on [0,1), spacing 2^-sigma_grid_depth
    double t0 = 0.0;
    double sigma2_max = 0.0;
    double sigma2_curvature = 0.0;
    double upsilon = 0.0;            // root reading of the normaliser
    double upsilon_squared_reading = 0.0;
    double tau = 0.0;
    double psi_sup = 0.0;
    bool constants_ready = false;

    int support() const { return bank.support; }
    int order() const { return bank.vanishing_moments; }
    double grid_step() const { return std::ldexp(1.0, -depth); }

    // phi/psi at x in [1-K, K] coordinates; linear interpolation between
    // grid samples, zero outside the support.
    double phi_at(double x) const { return interp(phi, x); }
    double psi_at(double x) const { return interp(psi, x); }
    double dphi_at(double x) const { return interp(dphi, x); }

    // exact sample at x = p * 2^-q, q <= depth
    double phi_dyadic(std::int64_t p, int q) const {
        return dyadic(phi, p, q);
    }
    double psi_dyadic(std::int64_t p, int q) const {
        return dyadic(psi, p, q);
    }

    double sigma2_at(double t) const;  // 1-periodic variance profile

  private:
    double interp(const std::vector<double>& v, double x) const;
    double dyadic(const std::vector<double>& v, std::int64_t p, int q) const;
};

struct Assumption2Report {
    bool unique_max = false;
    bool curvature_negative = false;
    double margin = 0.0;  // gap to the best competing grid value away from t0

    bool pass() const { return unique_max && curvature_negative; }
};

// Exact dyadic refinement of phi, psi and finite-difference phi'.
// depth >= 6.  Throws NonConvergence when the integer-point system is
// degenerate or the partition-of-unity residual exceeds 1e-6 at depth >= 12.
ScalingProfile cascade_evaluate(const FilterBank& bank, int depth);

// Fills sigma2, t0, sigma2_max, curvature, upsilon, tau for the given
// minimum resolution level.
void compute_constants(ScalingProfile& profile, int j0);

Assumption2Report verify_assumption2(const ScalingProfile& profile,
                                     double tolerance);

// Periodized basis function: phi_{j0,k} when j == j0, psi_{j,k} when
// j > j0.  t in [0,1], 0 <= k < 2^j.
double evaluate_basis_function(const ScalingProfile& profile, int j,
                               std::int64_t k, double t);

// sup over a grid of 2^{-j/2} sum_k |psi^per_{j,k}(t)|; tau is this value
// at j = j0 + 1.
double periodized_abs_sum_sup(const ScalingProfile& profile, int level);

// Trapezoid inner product of two periodized basis functions on a
// 2^grid_depth grid (test oracle for orthonormality).
double basis_inner_product(const ScalingProfile& profile, int j1,
                           std::int64_t k1, int j2, std::int64_t k2,
                           int grid_depth);

// Trapezoid moment integral of psi over its support: int x^i psi(x) dx.
double psi_moment(const ScalingProfile& profile, int i);

// Constants plus downsampled phi/psi tables, for golden-file comparisons.
std::string profile_to_json(const ScalingProfile& profile);

}  // namespace ssband
