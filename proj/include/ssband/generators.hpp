#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ssband/field.hpp"
#include "ssband/wavelet.hpp"

namespace ssband {

struct ShiftCollision : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ScheduleTooShort : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateBase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Random draw from the coefficient measure with independent
// alpha_k ~ M 2^{-j0(s+1/2)} U[-1,1], beta_{j,k} ~ M 2^{-j(s+1/2)} U[-1,1].
CoefficientField sample_pi(const SmoothnessClass& cls, int j0, int max_level,
                           std::uint64_t seed);

// Sparse ladder f = sum_i M 2^{-j_i(s+1/2)} psi_{j_i, 2^{j_i - 1}} with
// j_i = rho^i j0, truncated at max_level.  Self-similar but with wavelet
// energy vanishing between ladder levels.
CoefficientField prop1_counterexample(const SmoothnessClass& cls, int j0,
                                      int max_level);

// Two-point testing pair: f0 is the ladder plus an alpha-level term,
// fk adds one extra coefficient M 2^{-j(s+1/2)} at (j, k).  k must be an
// interior shift (margin = vanishing moments of the basis in use).
std::pair<CoefficientField, CoefficientField> minimax_pair(
    const SmoothnessClass& cls, int j0, int j, std::int64_t k, int max_level,
    int interior_margin);

struct AdversarialSequence {
    std::vector<CoefficientField> fields;  // f_1 .. f_m, truncated
    std::vector<double> s_values;          // s_1 .. s_m
    std::vector<double> t_values;          // t_1 .. t_m
    std::vector<std::int64_t> ladder;      // j_1, j_2, ... (j_0 = base level)
    std::vector<int> spike_index;          // i_1 .. i_m into the ladder
    std::vector<int> rho_at_step;          // schedule entry used per step

    // window width at level j, step function derived from the schedule
    int rho_of_level(int j) const;
};

// Hypothesis ladder of the weak self-similarity construction: block
// exponents s_l between spike indices, spikes of matched magnitude at
// interior shifts, and the (s_m, t_m) recursions driven by the integer
// ladder.  rho_schedule must be nondecreasing; entry i builds ladder level
// i+1.  Throws ScheduleTooShort when no admissible first spike index
// exists within the schedule.
AdversarialSequence adversarial_c1_sequence(double hoelder_bound, double s_min,
                                            double s_max, double epsilon,
                                            const std::vector<int>& rho_schedule,
                                            int count, int j0, int max_level,
                                            int interior_margin);

// 1 + c * (base demeaned at the alpha level), with c maximal such that the
// grid minimum stays above floor_value; integrates to one exactly.
CoefficientField make_density(const CoefficientField& base,
                              const ScalingProfile& profile,
                              double floor_value, int grid_depth);

}  // namespace ssband
