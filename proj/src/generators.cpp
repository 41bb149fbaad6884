#include "ssband/generators.hpp"

#include <algorithm>
#include <cmath>

#include "ssband/expand.hpp"
#include "ssband/rng.hpp"

namespace ssband {

CoefficientField sample_pi(const SmoothnessClass& cls, int j0, int max_level,
                           std::uint64_t seed) {
    cls.validate();
    CoefficientField f(j0, max_level);
    RandomStream rng(seed);
    for (int j = j0; j <= max_level; ++j) {
        const double scale =
            cls.hoelder_bound * std::exp2(-j * (cls.s + 0.5));
        for (double& c : f.level(j)) c = scale * rng.uniform_symmetric();
    }
    return f;
}

CoefficientField prop1_counterexample(const SmoothnessClass& cls, int j0,
                                      int max_level) {
    cls.validate();
    if (cls.rho <= 1) throw std::invalid_argument("need rho > 1");
    CoefficientField f(j0, max_level);
    std::int64_t ladder = j0;
    for (;;) {
        ladder *= cls.rho;
        if (ladder > max_level) break;
        const int j = static_cast<int>(ladder);
        f.coeff(j, std::int64_t{1} << (j - 1)) =
            cls.hoelder_bound * std::exp2(-j * (cls.s + 0.5));
    }
    return f;
}

std::pair<CoefficientField, CoefficientField> minimax_pair(
    const SmoothnessClass& cls, int j0, int j, std::int64_t k, int max_level,
    int interior_margin) {
    cls.validate();
    if (j <= j0 || j > max_level)
        throw InvalidRange("spike level outside (j0, J]");
    if (k < interior_margin || k >= (std::int64_t{1} << j) - interior_margin)
        throw InvalidRange("spike shift is not interior");
    bool on_ladder = false;
    for (std::int64_t l = j0 * static_cast<std::int64_t>(cls.rho);
         l <= max_level; l *= cls.rho)
        if (l == j) on_ladder = true;
    if (on_ladder && k == (std::int64_t{1} << (j - 1)))
        throw ShiftCollision("shift collides with the ladder coefficient");

    CoefficientField f0 = prop1_counterexample(cls, j0, max_level);
    f0.coeff(j0, 0) = cls.hoelder_bound * std::exp2(-j0 * (cls.s + 0.5));
    CoefficientField fk = f0;
    fk.coeff(j, k) += cls.hoelder_bound * std::exp2(-j * (cls.s + 0.5));
    return {std::move(f0), std::move(fk)};
}

int AdversarialSequence::rho_of_level(int j) const {
    // step function: schedule entry i applies on the segment [j_i, j_{i+1})
    std::size_t i = 0;
    while (i + 1 < rho_at_step.size() && i < ladder.size() && j >= ladder[i])
        ++i;
    return rho_at_step.empty() ? 2 : rho_at_step[i];
}

AdversarialSequence adversarial_c1_sequence(double hoelder_bound, double s_min,
                                            double s_max, double epsilon,
                                            const std::vector<int>& rho_schedule,
                                            int count, int j0, int max_level,
                                            int interior_margin) {
    if (count < 1) throw std::invalid_argument("need count >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("need epsilon in (0,1)");
    if (!(0.0 <= s_min && s_min < s_max))
        throw std::invalid_argument("need 0 <= s_min < s_max");
    for (std::size_t i = 0; i + 1 < rho_schedule.size(); ++i)
        if (rho_schedule[i + 1] < rho_schedule[i] || rho_schedule[i] < 2)
            throw std::invalid_argument(
                "rho schedule must be nondecreasing, entries >= 2");

    const double log_inv_eps = std::log2(1.0 / epsilon);

    AdversarialSequence seq;
    seq.rho_at_step.assign(rho_schedule.begin(), rho_schedule.end());

    // integer ladder: j_1 = rho_0 j0, then j_{i+1} = rho_i j_i + 1
    std::vector<std::int64_t> ladder;
    {
        std::int64_t j = j0;
        for (std::size_t i = 0; i < rho_schedule.size(); ++i) {
            j = j * rho_schedule[i] + (i == 0 ? 0 : 1);
            if (j > (std::int64_t{1} << 40)) break;
            ladder.push_back(j);
        }
    }
    seq.ladder = ladder;

    // spike indices i_1, i_1 + 2, ...; i_1 must give t_1 > s_min, interior
    // center shifts from there on, and a nonempty spike-shift choice
    const auto interior_ok = [&](std::int64_t j) {
        if (j >= 62) return true;
        const std::int64_t center = std::int64_t{1} << (j - 1);
        return center - 1 >= interior_margin &&
               center + 1 < (std::int64_t{1} << j) - interior_margin;
    };
    int i1 = -1;
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
        const double s1 =
            s_max - (1.0 / static_cast<double>(ladder[i]) -
                     1.0 / static_cast<double>(ladder[i + 1])) *
                        log_inv_eps;
        const double t1 =
            s1 - log_inv_eps / static_cast<double>(ladder[i + 1]);
        if (t1 > s_min && interior_ok(ladder[i])) {
            i1 = static_cast<int>(i) + 1;  // ladder[] is 0-based at j_1
            break;
        }
    }
    if (i1 < 0)
        throw ScheduleTooShort(
            "no admissible first spike index in the schedule");
    const int needed = i1 + 2 * (count - 1) + 1;  // ladder index i_m + 1
    if (needed >= static_cast<int>(ladder.size()) + 1)
        throw ScheduleTooShort("schedule does not reach spike " +
                               std::to_string(count));

    for (int l = 0; l < count; ++l) seq.spike_index.push_back(i1 + 2 * l);

    auto ladder_level = [&](int i) { return ladder[static_cast<std::size_t>(i - 1)]; };

    // s_m / t_m recursions on the integer ladder
    std::vector<double> s_vals{s_max};  // s_0
    std::vector<double> t_vals{s_min};  // t_0
    for (int m = 1; m <= count; ++m) {
        const int im = seq.spike_index[static_cast<std::size_t>(m - 1)];
        const double jm = static_cast<double>(ladder_level(im));
        const double jm1 = static_cast<double>(ladder_level(im + 1));
        s_vals.push_back(s_vals.back() -
                         (1.0 / jm - 1.0 / jm1) * log_inv_eps);
        t_vals.push_back(s_vals.back() - log_inv_eps / jm1);
    }
    seq.s_values.assign(s_vals.begin() + 1, s_vals.end());
    seq.t_values.assign(t_vals.begin() + 1, t_vals.end());

    // truncated fields
    for (int m = 1; m <= count; ++m) {
        CoefficientField f(j0, max_level);
        // alpha-level block coefficient at the center shift
        f.coeff(j0, (std::int64_t{1} << j0) / 2) =
            hoelder_bound * std::exp2(-j0 * (s_max + 0.5));
        for (std::size_t i = 0; i < ladder.size(); ++i) {
            if (ladder[i] > max_level) break;
            const int idx = static_cast<int>(i) + 1;
            // block exponent: s_l for i_l < idx <= i_{l+1} with l < m,
            // then the tail exponent s_m past the last spike of this field
            double expo = s_vals[static_cast<std::size_t>(m)];
            for (int l = 0; l < m; ++l) {
                if (idx <= seq.spike_index[static_cast<std::size_t>(l)]) {
                    expo = s_vals[static_cast<std::size_t>(l)];
                    break;
                }
            }
            const int j = static_cast<int>(ladder[i]);
            f.coeff(j, std::int64_t{1} << (j - 1)) =
                hoelder_bound * std::exp2(-j * (expo + 0.5));
        }
        for (int l = 1; l <= m; ++l) {
            const std::int64_t jl =
                ladder_level(seq.spike_index[static_cast<std::size_t>(l - 1)]);
            if (jl > max_level) break;
            const int j = static_cast<int>(jl);
            f.coeff(j, (std::int64_t{1} << (j - 1)) + 1) =
                hoelder_bound *
                std::exp2(-j * (s_vals[static_cast<std::size_t>(l)] + 0.5));
        }
        seq.fields.push_back(std::move(f));
    }
    return seq;
}

CoefficientField make_density(const CoefficientField& base,
                              const ScalingProfile& profile,
                              double floor_value, int grid_depth) {
    if (base.is_zero()) throw DegenerateBase("zero base field");
    if (!(floor_value > 0.0))
        throw std::invalid_argument("floor must be positive");

    CoefficientField g = base;
    double mean = 0.0;
    for (double a : g.alpha()) mean += a;
    mean /= static_cast<double>(g.alpha().size());
    for (double& a : g.alpha()) a -= mean;

    const auto vals = expand_on_grid(g, profile, grid_depth);
    double lo = vals[0];
    for (double v : vals) lo = std::min(lo, v);
    if (lo > -1e-12)
        throw DegenerateBase("base has no sign variation on the grid");
    const double c = (1.0 - floor_value) / (-lo);

    CoefficientField out(base.j0(), base.max_level());
    const double unit = std::exp2(-0.5 * base.j0());
    for (std::size_t k = 0; k < out.alpha().size(); ++k)
        out.alpha()[k] = unit + c * g.alpha()[k];
    for (int j = base.j0() + 1; j <= base.max_level(); ++j) {
        const auto& src = g.level(j);
        auto& dst = out.level(j);
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = c * src[k];
    }
    return out;
}

}  // namespace ssband
