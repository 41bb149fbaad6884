#include "ssband/expand.hpp"

#include <algorithm>
#include <cmath>

namespace ssband {

namespace {

// One periodized synthesis step: scaling row s at level j plus detail row d
// at level j+1 -> scaling row at level j+1.  Filters are used in [1-K, K]
// coordinates, so the two-scale relation reads
//   phi_{j,l} = sum_m h_{m+K-1} phi_{j+1, 2l+m},  m = -(K-1)..K.
std::vector<double> synthesis_step(const std::vector<double>& s,
                                   const std::vector<double>& d,
                                   const FilterBank& bank) {
    const std::int64_t half = static_cast<std::int64_t>(s.size());
    const std::int64_t full = 2 * half;
    const int len = bank.length();
    const int off = bank.support - 1;
    std::vector<double> out(static_cast<std::size_t>(full), 0.0);
    for (std::int64_t l = 0; l < half; ++l) {
        const double sv = s[static_cast<std::size_t>(l)];
        const double dv = d[static_cast<std::size_t>(l)];
        for (int k = 0; k < len; ++k) {
            std::int64_t idx = (2 * l + k - off) % full;
            if (idx < 0) idx += full;
            out[static_cast<std::size_t>(idx)] +=
                sv * bank.lowpass[k] + dv * bank.highpass[k];
        }
    }
    return out;
}

// Synthesis ladder for the coefficient system V_{j0} + W_{j0+1} + ... + W_J
// (the level-j row holds coefficients of psi_{j,k} in W_j; the basis has no
// W_{j0} row).  Returns scaling coefficients in V_{J+1}, or V_{j0} for an
// alpha-only field.
std::vector<double> scaling_row(const CoefficientField& f,
                                const ScalingProfile& profile,
                                int* top_level) {
    std::vector<double> s = f.alpha();
    if (f.max_level() == f.j0()) {
        *top_level = f.j0();
        return s;
    }
    const std::vector<double> no_details(s.size(), 0.0);
    s = synthesis_step(s, no_details, profile.bank);
    for (int j = f.j0() + 1; j <= f.max_level(); ++j)
        s = synthesis_step(s, f.level(j), profile.bank);
    *top_level = f.max_level() + 1;
    return s;
}

double gather(const std::vector<double>& s, const ScalingProfile& profile,
              int top_level, double u) {
    // f(t) = sum_q s[q mod 2^L] 2^{L/2} phi(u - q) with u = 2^L t
    const std::int64_t period = std::int64_t{1} << top_level;
    const int k_hi = profile.support();
    const auto q_lo = static_cast<std::int64_t>(std::ceil(u - k_hi));
    const auto q_hi = static_cast<std::int64_t>(std::floor(u + k_hi - 1));
    double acc = 0.0;
    for (std::int64_t q = q_lo; q <= q_hi; ++q) {
        std::int64_t w = q % period;
        if (w < 0) w += period;
        acc += s[static_cast<std::size_t>(w)] * profile.phi_at(u - double(q));
    }
    return acc * std::sqrt(std::ldexp(1.0, top_level));
}

}  // namespace

std::vector<double> expand_on_grid(const CoefficientField& f,
                                   const ScalingProfile& profile,
                                   int grid_depth) {
    int top = 0;
    const std::vector<double> s = scaling_row(f, profile, &top);
    const std::int64_t pts = std::int64_t{1} << grid_depth;
    std::vector<double> out(static_cast<std::size_t>(pts) + 1, 0.0);
    const double step = std::ldexp(1.0, top - grid_depth);
    for (std::int64_t i = 0; i < pts; ++i)
        out[static_cast<std::size_t>(i)] =
            gather(s, profile, top, static_cast<double>(i) * step);
    out[static_cast<std::size_t>(pts)] = out[0];
    return out;
}

std::vector<double> expand_at_points(const CoefficientField& f,
                                     const ScalingProfile& profile,
                                     const std::vector<double>& points) {
    int top = 0;
    const std::vector<double> s = scaling_row(f, profile, &top);
    std::vector<double> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        double t = points[i] - std::floor(points[i]);
        out[i] = gather(s, profile, top, std::ldexp(t, top));
    }
    return out;
}

double sup_norm_distance(const CoefficientField& f, const CoefficientField& g,
                         const ScalingProfile& profile, int grid_depth) {
    if (f.j0() != g.j0())
        throw InvalidRange("fields with different base levels");
    const int top = std::max(f.max_level(), g.max_level());
    CoefficientField diff(f.j0(), top);
    for (int j = f.j0(); j <= top; ++j) {
        auto& row = diff.level(j);
        if (j <= f.max_level()) {
            const auto& a = f.level(j);
            for (std::size_t k = 0; k < row.size(); ++k) row[k] = a[k];
        }
        if (j <= g.max_level()) {
            const auto& b = g.level(j);
            for (std::size_t k = 0; k < row.size(); ++k) row[k] -= b[k];
        }
    }
    const auto vals = expand_on_grid(diff, profile, grid_depth);
    double m = 0.0;
    for (double v : vals) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace ssband
