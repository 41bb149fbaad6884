#include "ssband/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "json.hpp"

namespace ssband {

namespace {

constexpr double kPartitionTol = 1e-6;

// Solve T v = v with sum(v) = 1, T[i][j] = sqrt(2) h_{2i-j} on the interior
// integer points 1..L-2 of the support [0, L-1].
std::vector<double> integer_values(const FilterBank& bank) {
    const int len = bank.length();
    const int m = len - 2;
    if (m <= 0) {
        // Haar fixture: indicator of [0,1), right-open
        return {1.0, 0.0};
    }
    const double rt2 = std::sqrt(2.0);
    std::vector<double> a(static_cast<std::size_t>(m) * (m + 1), 0.0);
    auto at = [&](int r, int c) -> double& {
        return a[static_cast<std::size_t>(r) * (m + 1) + c];
    };
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            const int k = 2 * i - j;
            double t = (k >= 0 && k < len) ? rt2 * bank.lowpass[k] : 0.0;
            if (i == j) t -= 1.0;
            at(i - 1, j - 1) = t;
        }
    }
    // replace the last equation by the normalisation sum(v) = 1
    for (int j = 0; j < m; ++j) at(m - 1, j) = 1.0;
    at(m - 1, m) = 1.0;

    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(at(r, col)) > std::abs(at(piv, col))) piv = r;
        if (std::abs(at(piv, col)) < 1e-14)
            throw NonConvergence("degenerate refinement system");
        if (piv != col)
            for (int c = col; c <= m; ++c) std::swap(at(piv, c), at(col, c));
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            const double f = at(r, col) / at(col, col);
            if (f == 0.0) continue;
            for (int c = col; c <= m; ++c) at(r, c) -= f * at(col, c);
        }
    }
    std::vector<double> v(len, 0.0);
    for (int i = 0; i < m; ++i) v[i + 1] = at(i, m) / at(i, i);
    return v;
}

}  // namespace

double ScalingProfile::interp(const std::vector<double>& v, double x) const {
    const double lo = 1.0 - support();
    const double pos = (x - lo) * std::ldexp(1.0, depth);
    if (pos <= 0.0 || pos >= static_cast<double>(v.size() - 1)) {
        // exact endpoints included, outside the support the value is 0
        if (pos == 0.0) return v.front();
        if (pos == static_cast<double>(v.size() - 1)) return v.back();
        return 0.0;
    }
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    return v[i] * (1.0 - frac) + v[i + 1] * frac;
}

double ScalingProfile::dyadic(const std::vector<double>& v, std::int64_t p,
                              int q) const {
    // x = p * 2^-q with q <= depth; shift into [1-K, K] array coordinates
    const std::int64_t idx =
        (p << (depth - q)) + (static_cast<std::int64_t>(support() - 1) << depth);
    if (idx < 0 || idx >= static_cast<std::int64_t>(v.size())) return 0.0;
    return v[static_cast<std::size_t>(idx)];
}

double ScalingProfile::sigma2_at(double t) const {
    t -= std::floor(t);
    double s = 0.0;
    const int k_lo = static_cast<int>(std::ceil(t - support()));
    const int k_hi = static_cast<int>(std::floor(t + support() - 1));
    for (int k = k_lo; k <= k_hi; ++k) {
        const double v = phi_at(t - k);
        s += v * v;
    }
    return s;
}

ScalingProfile cascade_evaluate(const FilterBank& bank, int depth) {
    if (depth < 6) throw std::invalid_argument("cascade depth must be >= 6");

    ScalingProfile prof;
    prof.bank = bank;
    prof.depth = depth;

    const int len = bank.length();
    const int width = len - 1;  // support length of phi in std coordinates
    const double rt2 = std::sqrt(2.0);

    std::vector<double> cur = integer_values(bank);
    for (int d = 1; d <= depth; ++d) {
        const std::int64_t n = static_cast<std::int64_t>(width) << d;
        std::vector<double> nxt(static_cast<std::size_t>(n) + 1, 0.0);
        const std::int64_t stride = std::int64_t{1} << (d - 1);
        for (std::int64_t i = 0; i <= n; ++i) {
            if ((i & 1) == 0) {
                nxt[static_cast<std::size_t>(i)] =
                    cur[static_cast<std::size_t>(i >> 1)];
                continue;
            }
            double acc = 0.0;
            for (int k = 0; k < len; ++k) {
                const std::int64_t src = i - k * stride;
                if (src < 0) break;  // k too large from here on
                if (src > static_cast<std::int64_t>(width) * stride) continue;
                acc += bank.lowpass[k] * cur[static_cast<std::size_t>(src)];
            }
            nxt[static_cast<std::size_t>(i)] = rt2 * acc;
        }
        cur.swap(nxt);
    }
    prof.phi = std::move(cur);

    // psi via the highpass two-scale relation, from the same phi samples:
    // psi(i 2^-d) = sqrt(2) sum_k g_k phi((2i - k 2^d) 2^-d)
    const std::int64_t n = static_cast<std::int64_t>(width) << depth;
    prof.psi.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::int64_t i = 0; i <= n; ++i) {
        double acc = 0.0;
        for (int k = 0; k < len; ++k) {
            const std::int64_t src = 2 * i - (static_cast<std::int64_t>(k) << depth);
            if (src < 0 || src > n) continue;
            acc += bank.highpass[k] * prof.phi[static_cast<std::size_t>(src)];
        }
        prof.psi[static_cast<std::size_t>(i)] = rt2 * acc;
    }

    // phi' by central differences with one Richardson step
    const double h = prof.grid_step();
    prof.dphi.assign(prof.phi.size(), 0.0);
    auto val = [&](std::int64_t i) -> double {
        return (i < 0 || i > n) ? 0.0 : prof.phi[static_cast<std::size_t>(i)];
    };
    for (std::int64_t i = 0; i <= n; ++i) {
        const double d1 = (val(i + 1) - val(i - 1)) / (2.0 * h);
        const double d2 = (val(i + 2) - val(i - 2)) / (4.0 * h);
        prof.dphi[static_cast<std::size_t>(i)] = (4.0 * d1 - d2) / 3.0;
    }

    // Convergence diagnostic: exact dyadic refinement leaves earlier samples
    // untouched, so we check the partition of unity on the final grid.
    if (depth >= 12) {
        double worst = 0.0;
        const std::int64_t per = std::int64_t{1} << depth;
        for (std::int64_t i = 0; i < per; ++i) {
            double s = 0.0;
            for (int k = 0; k < width; ++k) {
                const std::int64_t idx = i + (static_cast<std::int64_t>(k) << depth);
                s += prof.phi[static_cast<std::size_t>(idx)];
            }
            worst = std::max(worst, std::abs(s - 1.0));
        }
        if (worst > kPartitionTol)
            throw NonConvergence("partition-of-unity residual " +
                                 std::to_string(worst));
    }

    prof.psi_sup = 0.0;
    for (double v : prof.psi) prof.psi_sup = std::max(prof.psi_sup, std::abs(v));
    return prof;
}

namespace {

double golden_max(const ScalingProfile& prof, double lo, double hi) {
    const double gr = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = prof.sigma2_at(x1), f2 = prof.sigma2_at(x2);
    while (b - a > 1e-10) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = prof.sigma2_at(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = prof.sigma2_at(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

// 2^{-j/2} sum_k |psi^per_{j,k}(t)| equals sum_k |sum_m psi(2^j(t+m) - k)|
// in unnormalised psi values, so no level scaling appears here.
double periodized_abs_sum_sup(const ScalingProfile& profile, int level) {
    const std::int64_t shifts = std::int64_t{1} << level;
    const int rel_depth = std::min(12, profile.depth);
    const int probe_depth = level + rel_depth;
    const std::int64_t pts = std::int64_t{1} << probe_depth;
    const double scale = std::ldexp(1.0, level);
    double sup = 0.0;
    for (std::int64_t i = 0; i < pts; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(pts);
        double total = 0.0;
        for (std::int64_t k = 0; k < shifts; ++k) {
            // wraps m with 2^j(t+m) - k inside [1-K, K]
            const double base = scale * t - static_cast<double>(k);
            const int m_lo = static_cast<int>(
                std::ceil((1.0 - profile.support() - base) / scale));
            const int m_hi = static_cast<int>(
                std::floor((profile.support() - base) / scale));
            double term = 0.0;
            for (int m = m_lo; m <= m_hi; ++m) {
                // x = i 2^-rel_depth + m 2^level - k, dyadic at rel_depth
                const std::int64_t p =
                    i + (((static_cast<std::int64_t>(m) << level) - k)
                         << rel_depth);
                term += profile.psi_dyadic(p, rel_depth);
            }
            total += std::abs(term);
        }
        sup = std::max(sup, total);
    }
    return sup;
}

void compute_constants(ScalingProfile& profile, int j0) {
    profile.j0 = j0;
    // never sample sigma^2 finer than the exact dyadic grid of phi
    profile.sigma_grid_depth = std::min(profile.sigma_grid_depth, profile.depth);
    const int sd = profile.sigma_grid_depth;
    const std::int64_t pts = std::int64_t{1} << sd;
    profile.sigma2.resize(static_cast<std::size_t>(pts));
    std::int64_t best = 0;
    for (std::int64_t i = 0; i < pts; ++i) {
        const double v =
            profile.sigma2_at(static_cast<double>(i) / static_cast<double>(pts));
        profile.sigma2[static_cast<std::size_t>(i)] = v;
        if (v > profile.sigma2[static_cast<std::size_t>(best)]) best = i;
    }
    const double h = 1.0 / static_cast<double>(pts);
    const double t_coarse = static_cast<double>(best) * h;
    profile.t0 = golden_max(profile, t_coarse - h, t_coarse + h);
    profile.t0 -= std::floor(profile.t0);
    profile.sigma2_max = profile.sigma2_at(profile.t0);

    // curvature by second-order central differences, Richardson over a
    // step pair coarse enough to stay above the interpolation noise
    auto second = [&](double step) {
        return (profile.sigma2_at(profile.t0 + step) -
                2.0 * profile.sigma2_max +
                profile.sigma2_at(profile.t0 - step)) /
               (step * step);
    };
    const double c1 = second(std::ldexp(1.0, -6));
    const double c2 = second(std::ldexp(1.0, -7));
    profile.sigma2_curvature = (4.0 * c2 - c1) / 3.0;

    double dsum = 0.0;
    const int k_lo = static_cast<int>(std::ceil(profile.t0 - profile.support()));
    const int k_hi =
        static_cast<int>(std::floor(profile.t0 + profile.support() - 1));
    for (int k = k_lo; k <= k_hi; ++k) {
        const double d = profile.dphi_at(profile.t0 - k);
        dsum += d * d;
    }
    if (profile.sigma2_curvature != 0.0) {
        profile.upsilon =
            -dsum / (std::sqrt(profile.sigma2_max) * profile.sigma2_curvature);
        profile.upsilon_squared_reading =
            -dsum / (profile.sigma2_max * profile.sigma2_curvature);
    } else {
        profile.upsilon = 0.0;
        profile.upsilon_squared_reading = 0.0;
    }

    profile.tau = periodized_abs_sum_sup(profile, j0 + 1);
    profile.constants_ready = true;
}

Assumption2Report verify_assumption2(const ScalingProfile& profile,
                                     double tolerance) {
    Assumption2Report rep;
    if (!profile.constants_ready || profile.sigma2.empty()) return rep;
    const auto pts = static_cast<std::int64_t>(profile.sigma2.size());
    const double neighborhood = 0.05;  // one refined neighborhood of t0
    bool unique = true;
    double competitor = -1.0;
    for (std::int64_t i = 0; i < pts; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(pts);
        double dist = std::abs(t - profile.t0);
        dist = std::min(dist, 1.0 - dist);
        const double v = profile.sigma2[static_cast<std::size_t>(i)];
        if (dist > neighborhood) {
            competitor = std::max(competitor, v);
            if (v >= profile.sigma2_max - tolerance) unique = false;
        }
    }
    rep.unique_max = unique;
    rep.curvature_negative = profile.sigma2_curvature < 0.0;
    rep.margin = profile.sigma2_max - competitor;
    return rep;
}

double evaluate_basis_function(const ScalingProfile& profile, int j,
                               std::int64_t k, double t) {
    if (j < profile.j0) throw IndexOutOfRange("level below j0");
    if (k < 0 || k >= (std::int64_t{1} << j))
        throw IndexOutOfRange("shift outside [0, 2^j)");
    if (t < 0.0 || t > 1.0) throw IndexOutOfRange("t outside [0, 1]");
    const bool scaling = (j == profile.j0);
    const double scale = std::ldexp(1.0, j);
    const double base = scale * t - static_cast<double>(k);
    const int m_lo =
        static_cast<int>(std::ceil((1.0 - profile.support() - base) / scale));
    const int m_hi =
        static_cast<int>(std::floor((profile.support() - base) / scale));
    double acc = 0.0;
    for (int m = m_lo; m <= m_hi; ++m) {
        const double x = base + static_cast<double>(m) * scale;
        acc += scaling ? profile.phi_at(x) : profile.psi_at(x);
    }
    return std::sqrt(scale) * acc;
}

double basis_inner_product(const ScalingProfile& profile, int j1,
                           std::int64_t k1, int j2, std::int64_t k2,
                           int grid_depth) {
    const std::int64_t pts = std::int64_t{1} << grid_depth;
    const double width = 2.0 * profile.support() - 1.0;
    const double len1 = width * std::ldexp(1.0, -j1);
    const double len2 = width * std::ldexp(1.0, -j2);
    auto term = [&](std::int64_t i) {
        const double t = static_cast<double>(i) / static_cast<double>(pts);
        return evaluate_basis_function(profile, j1, k1, t) *
               evaluate_basis_function(profile, j2, k2, t);
    };
    if (len1 >= 1.0 || len2 >= 1.0) {
        double acc = 0.0;
        for (std::int64_t i = 0; i < pts; ++i) acc += term(i);
        return acc / static_cast<double>(pts);
    }
    // Both supports are proper arcs: integrate only where they intersect.
    // The integrand vanishes at arc endpoints, so plain sums over the
    // intersection segments add up to the full trapezoid rule.
    const double a_lo =
        (static_cast<double>(k1) + 1.0 - profile.support()) * std::ldexp(1.0, -j1);
    const double b_lo =
        (static_cast<double>(k2) + 1.0 - profile.support()) * std::ldexp(1.0, -j2);
    double acc = 0.0;
    for (int shift = -1; shift <= 1; ++shift) {
        const double lo = std::max(a_lo, b_lo + shift);
        const double hi = std::min(a_lo + len1, b_lo + len2 + shift);
        if (hi <= lo) continue;
        const auto i_lo = static_cast<std::int64_t>(
            std::ceil(lo * static_cast<double>(pts)));
        const auto i_hi = static_cast<std::int64_t>(
            std::floor(hi * static_cast<double>(pts)));
        for (std::int64_t i = i_lo; i <= i_hi; ++i) {
            std::int64_t w = i % pts;
            if (w < 0) w += pts;
            acc += term(w);
        }
    }
    return acc / static_cast<double>(pts);
}

std::string profile_to_json(const ScalingProfile& profile) {
    nlohmann::json j;
    j["family"] = profile.bank.family_name;
    j["N"] = profile.order();
    j["K"] = profile.support();
    j["depth"] = profile.depth;
    j["j0"] = profile.j0;
    j["t0"] = profile.t0;
    j["sigma2_max"] = profile.sigma2_max;
    j["sigma2_curvature"] = profile.sigma2_curvature;
    j["upsilon"] = profile.upsilon;
    j["upsilon_squared_reading"] = profile.upsilon_squared_reading;
    j["tau"] = profile.tau;
    j["psi_sup"] = profile.psi_sup;
    // coarse sample tables (unit-spacing grid refined 2^5 times)
    const int stride_log = profile.depth - 5;
    nlohmann::json phi = nlohmann::json::array();
    nlohmann::json psi = nlohmann::json::array();
    const std::int64_t stride = std::int64_t{1} << stride_log;
    for (std::size_t i = 0; i < profile.phi.size();
         i += static_cast<std::size_t>(stride)) {
        phi.push_back(profile.phi[i]);
        psi.push_back(profile.psi[i]);
    }
    j["phi_coarse"] = phi;
    j["psi_coarse"] = psi;
    return j.dump(2);
}

double psi_moment(const ScalingProfile& profile, int i) {
    const double h = profile.grid_step();
    const double lo = 1.0 - profile.support();
    double acc = 0.0;
    for (std::size_t idx = 0; idx < profile.psi.size(); ++idx) {
        const double x = lo + static_cast<double>(idx) * h;
        const double w =
            (idx == 0 || idx + 1 == profile.psi.size()) ? 0.5 : 1.0;
        acc += w * std::pow(x, i) * profile.psi[idx];
    }
    return acc * h;
}

}  // namespace ssband
