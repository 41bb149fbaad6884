#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ssband/bands.hpp"
#include "ssband/generators.hpp"

using namespace ssband;

namespace {

const ScalingProfile& db6() {
    static const ScalingProfile prof = [] {
        auto p = cascade_evaluate(load_filter("daubechies", 6), 12);
        compute_constants(p, 1);
        return p;
    }();
    return prof;
}

BandParameters adaptive_params() {
    BandParameters p;
    p.j0 = 1;
    p.rho = 2;
    p.epsilon = 0.5;
    p.gamma = 0.1;
    p.lambda = 2.0;
    p.delta = 0.5;
    p.nu = 1.0;
    p.s_min = 0.0;
    p.s_max = 5.5;
    p.n_moments = 6;
    p.min_level_floor = 4;
    return p;
}

BandParameters exact_params() {
    auto p = adaptive_params();
    p.nu = 1.5;
    p.s_min = 0.25;
    return p;
}

SmoothnessClass pi_class(double s, double m) {
    SmoothnessClass cls;
    cls.s = s;
    cls.hoelder_bound = m;
    cls.epsilon = 0.5;
    cls.rho = 2;
    cls.s_max = 5.5;
    return cls;
}

}  // namespace

TEST_CASE("band constants") {
    const std::uint64_t n = 1024;
    const auto k = band_constants(8, 0.05, n, db6());
    CHECK(k.a == doctest::Approx(std::sqrt(16.0 * std::log(2.0))).epsilon(1e-12));
    CHECK(k.a == doctest::Approx(3.33026).epsilon(1e-5));
    CHECK(k.x == doctest::Approx(2.97020).epsilon(1e-5));
    const auto k1 = band_constants(8, 1.0 - std::exp(-1.0), n, db6());
    CHECK(std::abs(k1.x) < 1e-12);
    CHECK(k.c ==
          doctest::Approx(std::sqrt(db6().sigma2_max) * 16.0 / 32.0)
              .epsilon(1e-12));
}

TEST_CASE("R1 scaling and monotonicity in gamma") {
    const std::uint64_t n = 1024;
    // 2^{j/2} scaling up to the slowly varying log factors; the factor sits
    // inside (1.9, 2.1) once sqrt(j+2)/sqrt(j) is close enough to one
    for (int j : {8, 10, 12}) {
        const double ratio =
            radius_r1(j + 2, 0.05, n, db6()) / radius_r1(j, 0.05, n, db6());
        CHECK(ratio > 1.9);
        CHECK(ratio < 2.25);
    }
    for (int j : {28, 40}) {
        const double ratio =
            radius_r1(j + 2, 0.05, n, db6()) / radius_r1(j, 0.05, n, db6());
        CHECK(ratio > 1.9);
        CHECK(ratio < 2.1);
    }
    CHECK(radius_r1(8, 0.01, n, db6()) > radius_r1(8, 0.05, n, db6()));
    CHECK(radius_r1(8, 0.05, n, db6()) > radius_r1(8, 0.5, n, db6()));
}

TEST_CASE("tail radii formulas") {
    const auto p = adaptive_params();
    const std::uint64_t n = 1 << 16;
    SmoothnessEstimate est;
    est.j1 = 2;
    est.s_hat = 1.0;
    est.m_hat = 1.0;

    // l == j makes R2 vanish
    est.m_hat = 1e-9;  // class level collapses to j_min
    auto tail = radius_r2_r3(p.j_max(n), est, n, p, db6());
    CHECK(tail.l == p.j_max(n));
    CHECK(tail.r2 == 0.0);

    // s_hat = 0 gives an infinite bias allowance
    est.s_hat = 0.0;
    tail = radius_r2_r3(6, est, n, p, db6());
    CHECK(std::isinf(tail.r3));

    // direct evaluation of the R2 formula at a forced gap
    est.s_hat = 1.0;
    est.m_hat = 64.0 * p.lambda_bar() * threshold_scale(n, 1.0) *
                std::exp2(8.0 * 1.5) /
                64.0;  // just something that lands above j = 6
    const auto cl = j_cl_hat(est, p.lambda_bar(), 1.0, n, p);
    tail = radius_r2_r3(6, est, n, p, db6());
    const int l = std::max(6, std::min(cl.level, p.j_max(n)));
    const double expected = db6().tau * p.lambda_bar() *
                            (std::exp2(0.5 * l) - std::exp2(3.0)) *
                            threshold_scale(n, p.nu) /
                            (1.0 - std::exp2(-0.5));
    CHECK(tail.r2 == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("assumption gate rejects haar") {
    auto haar = cascade_evaluate(load_filter("haar-test", 1), 12);
    compute_constants(haar, 1);
    const auto cls = pi_class(1.0, 1.0);
    const auto f = sample_pi(cls, 1, 12, 3);
    const auto obs = observe_white_noise(f, 1 << 12, 8, 5);
    CHECK_THROWS_AS(
        build_adaptive_band(obs, adaptive_params(), 1 << 12, haar),
        Assumption2Failed);
    CHECK_THROWS_AS(build_exact_band(obs, exact_params(), 1 << 12, haar),
                    Assumption2Failed);
}

TEST_CASE("mode gates") {
    const auto cls = pi_class(1.0, 1.0);
    const std::uint64_t n = 1 << 12;
    const auto f = sample_pi(cls, 1, 14, 3);
    const auto obs = observe_white_noise(f, n, 14, 5);
    CHECK_THROWS_AS(build_exact_band(obs, adaptive_params(), n, db6()),
                    ModeMismatch);
    CHECK_THROWS_AS(build_adaptive_band(obs, exact_params(), n, db6()),
                    ModeMismatch);
}

TEST_CASE("adaptive band: bonferroni level, decomposition, membership") {
    const auto p = adaptive_params();
    const std::uint64_t n = 1 << 16;
    const auto cls = pi_class(1.0, 1.0);
    const int top = p.j_max(n) + 2;
    const auto f = sample_pi(cls, 1, top, 11);
    const auto obs = observe_white_noise(f, n, top, 13);
    const auto band = build_adaptive_band(obs, p, n, db6());

    const int levels = p.j_max(n) - p.j_min(n) + 1;
    CHECK(band.gamma_effective ==
          doctest::Approx(p.gamma / levels).epsilon(1e-14));
    CHECK(band.gamma_effective <= p.gamma);
    if (!std::isinf(band.radius)) {
        CHECK(band.radius ==
              doctest::Approx(band.r1 + band.r2 + band.r3).epsilon(1e-14));
        // center is always inside its own band
        CHECK(band_contains(band, band.center, db6(), 14));
        // a translate two radii away is outside
        CoefficientField far = band.center;
        CoefficientField delta(1, band.center.max_level());
        delta.coeff(1, 0) = 1.0;
        const CoefficientField zero(1, band.center.max_level());
        const double unit = sup_norm_distance(delta, zero, db6(), 14);
        far.coeff(1, 0) += 2.0 * band.radius / unit;
        CHECK_FALSE(band_contains(band, far, db6(), 14));
    } else {
        CHECK(band.diagnostics.s_hat == 0.0);
        CHECK(band_contains(band, f, db6(), 14));
    }
    CHECK(std::isinf(band.radius) == (band.diagnostics.s_hat == 0.0));
}

TEST_CASE("bonferroni level formula at j_min 3, j_max 10") {
    auto p = adaptive_params();
    p.j0 = 3;
    p.min_level_floor = 3;
    // j_max(n) = 10 needs n / ln n in [2^10, 2^11)
    const std::uint64_t n = 1 << 14;
    REQUIRE(p.j_max(n) == 10);
    REQUIRE(p.j_min(n) == 3);
    const double gamma_n = 0.1 / (p.j_max(n) - p.j_min(n) + 1);
    CHECK(gamma_n == doctest::Approx(0.0125).epsilon(1e-15));
}

TEST_CASE("adaptive band with silent data sits at j_min") {
    const auto p = adaptive_params();
    const std::uint64_t n = 1 << 16;
    // alpha carries mass so the bracket denominator is positive, all finer
    // levels are silent
    CoefficientField f(1, p.j_max(n));
    f.coeff(1, 0) = 0.4;
    f.coeff(2, 1) = 0.4 * std::exp2(-2.0 * 1.5);
    NoisyCoefficients obs;
    obs.model = Model::white_noise;
    obs.n = n;
    obs.hat = f;
    const auto band = build_adaptive_band(obs, p, n, db6());
    CHECK(band.chosen_level == p.j_min(n));
}

TEST_CASE("exact band radius is a pure function of the chosen level") {
    const auto p = exact_params();
    const std::uint64_t n = 1 << 14;
    const auto cls = pi_class(1.0, 1.0);
    const int top = p.j_max(n) + 6;
    ConfidenceBand first, second;
    bool have_pair = false;
    for (int rep = 0; rep < 20 && !have_pair; ++rep) {
        const auto fa = sample_pi(cls, 1, top, 100 + rep);
        const auto fb = sample_pi(cls, 1, top, 200 + rep);
        const auto ba = build_exact_band(
            observe_white_noise(fa, n, top, 300 + rep), p, n, db6());
        const auto bb = build_exact_band(
            observe_white_noise(fb, n, top, 400 + rep), p, n, db6());
        if (ba.chosen_level == bb.chosen_level) {
            first = ba;
            second = bb;
            have_pair = true;
        }
    }
    REQUIRE(have_pair);
    CHECK(first.radius == second.radius);
    CHECK(first.r2 == 0.0);
    CHECK(first.r3 == 0.0);
    CHECK(std::isfinite(first.radius));
}

TEST_CASE("band json export") {
    const auto p = adaptive_params();
    const std::uint64_t n = 1 << 14;
    const auto cls = pi_class(1.0, 1.0);
    const int top = p.j_max(n) + 2;
    const auto f = sample_pi(cls, 1, top, 77);
    const auto obs = observe_white_noise(f, n, top, 78);
    const auto band = build_adaptive_band(obs, p, n, db6());
    const auto text = band_to_json(band);
    CHECK(text.find("\"kind\":\"adaptive\"") != std::string::npos);
    CHECK(text.find("chosen_level") != std::string::npos);
    CHECK(text.find("gamma_effective") != std::string::npos);
}
