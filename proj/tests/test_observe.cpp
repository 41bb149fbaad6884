#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ssband/generators.hpp"
#include "ssband/observe.hpp"
#include "ssband/rng.hpp"

using namespace ssband;

namespace {

ScalingProfile db6_profile(int j0 = 2) {
    auto p = cascade_evaluate(load_filter("daubechies", 6), 12);
    compute_constants(p, j0);
    return p;
}

SmoothnessClass default_class() {
    SmoothnessClass cls;
    cls.s = 1.0;
    cls.hoelder_bound = 1.0;
    cls.epsilon = 0.5;
    cls.rho = 2;
    cls.s_max = 5.5;
    return cls;
}

}  // namespace

TEST_CASE("white noise: determinism and exact coefficient law") {
    const auto f = sample_pi(default_class(), 2, 8, 3);
    const auto a = observe_white_noise(f, 4096, 8, 77);
    const auto b = observe_white_noise(f, 4096, 8, 77);
    for (int j = 2; j <= 8; ++j)
        for (std::size_t k = 0; k < a.hat.level(j).size(); ++k)
            CHECK(a.hat.level(j)[k] == b.hat.level(j)[k]);

    // variance of beta_hat - beta over replicates is 1/n within 5%
    const std::uint64_t n = 1024;
    const int reps = 20000;
    double sum = 0.0, sum2 = 0.0;
    for (int r = 0; r < reps; ++r) {
        const auto obs = observe_white_noise(f, n, 4, 1000 + r);
        const double d = obs.hat.coeff(4, 3) - f.coeff(4, 3);
        sum += d;
        sum2 += d * d;
    }
    const double mean = sum / reps;
    const double var = sum2 / reps - mean * mean;
    CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(reps) * n));
    CHECK(var * n == doctest::Approx(1.0).epsilon(0.05));

    CHECK_THROWS_AS(observe_white_noise(f, 1024, 9, 1), InsufficientLevels);
}

TEST_CASE("white noise disappears as n grows") {
    const auto f = sample_pi(default_class(), 2, 8, 3);
    const auto obs = observe_white_noise(f, std::uint64_t{1} << 40, 8, 5);
    double worst = 0.0;
    for (int j = 2; j <= 8; ++j)
        for (std::size_t k = 0; k < f.level(j).size(); ++k)
            worst = std::max(worst, std::abs(obs.hat.level(j)[k] -
                                             f.level(j)[k]));
    CHECK(worst < 1e-4);
}

TEST_CASE("density model: envelope, uniform mean, variance bound") {
    const auto prof = db6_profile();
    // uniform density: all empirical wavelet coefficients have mean zero
    CoefficientField uniform(2, 6);
    for (auto& a : uniform.alpha()) a = std::exp2(-1.0);  // 2^{-j0/2}
    const std::uint64_t n = 512;
    const int reps = 4000;
    double mean5 = 0.0, var5 = 0.0;
    const double envelope = std::exp2(2.5) * prof.psi_sup;
    for (int r = 0; r < reps; ++r) {
        const auto obs = observe_density(uniform, prof, n, 5, 900 + r);
        const double b = obs.hat.coeff(5, 9);
        mean5 += b;
        var5 += b * b;
        CHECK(std::abs(b) <= envelope);
    }
    mean5 /= reps;
    var5 = var5 / reps - mean5 * mean5;
    // mean within 3 standard errors of zero
    const double se = std::sqrt(var5 / reps);
    CHECK(std::abs(mean5) <= 3.0 * se + 1e-12);
    // Var <= ||f||_inf / n with Monte Carlo slack
    CHECK(var5 <= 1.1 / static_cast<double>(n));

    CoefficientField negative = uniform;
    negative.coeff(4, 3) = 0.8;
    CHECK_THROWS_AS(observe_density(negative, prof, 64, 5, 1), NotADensity);
}

TEST_CASE("regression model: zero-noise Riemann sums converge") {
    const auto prof = db6_profile();
    const auto f = sample_pi(default_class(), 2, 6, 21);
    const double b_true = f.coeff(5, 9);
    const auto obs1 = observe_regression(f, prof, 1 << 10, 0.0, 6, 1);
    const auto obs2 = observe_regression(f, prof, 1 << 13, 0.0, 6, 1);
    const double e1 = std::abs(obs1.hat.coeff(5, 9) - b_true);
    const double e2 = std::abs(obs2.hat.coeff(5, 9) - b_true);
    CHECK(e2 <= e1 / 2.0);  // at least linear decay in the design spacing

    CHECK_THROWS_AS(observe_regression(f, prof, 32, 1.0, 6, 1),
                    DesignTooCoarse);
}

TEST_CASE("regression noise has variance sigma^2/n") {
    const auto prof = db6_profile();
    CoefficientField flat(2, 6);  // f = 0
    const std::uint64_t n = 2048;
    const double sigma = 0.7;
    const int reps = 12000;
    double sum = 0.0, sum2 = 0.0;
    for (int r = 0; r < reps; ++r) {
        const auto obs = observe_regression(flat, prof, n, sigma, 6, 40 + r);
        const double b = obs.hat.coeff(5, 9);
        sum += b;
        sum2 += b * b;
    }
    const double mean = sum / reps;
    const double var = sum2 / reps - mean * mean;
    CHECK(var * n / (sigma * sigma) == doctest::Approx(1.0).epsilon(0.08));
}

TEST_CASE("all models: zero function with zero noise gives zero coefficients") {
    const auto prof = db6_profile();
    const CoefficientField zero(2, 6);
    const auto wn = observe_white_noise(zero, std::uint64_t{1} << 62, 6, 9);
    for (int j = 2; j <= 6; ++j)
        for (double v : wn.hat.level(j)) CHECK(std::abs(v) < 1e-8);
    const auto rg = observe_regression(zero, prof, 256, 0.0, 6, 9);
    for (int j = 2; j <= 6; ++j)
        for (double v : rg.hat.level(j)) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("truncated estimate keeps exactly the requested levels") {
    const auto f = sample_pi(default_class(), 2, 8, 3);
    const auto obs = observe_white_noise(f, 4096, 8, 77);
    const auto t2 = truncated_estimate(obs, 2);
    CHECK(t2.max_level() == 2);
    const auto t5 = truncated_estimate(obs, 5);
    for (int j = 2; j <= 5; ++j)
        for (std::size_t k = 0; k < t5.level(j).size(); ++k)
            CHECK(t5.level(j)[k] == obs.hat.level(j)[k]);
    const auto t8 = truncated_estimate(obs, 8);
    CHECK(t8.max_level() == 8);
    CHECK_THROWS_AS(truncated_estimate(obs, 9), LevelOutOfRange);
    CHECK_THROWS_AS(truncated_estimate(obs, 1), LevelOutOfRange);
}

TEST_CASE("noisy coefficients serialize with their header") {
    const auto f = sample_pi(default_class(), 2, 6, 3);
    const auto prof = db6_profile();
    const auto obs = observe_regression(f, prof, 256, 0.25, 6, 91);
    const auto text = noisy_to_json(obs);
    CHECK(text.find("\"model\":\"regression\"") != std::string::npos);
    CHECK(text.find("\"n\":256") != std::string::npos);
    CHECK(text.find("\"sigma\":0.25") != std::string::npos);
    CHECK(text.find("\"seed\":91") != std::string::npos);
    // body round-trips through the field codec
    const auto back = field_from_json(text);
    CHECK(back.max_level() == 6);
    for (int j = 2; j <= 6; ++j)
        for (std::size_t k = 0; k < back.level(j).size(); ++k)
            CHECK(back.level(j)[k] == obs.hat.level(j)[k]);
}

TEST_CASE("sup norm distance is a metric on expansions") {
    const auto prof = db6_profile();
    const auto f = sample_pi(default_class(), 2, 7, 31);
    const auto g = sample_pi(default_class(), 2, 7, 32);
    const auto h = sample_pi(default_class(), 2, 7, 33);
    CHECK(sup_norm_distance(f, f, prof, 11) == 0.0);
    const double fg = sup_norm_distance(f, g, prof, 11);
    const double gf = sup_norm_distance(g, f, prof, 11);
    CHECK(fg == doctest::Approx(gf).epsilon(1e-12));
    CHECK(fg <= sup_norm_distance(f, h, prof, 11) +
                    sup_norm_distance(h, g, prof, 11) + 1e-12);

    // single scaling-term difference
    CoefficientField shifted = f;
    shifted.coeff(2, 0) += 0.25;
    CoefficientField delta(2, 2);
    delta.coeff(2, 0) = 1.0;
    const CoefficientField zero(2, 2);
    const double unit = sup_norm_distance(delta, zero, prof, 11);
    CHECK(sup_norm_distance(shifted, f, prof, 11) ==
          doctest::Approx(0.25 * unit).epsilon(1e-10));
}

TEST_CASE("grid refinement never loses sup mass") {
    const auto prof = db6_profile();
    const auto f = sample_pi(default_class(), 2, 7, 55);
    const CoefficientField zero(2, 7);
    const double d9 = sup_norm_distance(f, zero, prof, 9);
    const double d10 = sup_norm_distance(f, zero, prof, 10);
    const double d11 = sup_norm_distance(f, zero, prof, 11);
    CHECK(d10 >= d9 - 1e-9);
    CHECK(d11 >= d10 - 1e-9);
}
