#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ssband/wavelet.hpp"

using namespace ssband;

TEST_CASE("haar cascade gives the indicator") {
    const auto prof = cascade_evaluate(load_filter("haar-test", 1), 8);
    // support [0, 1] at spacing 2^-8: phi = 1 on [0,1), 0 at 1
    REQUIRE(prof.phi.size() == 257);
    for (std::size_t i = 0; i < 256; ++i)
        CHECK(prof.phi[i] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(prof.phi[256] == 0.0);
    CHECK(prof.psi[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(prof.psi[127] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(prof.psi[128] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(prof.psi[255] == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("haar constants") {
    auto prof = cascade_evaluate(load_filter("haar-test", 1), 12);
    compute_constants(prof, 2);
    CHECK(prof.tau == doctest::Approx(1.0).epsilon(1e-12));
    for (double v : prof.sigma2) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    const auto rep = verify_assumption2(prof, 1e-6);
    CHECK_FALSE(rep.unique_max);
    CHECK_FALSE(rep.curvature_negative);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("partition of unity and integrals at N=2 and N=6") {
    for (int n : {2, 6}) {
        const auto prof = cascade_evaluate(load_filter("daubechies", n), 12);
        // partition of unity on a grid of [0, 1)
        const std::int64_t per = std::int64_t{1} << 12;
        double worst = 0.0;
        for (std::int64_t i = 0; i < per; ++i) {
            double s = 0.0;
            for (int k = 1 - prof.support(); k <= prof.support() - 1; ++k) {
                const double x =
                    static_cast<double>(i) / static_cast<double>(per) - k;
                s += prof.phi_at(x);
            }
            worst = std::max(worst, std::abs(s - 1.0));
        }
        CHECK(worst < 1e-6);

        // trapezoid integrals: phi integrates to 1, psi to 0
        double iphi = 0.0, ipsi = 0.0;
        const double h = prof.grid_step();
        for (std::size_t i = 0; i < prof.phi.size(); ++i) {
            const double w = (i == 0 || i + 1 == prof.phi.size()) ? 0.5 : 1.0;
            iphi += w * prof.phi[i];
            ipsi += w * prof.psi[i];
        }
        CHECK(std::abs(iphi * h - 1.0) < 1e-8);
        CHECK(std::abs(ipsi * h) < 1e-8);
    }
}

TEST_CASE("vanishing moments by quadrature") {
    const auto prof = cascade_evaluate(load_filter("daubechies", 6), 14);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(psi_moment(prof, i)) < 1e-6);
}

TEST_CASE("assumption 2 holds for daubechies 6 and 8") {
    for (int n : {6, 8}) {
        auto prof = cascade_evaluate(load_filter("daubechies", n), 12);
        compute_constants(prof, 5);
        CAPTURE(n);
        const auto rep = verify_assumption2(prof, 1e-6);
        CHECK(rep.unique_max);
        CHECK(rep.curvature_negative);
        CHECK(prof.sigma2_curvature < 0.0);
        CHECK(prof.upsilon > 0.0);
        CHECK(prof.tau > 0.0);
    }
}

TEST_CASE("assumption sweep over the full daubechies range") {
    for (int n = 6; n <= 20; ++n) {
        auto prof = cascade_evaluate(load_filter("daubechies", n), 10);
        compute_constants(prof, 5);
        CAPTURE(n);
        CHECK(verify_assumption2(prof, 1e-6).pass());
    }
}

TEST_CASE("tau is level independent") {
    auto prof = cascade_evaluate(load_filter("daubechies", 6), 12);
    compute_constants(prof, 5);
    const double tau2 = periodized_abs_sum_sup(prof, prof.j0 + 2);
    CHECK(std::abs(prof.tau - tau2) < 1e-6);
}

TEST_CASE("periodized basis evaluation") {
    auto prof = cascade_evaluate(load_filter("haar-test", 1), 10);
    compute_constants(prof, 3);
    // phi_{3,0}(0) = 2^{3/2}
    CHECK(evaluate_basis_function(prof, 3, 0, 0.0) ==
          doctest::Approx(std::exp2(1.5)).epsilon(1e-12));
    // compact support: psi_{4,0} vanishes away from [0, 1/16]
    CHECK(evaluate_basis_function(prof, 4, 0, 0.5) == 0.0);
    CHECK_THROWS_AS(evaluate_basis_function(prof, 2, 0, 0.5), IndexOutOfRange);
    CHECK_THROWS_AS(evaluate_basis_function(prof, 3, 8, 0.5), IndexOutOfRange);
    CHECK_THROWS_AS(evaluate_basis_function(prof, 3, 0, 1.5), IndexOutOfRange);
}

TEST_CASE("profile export matches the golden file") {
    auto prof = cascade_evaluate(load_filter("daubechies", 6), 12);
    compute_constants(prof, 5);
    std::ifstream in(std::string(GOLDEN_DIR) + "/daubechies6_profile.json");
    REQUIRE(in.is_open());
    std::stringstream ss;
    ss << in.rdbuf();
    const auto want = nlohmann::json::parse(ss.str());
    const auto have = nlohmann::json::parse(profile_to_json(prof));
    CHECK(have.at("t0").get<double>() ==
          doctest::Approx(want.at("t0").get<double>()).epsilon(1e-9));
    CHECK(have.at("sigma2_max").get<double>() ==
          doctest::Approx(want.at("sigma2_max").get<double>()).epsilon(1e-10));
    CHECK(have.at("sigma2_curvature").get<double>() ==
          doctest::Approx(want.at("sigma2_curvature").get<double>())
              .epsilon(1e-6));
    CHECK(have.at("upsilon").get<double>() ==
          doctest::Approx(want.at("upsilon").get<double>()).epsilon(1e-6));
    CHECK(have.at("tau").get<double>() ==
          doctest::Approx(want.at("tau").get<double>()).epsilon(1e-10));
    const auto& wp = want.at("phi_coarse");
    const auto& hp = have.at("phi_coarse");
    REQUIRE(wp.size() == hp.size());
    for (std::size_t i = 0; i < wp.size(); ++i)
        CHECK(hp[i].get<double>() ==
              doctest::Approx(wp[i].get<double>()).epsilon(1e-12));
}

TEST_CASE("spot value matches a denser cascade") {
    auto coarse = cascade_evaluate(load_filter("daubechies", 6), 12);
    auto fine = cascade_evaluate(load_filter("daubechies", 6), 15);
    compute_constants(coarse, 5);
    compute_constants(fine, 5);
    const double a = evaluate_basis_function(coarse, 6, 17, 0.5);
    const double b = evaluate_basis_function(fine, 6, 17, 0.5);
    CHECK(std::abs(a - b) < 1e-6);
}

TEST_CASE("discrete orthonormality of the periodized basis") {
    auto prof = cascade_evaluate(load_filter("daubechies", 6), 12);
    compute_constants(prof, 5);
    const int j0 = 5;
    const int top = j0 + 1;
    const int depth = top + 11;
    // all pairs across levels j0..j0+2 (scaling row at j0, wavelets above)
    std::vector<std::pair<int, std::int64_t>> basis;
    for (std::int64_t k = 0; k < (1 << j0); ++k) basis.push_back({j0, k});
    for (int j = j0 + 1; j <= top; ++j)
        for (std::int64_t k = 0; k < (std::int64_t{1} << j); ++k)
            basis.push_back({j, k});
    double worst = 0.0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a; b < basis.size(); ++b) {
            const double ip =
                basis_inner_product(prof, basis[a].first, basis[a].second,
                                    basis[b].first, basis[b].second, depth);
            const double target = (a == b) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(ip - target));
        }
    }
    CHECK(worst < 1e-6);
}
