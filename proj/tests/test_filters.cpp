#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ssband/filters.hpp"

using namespace ssband;

namespace {

void check_qmf(const FilterBank& bank) {
    const auto& h = bank.lowpass;
    double sum = 0.0;
    for (double c : h) sum += c;
    CHECK(std::abs(sum - std::sqrt(2.0)) < 1e-12);
    const int len = bank.length();
    for (int m = 0; m < len / 2; ++m) {
        double dot = 0.0;
        for (int k = 0; k + 2 * m < len; ++k) dot += h[k] * h[k + 2 * m];
        CHECK(std::abs(dot - (m == 0 ? 1.0 : 0.0)) < 1e-12);
    }
}

}  // namespace

TEST_CASE("haar fixture") {
    const auto bank = load_filter("haar-test", 1);
    CHECK(bank.lowpass.size() == 2);
    CHECK(bank.lowpass[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(bank.lowpass[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    check_qmf(bank);
    CHECK_THROWS_AS(load_filter("haar-test", 2), UnsupportedOrder);
}

TEST_CASE("daubechies N=2 matches the closed-form roots") {
    // independent oracle: the N=2 moment/orthogonality system solves to
    // h = (1+s, 3+s, 3-s, 1-s) / (4 sqrt 2) with s = sqrt 3
    const double s = std::sqrt(3.0);
    const double d = 4.0 * std::sqrt(2.0);
    const double expect[4] = {(1 + s) / d, (3 + s) / d, (3 - s) / d,
                              (1 - s) / d};
    const auto bank = load_filter("daubechies", 2);
    REQUIRE(bank.length() == 4);
    for (int k = 0; k < 4; ++k)
        CHECK(bank.lowpass[k] == doctest::Approx(expect[k]).epsilon(1e-12));
}

TEST_CASE("daubechies family invariants") {
    for (int n : {2, 3, 6, 8, 10, 20}) {
        const auto bank = load_filter("daubechies", n);
        CHECK(bank.length() == 2 * n);
        CHECK(bank.support == n);
        check_qmf(bank);
        // vanishing moments of the highpass row, relative to the term scale
        for (int i = 0; i < n; ++i) {
            double mom = 0.0, scale = 0.0;
            for (int k = 0; k < bank.length(); ++k) {
                const double term = std::pow(k, i) * bank.highpass[k];
                mom += term;
                scale += std::abs(term);
            }
            CHECK(std::abs(mom) < 1e-10 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("symlets share the invariants and differ from daubechies") {
    for (int n : {4, 8, 12, 20}) {
        const auto sym = load_filter("symlet", n);
        const auto db = load_filter("daubechies", n);
        CHECK(sym.length() == 2 * n);
        check_qmf(sym);
        double diff = 0.0;
        for (int k = 0; k < sym.length(); ++k)
            diff = std::max(diff, std::abs(sym.lowpass[k] - db.lowpass[k]));
        CHECK(diff > 1e-3);  // least-asymmetric root choice is distinct
    }
}

TEST_CASE("unsupported requests") {
    CHECK_THROWS_AS(load_filter("daubechies", 21), UnsupportedOrder);
    CHECK_THROWS_AS(load_filter("daubechies", 1), UnsupportedOrder);
    CHECK_THROWS_AS(load_filter("coiflet", 4), UnknownFamily);
}
