#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ssband/expand.hpp"
#include "ssband/generators.hpp"

using namespace ssband;

namespace {

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

TEST_CASE("pi draws stay inside the class and are deterministic") {
    const auto cls = default_class();
    const auto f = sample_pi(cls, 2, 10, 42);
    const auto g = sample_pi(cls, 2, 10, 42);
    const auto h = sample_pi(cls, 2, 10, 43);
    CHECK(holder_norm(f, cls.s) <= cls.hoelder_bound);
    bool identical = true, differs = false;
    for (int j = 2; j <= 10; ++j)
        for (std::size_t k = 0; k < f.level(j).size(); ++k) {
            identical = identical && f.level(j)[k] == g.level(j)[k];
            differs = differs || f.level(j)[k] != h.level(j)[k];
        }
    CHECK(identical);
    CHECK(differs);
}

TEST_CASE("dissimilar fraction of pi draws is within the union bound") {
    const auto cls = default_class();
    const int j0 = 2;
    const int reps = 10000;
    int bad = 0;
    for (int r = 0; r < reps; ++r)
        if (!is_self_similar(sample_pi(cls, j0, 8, 1000 + r), cls, j0)) ++bad;
    const double bound = std::pow(cls.epsilon, std::exp2(cls.rho * j0)) /
                         (1.0 - cls.epsilon);
    CHECK(static_cast<double>(bad) / reps <= bound);
}

TEST_CASE("ladder counterexample is self-similar with norm M") {
    auto cls = default_class();
    cls.hoelder_bound = 2.0;
    const auto f = prop1_counterexample(cls, 3, 14);
    CHECK(is_self_similar(f, cls, 3));
    CHECK(holder_norm(f, cls.s) == doctest::Approx(2.0).epsilon(1e-14));
    // mass only on ladder levels 6 and 12 within storage
    CHECK(truncated_norm(f, cls.s, 6, 6) == doctest::Approx(2.0));
    CHECK(truncated_norm(f, cls.s, 12, 12) == doctest::Approx(2.0));
    CHECK(truncated_norm(f, cls.s, 7, 11) == 0.0);
    CHECK(truncated_norm(f, cls.s, 13, 14) == 0.0);
}

TEST_CASE("ladder tail decays faster than the ladder scale") {
    // sup-norm of the stored tail above each ladder level, against 2^{-j_i s}
    auto cls = default_class();
    const auto prof = [] {
        auto p = cascade_evaluate(load_filter("daubechies", 6), 12);
        compute_constants(p, 3);
        return p;
    }();
    const auto f = prop1_counterexample(cls, 3, 14);
    const CoefficientField zero(3, 14);
    // tail past j_1 = 6: only the level-12 spike remains
    CoefficientField tail(3, 14);
    tail.level(12) = f.level(12);
    const double tail_sup = sup_norm_distance(tail, zero, prof, 15);
    const double ladder_scale = std::exp2(-6.0 * cls.s);
    CHECK(tail_sup < 0.25 * ladder_scale);
}

TEST_CASE("two-point pair structure") {
    auto cls = default_class();
    const int j0 = 3;
    const int j = 7, k = 66;
    const auto [f0, fk] = minimax_pair(cls, j0, j, k, 14, 6);
    CHECK(is_self_similar(f0, cls, j0));
    CHECK(is_self_similar(fk, cls, j0));
    // f0 is the ladder plus the alpha-level term
    const auto ladder = prop1_counterexample(cls, j0, 14);
    CHECK(f0.coeff(j0, 0) ==
          doctest::Approx(std::exp2(-j0 * 1.5)).epsilon(1e-14));
    for (int l = j0 + 1; l <= 14; ++l)
        for (std::size_t q = 0; q < f0.level(l).size(); ++q)
            CHECK(f0.level(l)[q] == ladder.level(l)[q]);
    // single-coefficient difference
    int diffs = 0;
    for (int l = j0; l <= 14; ++l)
        for (std::size_t q = 0; q < f0.level(l).size(); ++q)
            if (f0.level(l)[q] != fk.level(l)[q]) ++diffs;
    CHECK(diffs == 1);
    CHECK(fk.coeff(j, k) == doctest::Approx(std::exp2(-j * 1.5)).epsilon(1e-14));

    CHECK_THROWS_AS(minimax_pair(cls, j0, 6, 32, 14, 6), ShiftCollision);
    CHECK_THROWS_AS(minimax_pair(cls, j0, 7, 2, 14, 6), InvalidRange);
}

TEST_CASE("pair distance matches the single-coefficient form") {
    auto cls = default_class();
    auto prof = cascade_evaluate(load_filter("daubechies", 6), 12);
    compute_constants(prof, 3);
    const int j = 7;
    const auto [f0, fk] = minimax_pair(cls, 3, j, 66, 14, 6);
    const double dist = sup_norm_distance(f0, fk, prof, 15);
    // |beta| 2^{j/2} sup|psi| up to grid resolution
    const double predicted = std::exp2(-j * 1.5) * std::exp2(0.5 * j) *
                             prof.psi_sup;
    CHECK(dist == doctest::Approx(predicted).epsilon(1e-3));
}

TEST_CASE("adversarial ladder recursions") {
    const std::vector<int> schedule{2, 2, 2, 2, 3, 3, 4, 4, 5, 6};
    const auto seq =
        adversarial_c1_sequence(1.0, 0.25, 2.0, 0.5, schedule, 3, 3, 14, 6);
    REQUIRE(seq.s_values.size() == 3);
    REQUIRE(seq.t_values.size() == 3);
    for (std::size_t i = 0; i + 1 < 3; ++i) {
        CHECK(seq.s_values[i + 1] < seq.s_values[i]);
        CHECK(seq.t_values[i + 1] > seq.t_values[i]);
        CHECK(seq.s_values[i] - seq.t_values[i] >
              seq.s_values[i + 1] - seq.t_values[i + 1]);
    }
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(seq.s_values[i] > seq.t_values[i]);
        CHECK(seq.t_values[i] > 0.25);
        CHECK(seq.s_values[i] < 2.0);
    }
    // windowed membership of every field at its own exponent
    for (std::size_t m = 0; m < seq.fields.size(); ++m) {
        CHECK(is_self_similar_windowed(
            seq.fields[m], seq.s_values[m], 1.0, 0.5,
            [&seq](int j) { return seq.rho_of_level(j); }, 3));
        CHECK(holder_norm(seq.fields[m], seq.s_values[m]) <= 1.0 + 1e-12);
    }
    // the displayed coefficient inequality on stored ladder levels
    for (std::size_t m = 0; m < seq.fields.size(); ++m)
        for (std::size_t i = 0; i < seq.ladder.size(); ++i) {
            if (seq.ladder[i] > 14) break;
            const int j = static_cast<int>(seq.ladder[i]);
            const double coeff =
                seq.fields[m].coeff(j, std::int64_t{1} << (j - 1));
            CHECK(coeff >=
                  0.5 * std::exp2(-j * (seq.s_values[m] + 0.5)) - 1e-15);
        }
}

TEST_CASE("adversarial schedule too short") {
    CHECK_THROWS_AS(
        adversarial_c1_sequence(1.0, 0.25, 2.0, 0.5, {2, 2}, 3, 3, 14, 6),
        ScheduleTooShort);
}

TEST_CASE("density construction") {
    auto prof = cascade_evaluate(load_filter("daubechies", 6), 12);
    compute_constants(prof, 3);
    const auto cls = default_class();
    CHECK_THROWS_AS(make_density(CoefficientField(3, 8), prof, 0.1, 12),
                    DegenerateBase);

    const auto base = sample_pi(cls, 3, 8, 17);
    const auto dens = make_density(base, prof, 0.1, 12);
    const auto vals = expand_on_grid(dens, prof, 12);
    double lo = vals[0], integral = 0.0;
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        lo = std::min(lo, vals[i]);
        integral += 0.5 * (vals[i] + vals[i + 1]);
    }
    integral /= static_cast<double>(vals.size() - 1);
    CHECK(lo >= 0.1 - 1e-9);
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-8));
}
