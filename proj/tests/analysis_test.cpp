#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gvrl/analysis.hpp"
#include "gvrl/codec.hpp"

using namespace gvrl::analysis;

namespace {
constexpr double kLn2 = 0.6931471805599453094;
}

TEST_CASE("closed-form expected length at reference points") {
    // m = 1 codes are pure unary: E[len] = E[K] + 1 = 1/p
    CHECK(expected_length_exact(0.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(expected_length_exact(0.9) == doctest::Approx(1.0 / 0.9).epsilon(1e-14));

    // m = 2, l = 1, h = 0: length = 1 + 1/q with q = 0.51
    CHECK(expected_length_exact(0.3) == doctest::Approx(1.0 + 1.0 / 0.51).epsilon(1e-14));

    // frozen from a 50-digit evaluation of the closed form at p = 0.01
    CHECK(std::fabs(expected_length_exact(0.01) - 8.105006788189456) < 1e-10);
}

TEST_CASE("enumeration oracle brackets the closed form from below") {
    for (double p : {0.9, 0.5, 0.3, 0.05, 0.01, 1e-3}) {
        CAPTURE(p);
        const double exact = expected_length_exact(p);
        const double enumerated = expected_length_enumeration(p, 1e-12);
        // the oracle drops a nonnegative tail certified below tol
        CHECK(exact - enumerated >= -1e-13);
        CHECK(exact - enumerated < 1e-10);
    }
    CHECK(expected_length_enumeration(0.5, 1e-12) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("enumeration validates its tolerance") {
    CHECK_THROWS_AS(expected_length_enumeration(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(expected_length_enumeration(0.5, -1e-6), std::invalid_argument);
}

TEST_CASE("entropy closed form matches direct summation") {
    CHECK(entropy(0.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::fabs(entropy(0.9) - 0.5211062150992014) < 1e-12);

    for (double p : {0.9, 0.6, 0.3, 0.05}) {
        const gvrl::GeometricSource source(p);
        double direct = 0.0;
        for (std::uint64_t k = 0; k < 2000; ++k) {
            const double mass = source.pmf(k);
            if (mass == 0.0) break;  // underflow; the dropped tail is < 1e-305
            direct -= mass * std::log2(mass);
        }
        CAPTURE(p);
        CHECK(std::fabs(entropy(p) - direct) < 1e-12);
    }
}

TEST_CASE("entropy behaves at the edges of the range") {
    CHECK(entropy(0.01) > entropy(0.1));
    CHECK(entropy(0.1) > entropy(0.5));
    // small-p expansion: H -> log2(1/p) + log2(e)
    const double log2e = 1.4426950408889634;
    CHECK(std::fabs(entropy(1e-6) - std::log2(1e6) - log2e) < 1e-5);
    CHECK_THROWS_AS(entropy(0.0), std::invalid_argument);
    CHECK_THROWS_AS(entropy(1.0), std::invalid_argument);
}

TEST_CASE("fluctuation vanishes exactly at integers") {
    CHECK(fluctuation(0.0) == 0.0);
    CHECK(fluctuation(1.0) == 0.0);
    CHECK(fluctuation(-2.0) == 0.0);
    CHECK(fluctuation(17.0) == 0.0);
}

TEST_CASE("fluctuation reference value and periodicity") {
    // frozen from a 50-digit evaluation of the closed form at z = 0.5
    CHECK(std::fabs(fluctuation(0.5) - 0.0008569089859270947) < 1e-15);
    CHECK(fluctuation(3.5) == fluctuation(0.5));

    // z = j/256 + k is exactly representable, so the period-1 identity
    // holds bit-for-bit, not just approximately
    for (int j = 0; j < 256; ++j) {
        const double z = j / 256.0;
        CHECK(fluctuation(z + 1.0) == fluctuation(z));
        CHECK(fluctuation(z + 7.0) == fluctuation(z));
        CHECK(fluctuation(z - 3.0) == fluctuation(z));
    }
}

TEST_CASE("fluctuation slope at the period boundary") {
    // f'(0) = 2 (ln 2)^2 - 1
    const double expected = 2.0 * kLn2 * kLn2 - 1.0;
    const double measured = (fluctuation(1e-6) - fluctuation(-1e-6)) / 2e-6;
    CHECK(std::fabs(measured - expected) < 1e-6);
}

TEST_CASE("fluctuation stays inside its published band") {
    for (int i = 0; i <= 10000; ++i) {
        const double z = i / 10000.0;
        CHECK(std::fabs(fluctuation(z)) < 0.005);
    }
}

TEST_CASE("asymptotic law hits dyadic-friendly points exactly") {
    // p = 2^-10 ln 2 makes the argument land on an integer, where f = 0
    const double p = std::exp2(-10) * kLn2;
    CHECK(expected_length_asymptotic(p) == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("asymptotic error at p = 1e-3 matches the frozen oracle") {
    const double err =
        std::fabs(expected_length_exact(1e-3) - expected_length_asymptotic(1e-3));
    CHECK(err == doctest::Approx(0.0007357953926).epsilon(1e-6));
}

TEST_CASE("constants match frozen high-precision references") {
    const FluctuationConstants c = compute_constants();
    CHECK(std::fabs(c.omega - 0.0004547022981279577) < 1e-12);
    CHECK(std::fabs(c.x1 - 0.8140589715232002) < 2e-13);
    CHECK(std::fabs(c.x0 - 1.212304695598939) < 2e-13);
    CHECK(std::fabs(c.z1 - 0.768028412902514) < 1e-12);
    CHECK(std::fabs(c.z0 - 0.19348128172321136) < 1e-12);
    CHECK(std::fabs(c.f_max - 0.004195825581721527) < 1e-12);
    CHECK(std::fabs(c.f_min - (-0.0034380144436102792)) < 1e-12);
    CHECK(std::fabs(c.redundancy_const - 0.028993288464266936) < 1e-12);
}

TEST_CASE("extrema satisfy their defining equation") {
    const FluctuationConstants c = compute_constants();
    const double target = 1.4426950408889634 / 4.0;
    CHECK(std::fabs(c.x1 * std::exp(-c.x1) - target) < 1e-12);
    CHECK(std::fabs(c.x0 * std::exp(-c.x0) - target) < 1e-12);
    // the extrema really are extreme on a fine grid
    for (int i = 0; i <= 10000; ++i) {
        const double z = i / 10000.0;
        CHECK(fluctuation(z) <= c.f_max + 1e-15);
        CHECK(fluctuation(z) >= c.f_min - 1e-15);
    }
}

TEST_CASE("analyze assembles one consistent row") {
    const AnalysisRow row = analyze(0.01);
    CHECK(row.p == 0.01);
    CHECK(row.m == 69);
    CHECK(row.l == 6);
    CHECK(row.h == 5);
    CHECK(row.q == doctest::Approx(0.500162970101).epsilon(1e-11));
    CHECK(row.theta == doctest::Approx(std::log2(69.0) - 6.0).epsilon(1e-15));
    CHECK(row.theta >= 0.0);
    CHECK(row.theta < 1.0);
    CHECK(row.exact_len == expected_length_exact(0.01));
    CHECK(row.entropy == entropy(0.01));
    CHECK(row.asymptotic_len == expected_length_asymptotic(0.01));
    CHECK(row.redundancy == row.exact_len - row.entropy);

    // power-of-two group size puts theta at exactly 0
    CHECK(analyze(0.3).theta == 0.0);
}

TEST_CASE("analysis rejects out-of-range p") {
    CHECK_THROWS_AS(expected_length_exact(0.0), std::invalid_argument);
    CHECK_THROWS_AS(expected_length_exact(1e-16), std::invalid_argument);
    CHECK_THROWS_AS(expected_length_asymptotic(1.0), std::invalid_argument);
    CHECK_THROWS_AS(analyze(-0.5), std::invalid_argument);
}
