#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tuza/bounds.hpp"

using namespace tuza;

TEST_CASE("alpha closed form") {
    CHECK(alpha(3, 0) == doctest::Approx(0.0));
    CHECK(alpha(3, 1) == doctest::Approx(1.0 - 1.0 / std::sqrt(3.0)));
    double prev = 0;
    for (int i = 1; i <= 100; ++i) {
        double v = alpha(5, 0.1 * i);
        CHECK(v > prev);  // strictly increasing in d
        prev = v;
    }
    CHECK_THROWS(alpha(1, 1.0));
}

TEST_CASE("beta closed form and limits") {
    CHECK(beta(3, 0) == doctest::Approx(0.0));
    CHECK(beta(3, 1) == doctest::Approx(0.5 * (1 - std::exp(-0.5 * (1 + std::exp(-1.0))))));
    CHECK(beta(3, 1000) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(beta(4, 1000) == doctest::Approx(4.0 / 9).epsilon(1e-9));
    CHECK(beta(5, 1000) == doctest::Approx(5.0 / 16).epsilon(1e-9));
    CHECK_THROWS(beta(6, 1.0));
}

TEST_CASE("stirling numbers") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(3, 5) == 0);
    for (int n = 1; n <= 10; ++n) {
        CHECK(stirling2(n, 1) == 1);
        CHECK(stirling2(n, n) == 1);
    }
    CHECK(stirling2(10, 5) == 42525);
}

TEST_CASE("zeta_1 exact values and oracle equivalence") {
    CHECK(zeta1_formula(6, 2) == BigRat(20, 32));
    CHECK(zeta1_formula(5, 2) == BigRat(6, 16));
    for (int r = 3; r <= 10; ++r) CHECK(zeta1_formula(r, 1) == 1);
    for (int r = 3; r <= 9; ++r)
        for (int l = 1; l <= 3; ++l)
            CHECK(zeta1_formula(r, l) == zeta1_enumeration(r, l));
    // zeta_1 + zeta_2 = 1 by definition; range check
    for (int r = 4; r <= 12; ++r)
        for (int l = 2; 2 * l <= r; ++l) {
            BigRat z = zeta1_formula(r, l);
            CHECK(z >= 0);
            CHECK(z <= 1);
        }
    CHECK_THROWS(zeta1_enumeration(40, 5));  // guard
}

TEST_CASE("psi matches its explicit r=6 expansion") {
    double expect = 5.0 / 32 * (1 - std::exp(-0.5 * (1 + std::exp(-1.0)))) +
                    7.0 / 32 * (1 - std::exp(-1.0));
    CHECK(psi(6, 2, 1.0) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(psi(6, 2, 0.0) == doctest::Approx(0.0));
    // bounded by the d -> infinity limit
    double z1 = static_cast<double>(zeta1_formula(6, 2));
    double lim = z1 / 4 + (1 - z1) / 2 + std::pow(0.5, 5);
    for (double d = 0.1; d < 40; d += 0.7) CHECK(psi(6, 2, d) <= lim + 1e-12);
    CHECK_THROWS(psi(6, 4, 1.0));
}

TEST_CASE("eta is weakly increasing on the stated interval") {
    CHECK(eta(3, 1e-6) == doctest::Approx(1.0).epsilon(1e-3));
    for (int r = 6; r <= 50; ++r) CHECK(eta_monotone_check(r));
}

TEST_CASE("per-shadow cover bounds") {
    CHECK(tau_bound_fr(5, 1) == doctest::Approx(1.0));
    CHECK(tau_bound_fr(6, 2) == doctest::Approx(0.5 + std::pow(0.5, 5)));
    CHECK(tau_bound_sidorenko(6, 2) == doctest::Approx(0.375));
    CHECK_THROWS(tau_bound_sidorenko(6, 1));
    CHECK_THROWS(tau_bound_sidorenko(6, 4));
}

TEST_CASE("large-r constants and delta") {
    auto c = large_r_constants(271);
    CHECK(c.c0 == doctest::Approx(0.2421).epsilon(2e-3));
    CHECK(c.c1 <= 0.50);
    CHECK(c.c2 <= 1.08);
    CHECK(c.c3 <= 0.012);
    CHECK(delta(271, 0.2421, 1.08, 0.012) < 0.747);
    auto c1000 = large_r_constants(1000);
    CHECK(delta(1000, c1000) < 0.6964);
    CHECK(large_r_constants(1e6).c0 < 1e-3);
    CHECK_THROWS(large_r_constants(5));
    // decreasing on a grid with the fixed reference constants
    double prev = delta(4, 0.2421, 1.08, 0.012);
    for (int r = 5; r <= 10000; ++r) {
        double v = delta(r, 0.2421, 1.08, 0.012);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("finite-interval ratio checks") {
    auto r3 = small_r_ratio_check(3, 0.5, 5.0);
    CHECK(r3.passed);
    CHECK(r3.max_ratio <= 2.0);
    auto r4 = small_r_ratio_check(4, 1.0 / 3, 5.0);
    CHECK(r4.passed);
    CHECK(r4.max_ratio == doctest::Approx(2.8830).epsilon(1e-3));
    auto r5 = small_r_ratio_check(5, 0.25, 5.0);
    CHECK(r5.passed);
    CHECK(r5.max_ratio <= 3.0);
    CHECK_THROWS(small_r_ratio_check(4, 0.1, 5.0));

    auto m7 = medium_r_check(7);
    CHECK(m7.passed);
    CHECK((m7.best_l == 2 || m7.best_l == 3));
    CHECK(medium_r_check(270).passed);
    CHECK_THROWS(medium_r_check(6));

    auto r6 = r6_ratio_check();
    CHECK(r6.passed);
    CHECK(r6.max_ratio < 4.686);
    CHECK(r6.max_ratio > 4.5);
}

TEST_CASE("minimax ratios reproduce the reference rows") {
    auto v6 = minimax_ratio(6);
    CHECK(v6.value == doctest::Approx(0.7805).epsilon(7e-4));
    CHECK(v6.best_l == 2);
    CHECK(minimax_ratio(7).value == doctest::Approx(0.7064).epsilon(7e-4));
    CHECK(minimax_ratio(12).value == doctest::Approx(0.6741).epsilon(7e-4));
    // sup dominates the explicit limit candidate
    CHECK(v6.value >= v6.limit_value);
    auto rows = minimax_table(6, 8);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].r == 6);
    CHECK(rows[2].r == 8);
    CHECK_THROWS(minimax_ratio(5));
}
