#include <doctest.h>

#include <stdexcept>

#include "rankmod/capacity.hpp"

using namespace rankmod;

TEST_CASE("single-constraint surfaces") {
    CHECK(capacity_single_sym(0.0) == doctest::Approx(0.5));
    CHECK(capacity_single_sym(0.5) == doctest::Approx(0.75));
    CHECK(capacity_single_sym(1.0) == doctest::Approx(1.0));
    // Limiting only drops costs nothing in rate.
    for (double eps : {0.0, 0.25, 0.5, 1.0}) CHECK(capacity_single_asym(eps) == 1.0);
}

TEST_CASE("two-parameter symmetric surface hits its three regimes") {
    CHECK(capacity_two_sym(0.5, 0.5) == doctest::Approx(0.75));
    CHECK(capacity_two_sym(0.5, 1.2) == doctest::Approx(0.55));
    CHECK(capacity_two_sym(0.5, 1.8) == doctest::Approx(0.1));
    // Distance parameter below one has no effect.
    CHECK(capacity_two_sym(0.3, 0.0) == capacity_two_sym(0.3, 1.0));
    CHECK(capacity_two_sym(1.0, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("two-parameter asymmetric surface") {
    CHECK(capacity_two_asym(0.3, 0.9) == doctest::Approx(1.0));
    CHECK(capacity_two_asym(0.9, 1.5) == doctest::Approx(0.5));
    CHECK(capacity_two_asym(0.1, 2.0) == doctest::Approx(0.0));
    CHECK(capacity_two_asym(1.0, 2.0) == doctest::Approx(0.0));
    // The first parameter never matters.
    CHECK(capacity_two_asym(0.0, 1.4) == capacity_two_asym(1.0, 1.4));
}

TEST_CASE("surfaces are continuous across their seams") {
    const double h = 1e-9;
    for (double eps1 : {0.0, 0.3, 0.7, 1.0}) {
        CHECK(capacity_two_sym(eps1, 1.0 - h)
              == doctest::Approx(capacity_two_sym(eps1, 1.0 + h)).epsilon(1e-6));
        const double seam = 1.0 + eps1;
        if (seam < 2.0)
            CHECK(capacity_two_sym(eps1, seam - h)
                  == doctest::Approx(capacity_two_sym(eps1, seam + h)).epsilon(1e-6));
        CHECK(capacity_two_asym(eps1, 1.0 - h)
              == doctest::Approx(capacity_two_asym(eps1, 1.0 + h)).epsilon(1e-6));
    }
}

TEST_CASE("surfaces are monotone in the distance parameter") {
    for (double eps1 : {0.0, 0.4, 1.0}) {
        double prev_sym = 2.0, prev_asym = 2.0;
        for (int i = 0; i <= 20; ++i) {
            const double eps2 = i / 10.0;
            const double s = capacity_two_sym(eps1, eps2);
            const double a = capacity_two_asym(eps1, eps2);
            CHECK(s <= prev_sym + 1e-12);
            CHECK(a <= prev_asym + 1e-12);
            CHECK(s <= a + 1e-12); // the symmetric constraint is stricter
            prev_sym = s;
            prev_asym = a;
        }
    }
}

TEST_CASE("parameters outside the surface domain are rejected") {
    CHECK_THROWS_AS(capacity_single_sym(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(capacity_single_sym(1.1), std::invalid_argument);
    CHECK_THROWS_AS(capacity_single_asym(2.0), std::invalid_argument);
    CHECK_THROWS_AS(capacity_two_sym(0.5, 2.1), std::invalid_argument);
    CHECK_THROWS_AS(capacity_two_sym(-0.01, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(capacity_two_asym(0.5, -0.5), std::invalid_argument);
}
