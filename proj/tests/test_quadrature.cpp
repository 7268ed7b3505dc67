#include <cmath>
#include <numbers>

#include "doctest.h"

#include "ktrans/errors.hpp"
#include "ktrans/quadrature.hpp"

using namespace ktrans;

TEST_CASE("adaptive quadrature on smooth integrands") {
    const auto r1 = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(r1.value == doctest::Approx(2.0).epsilon(1e-12));

    const auto r2 = integrate_adaptive([](double x) { return std::exp(-x * x); }, -6.0, 6.0);
    CHECK(r2.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));

    // orientation and the empty interval
    const auto r3 = integrate_adaptive([](double x) { return x; }, 2.0, 1.0);
    CHECK(r3.value == doctest::Approx(-1.5).epsilon(1e-13));
    CHECK(integrate_adaptive([](double x) { return x; }, 1.0, 1.0).value == 0.0);
}

TEST_CASE("adaptive quadrature resolves mild endpoint structure") {
    // sqrt singularity in the derivative only
    const auto r = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
}

TEST_CASE("algebraic endpoint substitution integrates inverse-root blowups") {
    const auto left = integrate_singular_left([](double x) { return 1.0 / std::sqrt(x); }, 0.0,
                                              1.0, -0.5);
    CHECK(left.value == doctest::Approx(2.0).epsilon(1e-12));

    const auto right = integrate_singular_right(
        [](double x) { return 1.0 / std::cbrt(1.0 - x); }, 0.0, 1.0, -1.0 / 3.0);
    CHECK(right.value == doctest::Approx(1.5).epsilon(1e-11));

    CHECK_THROWS_AS(integrate_singular_left([](double x) { return 1.0 / x; }, 0.0, 1.0, -1.0),
                    NumericalError);
}

TEST_CASE("budget exhaustion is an explicit failure") {
    QuadratureOptions opts;
    opts.max_intervals = 8;
    opts.abs_tol = 1e-15;
    opts.rel_tol = 1e-15;
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3)); },
                                       0.0, 1.0, opts),
                    NumericalError);
}

TEST_CASE("single panel matches the adaptive value on short spans") {
    auto f = [](double x) { return std::cos(3.0 * x) + x * x; };
    const double a = 0.7, b = 0.7004;
    const double panel = gk15_panel(f, a, b);
    const double full = integrate_adaptive(f, a, b).value;
    CHECK(panel == doctest::Approx(full).epsilon(1e-15));
    CHECK(gk15_panel(f, b, a) == doctest::Approx(-panel).epsilon(1e-15));
}
