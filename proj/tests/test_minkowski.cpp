#include <random>

#include "doctest.h"

#include "ktrans/minkowski.hpp"

using namespace ktrans;

namespace {
std::mt19937_64 rng(0x5eed0001);
MinkVec3 random_vec(double scale = 3.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng)};
}
} // namespace

TEST_CASE("lorentz inner product on basis directions") {
    CHECK(lorentz_inner({0, 0, 1}, {0, 0, 1}) == -1.0);
    CHECK(lorentz_inner({1, 0, 0}, {1, 0, 0}) == 1.0);
    CHECK(lorentz_inner({0, 1, 1}, {0, 1, 1}) == 0.0);
}

TEST_CASE("lorentz inner product symmetry and bilinearity") {
    std::uniform_real_distribution<double> s(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const MinkVec3 u = random_vec(), v = random_vec(), w = random_vec();
        const double k = s(rng);
        CHECK(lorentz_inner(u, v) == doctest::Approx(lorentz_inner(v, u)).epsilon(1e-14));
        CHECK(lorentz_inner(k * u + w, v) ==
              doctest::Approx(k * lorentz_inner(u, v) + lorentz_inner(w, v)).epsilon(1e-12));
    }
}

TEST_CASE("causal classification") {
    CHECK(causal_class({0, 0, 1}) == CausalClass::Timelike);
    CHECK(causal_class({0, 1, 1}) == CausalClass::Lightlike);
    CHECK(causal_class({2, 0, 1}) == CausalClass::Spacelike);

    // scaling invariance with tol = 0
    for (int i = 0; i < 100; ++i) {
        const MinkVec3 v = random_vec();
        std::uniform_real_distribution<double> k(0.1, 5.0);
        const double s = k(rng) * (i % 2 ? 1.0 : -1.0);
        CHECK(causal_class(s * v) == causal_class(v));
    }

    // tolerance widens the lightlike band
    CHECK(causal_class({1.0, 0.0, 1.0 + 1e-9}, 1e-6) == CausalClass::Lightlike);
    CHECK(causal_class({1.0, 0.0, 1.0 + 1e-9}, 0.0) == CausalClass::Timelike);
}

TEST_CASE("triple determinant") {
    CHECK(triple_det({1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == 1.0);
    CHECK(triple_det({1, 0, 0}, {1, 0, 0}, {0, 0, 1}) == 0.0);
    CHECK(triple_det({1, 2, 0}, {0, 1, 0}, {0, 0, 3}) == 3.0);
}

TEST_CASE("triple determinant is alternating") {
    for (int i = 0; i < 100; ++i) {
        const MinkVec3 a = random_vec(), b = random_vec(), c = random_vec();
        const double d = triple_det(a, b, c);
        CHECK(triple_det(b, a, c) == doctest::Approx(-d).epsilon(1e-12));
        CHECK(triple_det(a, c, b) == doctest::Approx(-d).epsilon(1e-12));
        CHECK(triple_det(c, b, a) == doctest::Approx(-d).epsilon(1e-12));
    }
}
