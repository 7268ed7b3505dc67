#include <cmath>

#include "doctest.h"

#include "ktrans/errors.hpp"
#include "ktrans/glue.hpp"

using namespace ktrans;

namespace {

GluedCurve make_pair(char axis, double alpha, double m, double tol = 1e-10) {
    switch (axis) {
    case 'T':
        return glue(Profile(Family::TA_T, alpha, m), Profile(Family::TA_S, alpha, -m), tol);
    case 'S':
        return glue(Profile(Family::SA_S, alpha, m), Profile(Family::SA_T1, alpha, -m), tol);
    default:
        return glue(Profile(Family::LA_T, alpha, m), Profile(Family::LA_S, alpha, -m), tol);
    }
}

} // namespace

TEST_CASE("junction radii of the reference pairs") {
    const GluedCurve ta = make_pair('T', 0.25, 1.0);
    CHECK(ta.r_junction() == doctest::Approx(1.0).epsilon(1e-15));

    const GluedCurve la = make_pair('L', 0.25, 1.0);
    CHECK(la.r_junction() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(la.domain().lo == 0.0);
    CHECK(la.domain().hi_unbounded()); // the lightlike pair covers (0, inf)

    const GluedCurve sa = make_pair('S', 0.25, 1.0);
    CHECK(sa.r_junction() == doctest::Approx(1.0).epsilon(1e-14)); // sqrt(2*0.25*1/0.5)
    const GluedCurve sa2 = make_pair('S', 0.25, 0.5);
    CHECK(sa2.r_junction() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("junction endpoints coincide bitwise for exactly mirrored constants") {
    for (char axis : {'T', 'S', 'L'})
        for (double alpha : {0.1, 1.0 / 6.0, 0.25, 0.4})
            for (double m : {0.5, 1.0, 2.0}) {
                const GluedCurve c = make_pair(axis, alpha, m);
                CHECK(c.left().domain().hi == c.right().domain().lo);
            }
}

TEST_CASE("inadmissible glue requests are rejected") {
    const Profile ta_t(Family::TA_T, 0.25, 1.0);
    const Profile ta_s(Family::TA_S, 0.25, -1.0);
    CHECK_THROWS_AS(glue(ta_t, ta_t, 1e-10), AdmissibilityError); // same family
    CHECK_THROWS_AS(glue(ta_s, ta_t, 1e-10), AdmissibilityError); // wrong order
    CHECK_THROWS_AS(glue(ta_t, Profile(Family::TA_S, 0.25, -1.5), 1e-10),
                    AdmissibilityError); // m mismatch
    CHECK_THROWS_AS(glue(Profile(Family::TA_T, 0.2, 1.0), Profile(Family::TA_S, 0.25, -1.0), 1e-10),
                    AdmissibilityError); // alpha mismatch
    CHECK_THROWS_AS(glue(Profile(Family::SA_S, 0.25, 1.0), ta_s, 1e-10),
                    AdmissibilityError); // cross-axis pair
    // alpha outside (0, 1/2): no degenerate boundary exists
    CHECK_THROWS_AS(glue(Profile(Family::TA_T, 0.75, 1.0), Profile(Family::TA_S, 0.75, 2.0), 1e-10),
                    AdmissibilityError);
}

TEST_CASE("glued curve is continuous across the junction") {
    for (char axis : {'T', 'S', 'L'}) {
        const GluedCurve c = make_pair(axis, 0.25, 1.0);
        const auto diags = c.diagnostics();
        REQUIRE(diags.size() == 3);
        double prev_gap = std::numeric_limits<double>::infinity();
        for (const auto& d : diags) {
            CHECK(d.f_gap < prev_gap);
            prev_gap = d.f_gap;
        }
        CHECK(diags.back().f_gap < 1e-3);
        CHECK(diags.back().fprime_sq_gap < 1e-2);
        CHECK(c.f(c.r_junction()) == 0.0);
    }
}

TEST_CASE("degeneracy approaches match on both sides") {
    // Polar pair: f'^2 -> 1 from above on the inner (timelike) side and from
    // below on the outer (spacelike) side.
    const GluedCurve ta = make_pair('T', 0.25, 1.0);
    const double rj = ta.r_junction();
    for (double d : {1e-2, 1e-3, 1e-4}) {
        const double inner = std::pow(ta.left().fprime(rj - d), 2);
        const double outer = std::pow(ta.right().fprime(rj + d), 2);
        CHECK(inner > 1.0);
        CHECK(outer < 1.0);
    }
    // Hyperbolic pair: the spacelike side sits inside (f'^2 > 1), the
    // timelike extension outside (f'^2 < 1).
    const GluedCurve sa = make_pair('S', 0.25, 1.0);
    const double sj = sa.r_junction();
    for (double d : {1e-2, 1e-3}) {
        CHECK(std::pow(sa.left().fprime(sj - d), 2) > 1.0);
        CHECK(std::pow(sa.right().fprime(sj + d), 2) < 1.0);
    }
    // Lightlike pair: f' -> 0 with the matching sign change.
    const GluedCurve la = make_pair('L', 0.25, 1.0);
    const double lj = la.r_junction();
    for (double d : {1e-2, 1e-3}) {
        CHECK(la.left().fprime(lj - d) < 0.0);
        CHECK(la.right().fprime(lj + d) > 0.0);
    }
}

TEST_CASE("lightlike glued cubic is one global curve") {
    // At alpha = 1/4 both sides of the lightlike pair are branches of the
    // same cubic 4r^3/3 - mr, so the glued f is smooth across the junction.
    const GluedCurve la = make_pair('L', 0.25, 1.0);
    for (double r : {0.1, 0.3, 0.49, 0.51, 0.8, 1.5}) {
        const double expected = 4.0 * r * r * r / 3.0 - r - (4.0 * 0.125 / 3.0 - 0.5);
        CHECK(std::abs(la.f(r) - expected) < 1e-9);
    }
}
