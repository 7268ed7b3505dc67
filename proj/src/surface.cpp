#include "ktrans/surface.hpp"

#include <array>
#include <cmath>

#include "ktrans/errors.hpp"

namespace ktrans {

namespace {

constexpr double kDegenerateTol = 1e-14;

void check_point_args(double fvalue, double r, double theta) {
    if (!(r > 0.0)) throw DomainError("chart requires r > 0");
    if (!std::isfinite(fvalue) || !std::isfinite(r) || !std::isfinite(theta))
        throw DomainError("chart requires finite (f, r, theta)");
}

// Denominator base of the family's unit normal; positive iff the causal
// condition holds strictly.
double normal_base(Family f, double fprime) {
    switch (f) {
    case Family::TA_S:
    case Family::SA_T1: return 1.0 - fprime * fprime;
    case Family::TA_T:
    case Family::SA_S: return fprime * fprime - 1.0;
    case Family::SA_T2: return 1.0 + fprime * fprime;
    case Family::LA_S: return fprime;
    case Family::LA_T: return -fprime;
    }
    return 0.0;
}

} // namespace

MinkVec3 parametrize(Family f, double fvalue, double r, double theta) {
    check_point_args(fvalue, r, theta);
    switch (family_chart(f)) {
    case Chart::PolarZ: return {r * std::cos(theta), r * std::sin(theta), fvalue};
    case Chart::HyperbolicXZ: return {fvalue, r * std::sinh(theta), r * std::cosh(theta)};
    case Chart::HyperbolicXY: return {fvalue, r * std::cosh(theta), r * std::sinh(theta)};
    case Chart::LightCone:
        return {2.0 * r * theta, fvalue + r - r * theta * theta, fvalue - r - r * theta * theta};
    }
    return {};
}

SurfacePoint surface_point(Family f, double fvalue, double fprime, double r, double theta) {
    SurfacePoint p;
    p.position = parametrize(f, fvalue, r, theta);
    switch (family_chart(f)) {
    case Chart::PolarZ:
        p.Xr = {std::cos(theta), std::sin(theta), fprime};
        p.Xtheta = {-r * std::sin(theta), r * std::cos(theta), 0.0};
        break;
    case Chart::HyperbolicXZ:
        p.Xr = {fprime, std::sinh(theta), std::cosh(theta)};
        p.Xtheta = {0.0, r * std::cosh(theta), r * std::sinh(theta)};
        break;
    case Chart::HyperbolicXY:
        p.Xr = {fprime, std::cosh(theta), std::sinh(theta)};
        p.Xtheta = {0.0, r * std::sinh(theta), r * std::cosh(theta)};
        break;
    case Chart::LightCone:
        p.Xr = {2.0 * theta, fprime + 1.0 - theta * theta, fprime - 1.0 - theta * theta};
        p.Xtheta = {2.0 * r, -2.0 * r * theta, -2.0 * r * theta};
        break;
    }
    p.E = lorentz_inner(p.Xr, p.Xr);
    p.F = lorentz_inner(p.Xr, p.Xtheta);
    p.G = lorentz_inner(p.Xtheta, p.Xtheta);
    p.discriminant = p.E * p.G - p.F * p.F;
    return p;
}

MinkVec3 unit_normal(Family f, double fprime, double r, double theta) {
    if (!(r > 0.0)) throw DomainError("unit normal requires r > 0");
    const double base = normal_base(f, fprime);
    if (!(base > kDegenerateTol))
        throw DomainError("degenerate causal condition: normal undefined at this f'");
    switch (f) {
    case Family::TA_S:
    case Family::TA_T: {
        const double s = -1.0 / std::sqrt(base);
        return {s * fprime * std::cos(theta), s * fprime * std::sin(theta), s};
    }
    case Family::SA_S:
    case Family::SA_T1: {
        const double s = -1.0 / std::sqrt(base);
        return {s, s * fprime * std::sinh(theta), s * fprime * std::cosh(theta)};
    }
    case Family::SA_T2: {
        const double s = 1.0 / std::sqrt(base);
        return {s, -s * fprime * std::cosh(theta), -s * fprime * std::sinh(theta)};
    }
    case Family::LA_S:
    case Family::LA_T: {
        const double s = 1.0 / (2.0 * std::sqrt(base));
        const double t2 = theta * theta;
        return {-2.0 * theta * s, (-1.0 + t2 + fprime) * s, (1.0 + t2 + fprime) * s};
    }
    }
    return {};
}

double normal_speed(Family f, double fprime) {
    const double base = normal_base(f, fprime);
    if (!(base > kDegenerateTol))
        throw DomainError("degenerate causal condition: <N,v> undefined at this f'");
    return 1.0 / std::sqrt(base);
}

double gauss_curvature_analytic(Family f, double r, double fprime, double fsecond) {
    if (!(r > 0.0)) throw DomainError("curvature requires r > 0");
    switch (family_chart(f)) {
    case Chart::PolarZ:
    case Chart::HyperbolicXZ: {
        const double d = 1.0 - fprime * fprime;
        if (std::abs(d) <= kDegenerateTol)
            throw DomainError("degenerate causal condition: curvature undefined at f'^2 = 1");
        return -fprime * fsecond / (r * d * d);
    }
    case Chart::HyperbolicXY: {
        const double d = 1.0 + fprime * fprime;
        return fprime * fsecond / (r * d * d);
    }
    case Chart::LightCone: {
        if (std::abs(fprime) <= kDegenerateTol)
            throw DomainError("degenerate causal condition: curvature undefined at f' = 0");
        return fsecond / (8.0 * r * fprime * fprime);
    }
    }
    return 0.0;
}

double default_fd_step(double r) { return std::max(1e-5, 1e-4 * std::abs(r)); }

namespace {

using Vec3L = std::array<long double, 3>;

Vec3L chart_ld(Chart c, long double fvalue, long double r, long double theta) {
    switch (c) {
    case Chart::PolarZ: return {r * std::cos(theta), r * std::sin(theta), fvalue};
    case Chart::HyperbolicXZ: return {fvalue, r * std::sinh(theta), r * std::cosh(theta)};
    case Chart::HyperbolicXY: return {fvalue, r * std::cosh(theta), r * std::sinh(theta)};
    case Chart::LightCone:
        return {2.0L * r * theta, fvalue + r - r * theta * theta, fvalue - r - r * theta * theta};
    }
    return {};
}

long double inner_ld(const Vec3L& u, const Vec3L& v) {
    return u[0] * v[0] + u[1] * v[1] - u[2] * v[2];
}

long double det_ld(const Vec3L& a, const Vec3L& b, const Vec3L& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
           c[0] * (a[1] * b[2] - a[2] * b[1]);
}

Vec3L vsub(const Vec3L& a, const Vec3L& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3L vscale(long double s, const Vec3L& a) { return {s * a[0], s * a[1], s * a[2]}; }
Vec3L vadd3(const Vec3L& a, const Vec3L& b, const Vec3L& c) {
    return {a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]};
}

} // namespace

double gauss_curvature_det_raw(Family f, const std::function<double(double)>& fvalue,
                               double r, double theta, double h) {
    if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
    if (!(r > 0.0)) throw DomainError("curvature requires r > 0");
    const Chart c = family_chart(f);
    const long double hl = h;
    const long double rl = r;
    const long double tl = theta;

    // Profile values at the three radii of the stencil; the additive constant
    // of f is immaterial for K.
    const long double fm = fvalue(r - h);
    const long double f0 = fvalue(r);
    const long double fp = fvalue(r + h);

    const Vec3L Pmm = chart_ld(c, fm, rl - hl, tl - hl);
    const Vec3L Pm0 = chart_ld(c, fm, rl - hl, tl);
    const Vec3L Pmp = chart_ld(c, fm, rl - hl, tl + hl);
    const Vec3L P0m = chart_ld(c, f0, rl, tl - hl);
    const Vec3L P00 = chart_ld(c, f0, rl, tl);
    const Vec3L P0p = chart_ld(c, f0, rl, tl + hl);
    const Vec3L Ppm = chart_ld(c, fp, rl + hl, tl - hl);
    const Vec3L Pp0 = chart_ld(c, fp, rl + hl, tl);
    const Vec3L Ppp = chart_ld(c, fp, rl + hl, tl + hl);

    const Vec3L Xu = vscale(0.5L / hl, vsub(Pp0, Pm0));
    const Vec3L Xv = vscale(0.5L / hl, vsub(P0p, P0m));
    const Vec3L Xuu = vscale(1.0L / (hl * hl), vadd3(Pp0, vscale(-2.0L, P00), Pm0));
    const Vec3L Xvv = vscale(1.0L / (hl * hl), vadd3(P0p, vscale(-2.0L, P00), P0m));
    const Vec3L Xuv = vscale(0.25L / (hl * hl), vadd3(vsub(Ppp, Ppm), vscale(-1.0L, Pmp), Pmm));

    const long double E = inner_ld(Xu, Xu);
    const long double F = inner_ld(Xu, Xv);
    const long double G = inner_ld(Xv, Xv);
    const long double disc = E * G - F * F;
    if (std::abs(disc) < 1e-18)
        throw NumericalError("finite-difference curvature: discriminant within tolerance of zero");

    const long double d1 = det_ld(Xu, Xv, Xuu);
    const long double d2 = det_ld(Xu, Xv, Xvv);
    const long double d3 = det_ld(Xu, Xv, Xuv);
    return static_cast<double>(-(d1 * d2 - d3 * d3) / (disc * disc));
}

double gauss_curvature_fd(Family f, const std::function<double(double)>& fvalue,
                          double r, double theta, double h) {
    const double raw = gauss_curvature_det_raw(f, fvalue, r, theta, h);
    // Keep the xz-curve hyperbolic chart on the same sign convention as the
    // family formulas (its raw determinant value carries the opposite sign).
    return family_chart(f) == Chart::HyperbolicXZ ? -raw : raw;
}

} // namespace ktrans
