#pragma once

#include <functional>

#include "ktrans/family.hpp"
#include "ktrans/minkowski.hpp"

namespace ktrans {

// Chart point with first-order data and first-fundamental-form coefficients.
// discriminant = EG - F^2; its sign matches the surface causal type
// (> 0 spacelike, < 0 timelike).
struct SurfacePoint {
    MinkVec3 position;
    MinkVec3 Xr;
    MinkVec3 Xtheta;
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
    double discriminant = 0.0;
};

/// Chart map of the family at (r, theta) given the profile value f = f(r).
/// theta is the rotation parameter (the cone parameter t for lightlike axes).
MinkVec3 parametrize(Family f, double fvalue, double r, double theta);

SurfacePoint surface_point(Family f, double fvalue, double fprime, double r, double theta);

/// Unit normal fixed so that <N, speed_vector(family)> > 0. Throws DomainError
/// when the causal condition degenerates at (r, fprime).
MinkVec3 unit_normal(Family f, double fprime, double r, double theta);

/// <N, v> for the family's normal convention; equals 1/sqrt(|1 -+ f'^2|) or
/// 1/sqrt(|f'|) depending on the family.
double normal_speed(Family f, double fprime);

/// Closed-form Gauss curvature of the family's chart in terms of the profile
/// derivatives. Positive on translator domains.
double gauss_curvature_analytic(Family f, double r, double fprime, double fsecond);

/// Independent curvature oracle: evaluates
///   K = -[det(Xu,Xv,Xuu) det(Xu,Xv,Xvv) - det(Xu,Xv,Xuv)^2] / (EG - F^2)^2
/// with second-order central differences of the chart map, using only values
/// of the profile f. Requires [r - 2h, r + 2h] inside f's domain of validity.
/// The xz-curve hyperbolic chart reports K with the opposite sign from the raw
/// determinant expression; the oracle follows the per-family convention of
/// gauss_curvature_analytic (see gauss_curvature_det_raw for the raw value).
double gauss_curvature_fd(Family f, const std::function<double(double)>& fvalue,
                          double r, double theta, double h);

/// The raw determinant-formula value, before the per-chart orientation factor.
double gauss_curvature_det_raw(Family f, const std::function<double(double)>& fvalue,
                               double r, double theta, double h);

/// Default finite-difference step at radius r.
double default_fd_step(double r);

} // namespace ktrans
