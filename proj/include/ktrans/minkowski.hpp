#pragma once

#include <cmath>

namespace ktrans {

// Ambient vector of R^3_1 with the metric dx^2 + dy^2 - dz^2.
struct MinkVec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend MinkVec3 operator+(MinkVec3 a, MinkVec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend MinkVec3 operator-(MinkVec3 a, MinkVec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend MinkVec3 operator*(double s, MinkVec3 v) { return {s * v.x, s * v.y, s * v.z}; }
    friend MinkVec3 operator-(MinkVec3 v) { return {-v.x, -v.y, -v.z}; }

    bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

enum class CausalClass { Spacelike, Timelike, Lightlike };

inline double lorentz_inner(MinkVec3 u, MinkVec3 v) { return u.x * v.x + u.y * v.y - u.z * v.z; }

/// Causal type of v from the sign of <v,v>. tol widens the lightlike band for
/// vectors carrying rounding noise; exact constructions use tol = 0.
inline CausalClass causal_class(MinkVec3 v, double tol = 0.0) {
    const double q = lorentz_inner(v, v);
    if (std::abs(q) <= tol || q == 0.0) return CausalClass::Lightlike;
    return q > 0.0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

/// Euclidean determinant of the column matrix [a b c].
inline double triple_det(MinkVec3 a, MinkVec3 b, MinkVec3 c) {
    return a.x * (b.y * c.z - b.z * c.y) - b.x * (a.y * c.z - a.z * c.y) +
           c.x * (a.y * b.z - a.z * b.y);
}

} // namespace ktrans
