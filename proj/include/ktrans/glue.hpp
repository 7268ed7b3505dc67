#pragma once

#include <span>
#include <vector>

#include "ktrans/profile.hpp"

namespace ktrans {

struct GlueDiagnostic {
    double delta = 0.0;
    double f_gap = 0.0;         // |f_left(r_j - delta) - f_right(r_j + delta)|
    double fprime_gap = 0.0;    // |f'_left(r_j - delta) - f'_right(r_j + delta)|
    double fprime_sq_gap = 0.0; // |f'_left^2 - f'_right^2| at the same offsets
};

// A spacelike and a timelike profile with the same axis joined across their
// common degenerate boundary. f is re-anchored so both sides vanish at the
// junction; only C^0 continuity in f plus the matched f' limit is claimed.
class GluedCurve {
  public:
    GluedCurve(Profile left, Profile right, double r_junction);

    const Profile& left() const { return left_; }
    const Profile& right() const { return right_; }
    double r_junction() const { return r_junction_; }
    Interval domain() const { return {left_.domain().lo, right_.domain().hi}; }

    /// Piecewise f with f(r_junction) = 0 on both sides.
    double f(double r, const QuadratureOptions& opts = {}) const;
    /// Piecewise f'; the junction itself is not evaluable (use diagnostics).
    double fprime(double r) const;

    std::vector<GlueDiagnostic> diagnostics(std::span<const double> deltas,
                                            const QuadratureOptions& opts = {}) const;
    std::vector<GlueDiagnostic> diagnostics(const QuadratureOptions& opts = {}) const;

  private:
    Profile left_;
    Profile right_;
    double r_junction_;
};

/// Joins the inner (left) and outer (right) profiles across their shared
/// degenerate endpoint. Admissible pairs (left first): TA-T with TA-S,
/// SA-S with SA-T1, LA-T with LA-S, with alpha in (0, 1/2) shared exactly and
/// m_right = -m_left within tol.
GluedCurve glue(const Profile& left, const Profile& right, double tol = 1e-10);

} // namespace ktrans
