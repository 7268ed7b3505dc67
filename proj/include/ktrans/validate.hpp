#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "ktrans/profile.hpp"
#include "ktrans/surface.hpp"

namespace ktrans {

enum class CurvatureSource { Analytic, FiniteDifference };

struct GridSpec {
    int n_r = 100;
    int n_theta = 16;
    double inset = 0.1; // fraction of the effective width kept clear at each end; must be > 0
    std::optional<std::pair<double, double>> theta_window; // default per chart
    // Effective width when r_hi is infinite. Far windows on unbounded domains
    // are asymptotically degenerate (the causal margin shrinks below double
    // resolution), so the default covers the curved near region.
    double infinite_truncation = 2.0;
};

/// [0, 2pi) for the polar chart, [-2, 2] for the hyperbolic and lightlike ones.
std::pair<double, double> default_theta_window(Family f);

/// Pointwise residual |K^alpha - <N, v>| with analytic curvature assembled
/// from the supplied derivative values. K <= 0 is an error, never a NaN.
double residual_from_values(Family f, double alpha, double r, double theta, double fprime,
                            double fsecond);

struct ResidualOptions {
    double fd_step = 0.0; // 0 -> default_fd_step(r)
    // Replaces the f-evaluator backing the finite-difference curvature; used
    // by negative controls to validate foreign curve data against a profile.
    std::function<double(double)> profile_override;
};

double residual_at(const Profile& p, double r, double theta, CurvatureSource source,
                   const ResidualOptions& opts = {});

struct ResidualReport {
    Family family = Family::TA_S;
    double alpha = 0.0;
    double m = 0.0;
    BranchSign sign = BranchSign::Plus;
    int n_r = 0;
    int n_theta = 0;
    double inset = 0.0;
    double r_lo = 0.0, r_hi = 0.0;         // sampled window
    double theta_lo = 0.0, theta_hi = 0.0; // half-open window
    double fd_step = 0.0;                  // 0 -> per-point default
    double sup_analytic = 0.0, mean_analytic = 0.0;
    double sup_fd = 0.0, mean_fd = 0.0;
    double worst_r = 0.0, worst_theta = 0.0; // arg-sup of the analytic residual
};

/// Sweeps the interior grid and reports sup/mean residuals for both curvature
/// sources (the finite-difference column is the independent oracle evidence).
/// Deterministic for a fixed grid spec.
ResidualReport validate_grid(const Profile& p, const GridSpec& grid = {},
                             const ResidualOptions& opts = {});

} // namespace ktrans
