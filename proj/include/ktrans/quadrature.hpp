#pragma once

#include <functional>

namespace ktrans {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_intervals = 2000; // refinement budget; exceeding it is an error
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b]. Nodes stay in
/// the open interval, so endpoint values of f are never requested. Throws
/// NumericalError with the worst-subinterval diagnostics when the budget is
/// exhausted before reaching max(abs_tol, rel_tol * |integral|).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts = {});

/// Same, for an integrand behaving like (x - a)^p (p > -1) near the left
/// endpoint; the algebraic substitution x = a + t^(1/(1+p)) removes the
/// singularity before the adaptive pass.
QuadratureResult integrate_singular_left(const std::function<double(double)>& f, double a,
                                         double b, double p, const QuadratureOptions& opts = {});

/// Mirror of integrate_singular_left for a singularity at the right endpoint.
QuadratureResult integrate_singular_right(const std::function<double(double)>& f, double a,
                                          double b, double p, const QuadratureOptions& opts = {});

/// One non-adaptive Gauss-Kronrod panel over [a, b]; a > b gives the signed
/// value. Accurate to roundoff on short smooth spans.
double gk15_panel(const std::function<double(double)>& f, double a, double b);

} // namespace ktrans
