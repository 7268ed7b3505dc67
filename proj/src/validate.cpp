#include "ktrans/validate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ktrans/errors.hpp"
#include "ktrans/quadrature.hpp"

namespace ktrans {

std::pair<double, double> default_theta_window(Family f) {
    if (family_chart(f) == Chart::PolarZ) return {0.0, 2.0 * std::numbers::pi};
    return {-2.0, 2.0};
}

double residual_from_values(Family f, double alpha, double r, double /*theta*/, double fprime,
                            double fsecond) {
    const double K = gauss_curvature_analytic(f, r, fprime, fsecond);
    if (!(K > 0.0)) {
        std::ostringstream msg;
        msg << "K = " << K << " <= 0 at r = " << r
            << ": not a translator sample (K must be positive)";
        throw NumericalError(msg.str());
    }
    const double k_pow = std::exp(alpha * std::log(K));
    return std::abs(k_pow - normal_speed(f, fprime));
}

namespace {

double residual_fd(const Profile& p, double r, double theta, const ResidualOptions& opts) {
    const double h = opts.fd_step > 0.0 ? opts.fd_step : default_fd_step(r);
    const Interval& dom = p.domain();
    if (!(r - 2.0 * h > dom.lo) || !(r + 2.0 * h < dom.hi))
        throw DomainError("finite-difference stencil [r-2h, r+2h] exits the profile domain");
    std::function<double(double)> f_eval;
    if (opts.profile_override) {
        f_eval = opts.profile_override;
    } else {
        // Local anchored evaluator: f(s) - f(r) via a single panel, exact to
        // roundoff on the stencil span and free of global quadrature noise.
        f_eval = [&p, r](double s) { return gk15_panel([&p](double t) { return p.fprime(t); }, r, s); };
    }
    const double K = gauss_curvature_fd(p.family(), f_eval, r, theta, h);
    if (!(K > 0.0)) {
        std::ostringstream msg;
        msg << "finite-difference K = " << K << " <= 0 at r = " << r
            << ": not a translator sample (K must be positive)";
        throw NumericalError(msg.str());
    }
    const double k_pow = std::exp(p.alpha() * std::log(K));
    return std::abs(k_pow - normal_speed(p.family(), p.fprime(r)));
}

} // namespace

double residual_at(const Profile& p, double r, double theta, CurvatureSource source,
                   const ResidualOptions& opts) {
    if (!p.domain().contains(r)) throw DomainError("residual point must be interior to the domain");
    if (source == CurvatureSource::Analytic)
        return residual_from_values(p.family(), p.alpha(), r, theta, p.fprime(r), p.fsecond(r));
    return residual_fd(p, r, theta, opts);
}

ResidualReport validate_grid(const Profile& p, const GridSpec& grid, const ResidualOptions& opts) {
    if (grid.n_r < 2 || grid.n_theta < 1)
        throw AdmissibilityError("residual grid requires n_r >= 2 and n_theta >= 1");
    if (!(grid.inset > 0.0) || !(grid.inset < 0.5))
        throw DomainError("grid inset must lie in (0, 0.5): endpoint evaluation is forbidden");

    const Interval& dom = p.domain();
    const double hi_eff = dom.hi_unbounded() ? dom.lo + grid.infinite_truncation : dom.hi;
    const double width = hi_eff - dom.lo;
    const double r_lo = dom.lo + grid.inset * width;
    const double r_hi = hi_eff - grid.inset * width;
    const auto [t_lo, t_hi] = grid.theta_window.value_or(default_theta_window(p.family()));

    ResidualReport rep;
    rep.family = p.family();
    rep.alpha = p.alpha();
    rep.m = p.m();
    rep.sign = p.sign();
    rep.n_r = grid.n_r;
    rep.n_theta = grid.n_theta;
    rep.inset = grid.inset;
    rep.r_lo = r_lo;
    rep.r_hi = r_hi;
    rep.theta_lo = t_lo;
    rep.theta_hi = t_hi;
    rep.fd_step = opts.fd_step;

    double sum_a = 0.0, sum_f = 0.0;
    for (int i = 0; i < grid.n_r; ++i) {
        const double r = r_lo + (r_hi - r_lo) * i / (grid.n_r - 1);
        for (int j = 0; j < grid.n_theta; ++j) {
            const double theta = t_lo + (t_hi - t_lo) * j / grid.n_theta;
            try {
                const double res_a = residual_at(p, r, theta, CurvatureSource::Analytic, opts);
                const double res_f = residual_at(p, r, theta, CurvatureSource::FiniteDifference, opts);
                if (res_a > rep.sup_analytic || (i == 0 && j == 0)) {
                    rep.sup_analytic = std::max(rep.sup_analytic, res_a);
                    rep.worst_r = r;
                    rep.worst_theta = theta;
                }
                rep.sup_fd = std::max(rep.sup_fd, res_f);
                sum_a += res_a;
                sum_f += res_f;
            } catch (const DomainError& err) {
                std::ostringstream msg;
                msg << err.what() << " (grid point r = " << r << ", theta = " << theta << ")";
                throw DomainError(msg.str());
            } catch (const NumericalError& err) {
                std::ostringstream msg;
                msg << err.what() << " (grid point r = " << r << ", theta = " << theta << ")";
                throw NumericalError(msg.str());
            }
        }
    }
    const double count = static_cast<double>(grid.n_r) * grid.n_theta;
    rep.mean_analytic = sum_a / count;
    rep.mean_fd = sum_f / count;
    return rep;
}

} // namespace ktrans
