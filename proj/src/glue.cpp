#include "ktrans/glue.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "ktrans/errors.hpp"

namespace ktrans {

GluedCurve::GluedCurve(Profile left, Profile right, double r_junction)
    : left_(std::move(left)), right_(std::move(right)), r_junction_(r_junction) {}

double GluedCurve::f(double r, const QuadratureOptions& opts) const {
    if (r <= r_junction_) return left_.integrate_f(r_junction_, r, opts);
    return right_.integrate_f(r_junction_, r, opts);
}

double GluedCurve::fprime(double r) const {
    if (r == r_junction_)
        throw DomainError("f' at the junction is a one-sided limit; use diagnostics()");
    return r < r_junction_ ? left_.fprime(r) : right_.fprime(r);
}

std::vector<GlueDiagnostic> GluedCurve::diagnostics(std::span<const double> deltas,
                                                    const QuadratureOptions& opts) const {
    std::vector<GlueDiagnostic> out;
    out.reserve(deltas.size());
    for (double d : deltas) {
        if (!(d > 0.0)) throw DomainError("diagnostic offsets must be positive");
        const double rl = r_junction_ - d;
        const double rr = r_junction_ + d;
        if (!left_.domain().contains(rl) || !right_.domain().contains(rr))
            throw DomainError("diagnostic offset leaves the glued domain");
        GlueDiagnostic g;
        g.delta = d;
        const double fl = left_.integrate_f(r_junction_, rl, opts);
        const double fr = right_.integrate_f(r_junction_, rr, opts);
        const double pl = left_.fprime(rl);
        const double pr = right_.fprime(rr);
        g.f_gap = std::abs(fl - fr);
        g.fprime_gap = std::abs(pl - pr);
        g.fprime_sq_gap = std::abs(pl * pl - pr * pr);
        out.push_back(g);
    }
    return out;
}

std::vector<GlueDiagnostic> GluedCurve::diagnostics(const QuadratureOptions& opts) const {
    constexpr std::array<double, 3> kDefault = {1e-2, 1e-3, 1e-4};
    return diagnostics(std::span<const double>(kDefault), opts);
}

GluedCurve glue(const Profile& left, const Profile& right, double tol) {
    if (left.alpha() != right.alpha())
        throw AdmissibilityError("glue requires both profiles to share alpha exactly");
    const double a = left.alpha();
    if (!(a > 0.0 && a < 0.5))
        throw AdmissibilityError(
            "gluing across a degenerate boundary exists only for alpha in (0, 1/2)");

    const bool pair_ok = (left.family() == Family::TA_T && right.family() == Family::TA_S) ||
                         (left.family() == Family::SA_S && right.family() == Family::SA_T1) ||
                         (left.family() == Family::LA_T && right.family() == Family::LA_S);
    if (!pair_ok) {
        std::ostringstream msg;
        msg << "inadmissible glue pair (" << family_name(left.family()) << ", "
            << family_name(right.family())
            << "); admissible pairs, inner piece first: TA-T|TA-S, SA-S|SA-T1, LA-T|LA-S";
        throw AdmissibilityError(msg.str());
    }
    if (left.sign() != right.sign())
        throw AdmissibilityError("glue requires both profiles on the same branch sign");
    if (!(left.m() > 0.0))
        throw AdmissibilityError("the inner (left) profile needs m > 0 for a degenerate boundary");
    if (!(std::abs(right.m() + left.m()) <= tol)) {
        std::ostringstream msg;
        msg << "integration constants must satisfy m_right = -m_left within tol: got m_left = "
            << left.m() << ", m_right = " << right.m();
        throw AdmissibilityError(msg.str());
    }

    const double rj_left = left.domain().hi;
    const double rj_right = right.domain().lo;
    if (!std::isfinite(rj_left))
        throw AdmissibilityError("the inner profile must end at a finite degenerate radius");
    if (!(std::abs(rj_left - rj_right) <= tol)) {
        std::ostringstream msg;
        msg << "junction mismatch: inner domain ends at " << rj_left
            << " but outer domain starts at " << rj_right;
        throw AdmissibilityError(msg.str());
    }
    return GluedCurve(left, right, rj_left);
}

} // namespace ktrans
