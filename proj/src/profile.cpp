#include "ktrans/profile.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ktrans/errors.hpp"

namespace ktrans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Profile-level kernel shared by families with identical separable equations.
enum class Kind {
    HShrink,   // f'^2 = 1 - P, h >= 1     (TA-S, SA-T1)
    HGrow,     // f'^2 = 1 + P, h > 0      (SA-S, TA-T)
    HFlip,     // f'^2 = P - 1, 0 < h <= 1 (SA-T2)
    LightUp,   // f' = P > 0               (LA-S)
    LightDown, // f' = -P < 0              (LA-T)
};

Kind family_kind(Family f) {
    switch (f) {
    case Family::TA_S:
    case Family::SA_T1: return Kind::HShrink;
    case Family::SA_S:
    case Family::TA_T: return Kind::HGrow;
    case Family::SA_T2: return Kind::HFlip;
    case Family::LA_S: return Kind::LightUp;
    case Family::LA_T: return Kind::LightDown;
    }
    return Kind::HShrink;
}

void validate_alpha(double alpha) {
    if (!std::isfinite(alpha)) throw AdmissibilityError("alpha must be finite");
    if (std::abs(alpha) < 1e-12) throw AdmissibilityError("alpha must be nonzero");
    if (alpha != 0.5 && std::abs(alpha - 0.5) < 1e-12)
        throw AdmissibilityError(
            "alpha within 1e-12 of 1/2 is ill-conditioned; pass exactly 0.5 for the "
            "exponential case");
}

// Quadratic coefficient of the power base, base(r) = m + base_coef * r^2.
double base_coef(Kind k, double alpha) {
    switch (k) {
    case Kind::HShrink:
    case Kind::HFlip: return (1.0 - 2.0 * alpha) / (2.0 * alpha);
    case Kind::HGrow: return (2.0 * alpha - 1.0) / (2.0 * alpha);
    case Kind::LightUp: return 2.0 * (1.0 - 2.0 * alpha) / alpha;
    case Kind::LightDown: return 2.0 * (2.0 * alpha - 1.0) / alpha;
    }
    return 0.0;
}

double general_exponent(double alpha) { return 2.0 * alpha / (1.0 - 2.0 * alpha); }

[[noreturn]] void reject(Family fam, const char* case_text, const char* requirement, double m) {
    std::ostringstream msg;
    msg << "family " << family_name(fam) << " with " << case_text << ": " << requirement
        << " (got m = " << m << ")";
    throw AdmissibilityError(msg.str());
}

struct Resolution {
    Interval domain;
    std::string label;
    EndpointInfo left;
    EndpointInfo right;
    bool translator = true;
};

EndpointInfo plain(EndpointBehavior b) { return {b, std::nullopt}; }
EndpointInfo blowup(double p) { return {EndpointBehavior::FprimeBlowup, p}; }

Resolution resolve_case(Family fam, double alpha, double m) {
    validate_alpha(alpha);
    if (!std::isfinite(m)) throw AdmissibilityError("m must be finite");

    const Kind kind = family_kind(fam);
    const bool half = alpha == 0.5;
    const bool inner = alpha > 0.0 && alpha < 0.5; // alpha in (0, 1/2)
    const double e = half ? 0.0 : general_exponent(alpha);
    Resolution res;

    using EB = EndpointBehavior;
    switch (kind) {
    case Kind::HShrink:
        if (half) {
            if (!(m > 1.0)) reject(fam, "alpha = 1/2", "requires m > 1", m);
            res.domain = {0.0, std::sqrt(2.0 * std::log(m))};
            res.label = "alpha = 1/2, m > 1";
            res.left = plain(EB::AxisNonOrthogonal);
            res.right = plain(EB::SecondDerivativeBlowup);
        } else if (inner) {
            if (m < 0.0) {
                res.domain = {std::sqrt(2.0 * alpha * m / (2.0 * alpha - 1.0)),
                              std::sqrt(2.0 * alpha * (1.0 - m) / (1.0 - 2.0 * alpha))};
                res.label = "alpha in (0,1/2), m < 0";
                res.left = plain(EB::DegenerateToTimelike);
                res.right = plain(EB::SecondDerivativeBlowup);
            } else if (m < 1.0) {
                res.domain = {0.0, std::sqrt(2.0 * alpha * (1.0 - m) / (1.0 - 2.0 * alpha))};
                res.label = "alpha in (0,1/2), 0 <= m < 1";
                res.left = plain(m == 0.0 ? EB::ConicalPoint : EB::AxisNonOrthogonal);
                res.right = plain(EB::SecondDerivativeBlowup);
            } else {
                reject(fam, "alpha in (0,1/2)", "m must satisfy m < 0 or 0 <= m < 1", m);
            }
        } else {
            if (fam == Family::TA_S && alpha == 1.0 && m == 1.0) {
                // Cataloged explicit antiderivative; the profile is real on
                // (2, inf) but has K < 0 there, so it is kept out of the
                // translator sweeps and serves as a quadrature oracle only.
                res.domain = {2.0, kInf};
                res.label = "alpha = 1, m = 1 (explicit antiderivative case, K < 0)";
                res.left = plain(EB::SecondDerivativeBlowup);
                res.right = plain(EB::UnboundedEnd);
                res.translator = false;
            } else if (m > 1.0) {
                res.domain = {0.0, std::sqrt(2.0 * alpha * (m - 1.0) / (2.0 * alpha - 1.0))};
                res.label = "alpha outside [0,1/2], m > 1";
                res.left = plain(EB::AxisNonOrthogonal);
                res.right = plain(EB::SecondDerivativeBlowup);
            } else {
                reject(fam, "alpha outside [0,1/2]", "requires m > 1", m);
            }
        }
        break;

    case Kind::HGrow:
        if (half) {
            if (!(m > 0.0)) reject(fam, "alpha = 1/2", "requires m > 0", m);
            res.domain = {0.0, kInf};
            res.label = "alpha = 1/2, m > 0";
            res.left = plain(EB::AxisNonOrthogonal);
            res.right = plain(EB::UnboundedEnd);
        } else if (inner) {
            if (!(m > 0.0)) reject(fam, "alpha in (0,1/2)", "requires m > 0", m);
            res.domain = {0.0, std::sqrt(2.0 * alpha * m / (1.0 - 2.0 * alpha))};
            res.label = "alpha in (0,1/2), m > 0";
            res.left = plain(EB::AxisNonOrthogonal);
            res.right = plain(EB::DegenerateToSpacelike);
        } else {
            if (m > 0.0) {
                res.domain = {0.0, kInf};
                res.label = "alpha outside [0,1/2], m >= 0";
                res.left = plain(EB::AxisNonOrthogonal);
                res.right = plain(EB::UnboundedEnd);
            } else if (m == 0.0) {
                res.domain = {0.0, kInf};
                res.label = "alpha outside [0,1/2], m >= 0";
                res.left = blowup(e); // base vanishes quadratically at r = 0
                res.right = plain(EB::UnboundedEnd);
            } else {
                res.domain = {std::sqrt(2.0 * alpha * m / (1.0 - 2.0 * alpha)), kInf};
                res.label = "alpha outside [0,1/2], m < 0";
                res.left = blowup(e / 2.0);
                res.right = plain(EB::UnboundedEnd);
            }
        }
        break;

    case Kind::HFlip:
        if (half) {
            if (!(m > 0.0)) reject(fam, "alpha = 1/2", "requires m > 0", m);
            if (m <= 1.0) {
                res.domain = {0.0, kInf};
                res.label = "alpha = 1/2, 0 < m <= 1";
                res.left = plain(m == 1.0 ? EB::OrthogonalAxisMeeting : EB::AxisNonOrthogonal);
            } else {
                res.domain = {std::sqrt(2.0 * std::log(m)), kInf};
                res.label = "alpha = 1/2, m > 1";
                res.left = plain(EB::SecondDerivativeBlowup);
            }
            res.right = plain(EB::UnboundedEnd);
        } else if (inner) {
            if (m >= 1.0) {
                res.domain = {0.0, kInf};
                res.label = "alpha in (0,1/2), m >= 1";
                res.left = plain(m == 1.0 ? EB::OrthogonalAxisMeeting : EB::AxisNonOrthogonal);
            } else {
                res.domain = {std::sqrt(2.0 * alpha * (1.0 - m) / (1.0 - 2.0 * alpha)), kInf};
                res.label = "alpha in (0,1/2), m < 1";
                res.left = plain(EB::SecondDerivativeBlowup);
            }
            res.right = plain(EB::UnboundedEnd);
        } else {
            if (!(m > 0.0)) reject(fam, "alpha outside [0,1/2]", "requires m > 0", m);
            if (m <= 1.0) {
                res.domain = {0.0, std::sqrt(2.0 * alpha * m / (2.0 * alpha - 1.0))};
                res.label = "alpha outside [0,1/2], 0 < m <= 1";
                res.left = plain(m == 1.0 ? EB::OrthogonalAxisMeeting : EB::AxisNonOrthogonal);
            } else {
                res.domain = {std::sqrt(2.0 * alpha * (m - 1.0) / (2.0 * alpha - 1.0)),
                              std::sqrt(2.0 * alpha * m / (2.0 * alpha - 1.0))};
                res.label = "alpha outside [0,1/2], m > 1";
                res.left = plain(EB::SecondDerivativeBlowup);
            }
            res.right = blowup(e / 2.0);
        }
        break;

    case Kind::LightUp:
        if (half) {
            if (!(m > 0.0)) reject(fam, "alpha = 1/2", "requires m > 0", m);
            res.domain = {0.0, kInf};
            res.label = "alpha = 1/2, m > 0";
            res.left = plain(EB::AxisNonOrthogonal);
            res.right = plain(EB::UnboundedEnd);
        } else if (inner) {
            if (m > 0.0) {
                res.domain = {0.0, kInf};
                res.label = "alpha in (0,1/2), m >= 0";
                res.left = plain(EB::AxisNonOrthogonal);
            } else if (m == 0.0) {
                res.domain = {0.0, kInf};
                res.label = "alpha in (0,1/2), m >= 0";
                res.left = plain(EB::DegenerateToTimelike); // f' -> 0+
            } else {
                res.domain = {std::sqrt(alpha * m / (2.0 * (2.0 * alpha - 1.0))), kInf};
                res.label = "alpha in (0,1/2), m < 0";
                res.left = plain(EB::DegenerateToTimelike);
            }
            res.right = plain(EB::UnboundedEnd);
        } else {
            if (!(m > 0.0)) reject(fam, "alpha outside [0,1/2]", "requires m > 0", m);
            res.domain = {0.0, std::sqrt(alpha * m / (2.0 * (2.0 * alpha - 1.0)))};
            res.label = "alpha outside [0,1/2], m > 0";
            res.left = plain(EB::AxisNonOrthogonal);
            res.right = blowup(e);
        }
        break;

    case Kind::LightDown:
        if (half) {
            if (!(m > 0.0)) reject(fam, "alpha = 1/2", "requires m > 0", m);
            res.domain = {0.0, kInf};
            res.label = "alpha = 1/2, m > 0";
            res.left = plain(EB::AxisNonOrthogonal);
            res.right = plain(EB::UnboundedEnd);
        } else if (inner) {
            if (!(m > 0.0)) reject(fam, "alpha in (0,1/2)", "requires m > 0", m);
            res.domain = {0.0, std::sqrt(alpha * m / (2.0 * (1.0 - 2.0 * alpha)))};
            res.label = "alpha in (0,1/2), m > 0";
            res.left = plain(EB::AxisNonOrthogonal);
            res.right = plain(EB::DegenerateToSpacelike); // f' -> 0-
        } else {
            if (m > 0.0) {
                res.domain = {0.0, kInf};
                res.label = "alpha outside [0,1/2], m >= 0";
                res.left = plain(EB::AxisNonOrthogonal);
            } else if (m == 0.0) {
                res.domain = {0.0, kInf};
                res.label = "alpha outside [0,1/2], m >= 0";
                res.left = blowup(2.0 * e); // base vanishes quadratically at r = 0
            } else {
                res.domain = {std::sqrt(alpha * m / (2.0 * (1.0 - 2.0 * alpha))), kInf};
                res.label = "alpha outside [0,1/2], m < 0";
                res.left = blowup(e);
            }
            res.right = plain(EB::UnboundedEnd);
        }
        break;
    }
    return res;
}

} // namespace

std::string_view endpoint_behavior_name(EndpointBehavior b) {
    switch (b) {
    case EndpointBehavior::ConicalPoint: return "ConicalPoint";
    case EndpointBehavior::DegenerateToTimelike: return "DegenerateToTimelike";
    case EndpointBehavior::DegenerateToSpacelike: return "DegenerateToSpacelike";
    case EndpointBehavior::SecondDerivativeBlowup: return "SecondDerivativeBlowup";
    case EndpointBehavior::UnboundedEnd: return "UnboundedEnd";
    case EndpointBehavior::AxisNonOrthogonal: return "AxisNonOrthogonal";
    case EndpointBehavior::OrthogonalAxisMeeting: return "OrthogonalAxisMeeting";
    case EndpointBehavior::FprimeBlowup: return "FprimeBlowup";
    }
    return "?";
}

Interval maximal_domain(Family f, double alpha, double m) {
    return resolve_case(f, alpha, m).domain;
}

double h_value(Family f, double alpha, double m, double r) {
    const Kind kind = family_kind(f);
    if (kind == Kind::LightUp || kind == Kind::LightDown)
        throw AdmissibilityError("lightlike-axis families have no h substitution");
    validate_alpha(alpha);
    double power;
    if (alpha == 0.5) {
        if (!(m > 0.0)) throw AdmissibilityError("alpha = 1/2 requires m > 0 for h");
        power = kind == Kind::HGrow ? std::exp(-r * r) / (m * m) : std::exp(r * r) / (m * m);
    } else {
        const double base = m + base_coef(kind, alpha) * r * r;
        if (!(base > 0.0)) throw DomainError("h base is nonpositive at this radius");
        power = std::pow(base, general_exponent(alpha));
    }
    const double h = 1.0 / std::sqrt(power);
    if (kind == Kind::HShrink && h < 1.0)
        throw DomainError("h below 1: outside the admissible range of this family");
    if (kind == Kind::HFlip && h > 1.0)
        throw DomainError("h above 1: outside the admissible range of this family");
    return h;
}

Profile::Profile(Family family, double alpha, double m, BranchSign sign)
    : family_(family), alpha_(alpha), m_(m), sign_(sign) {
    const Kind kind = family_kind(family);
    if ((kind == Kind::LightUp || kind == Kind::LightDown) && sign == BranchSign::Minus)
        throw AdmissibilityError(
            "lightlike-axis profiles have no sign branch; the derivative sign is fixed by "
            "the family");
    Resolution res = resolve_case(family, alpha, m);
    domain_ = res.domain;
    case_label_ = std::move(res.label);
    left_ = res.left;
    right_ = res.right;
    translator_case_ = res.translator;
    half_alpha_ = alpha == 0.5;
    if (!half_alpha_) {
        expo_ = general_exponent(alpha);
        coef_ = base_coef(kind, alpha);
    }
    r_ref_ = domain_.hi_unbounded() ? domain_.lo + 1.0 : 0.5 * (domain_.lo + domain_.hi);
}

bool Profile::has_h() const {
    const Kind k = family_kind(family_);
    return k != Kind::LightUp && k != Kind::LightDown;
}

double Profile::h(double r) const { return h_value(family_, alpha_, m_, r); }

double Profile::h_prime(double r) const {
    if (!has_h()) throw AdmissibilityError("lightlike-axis families have no h substitution");
    // h = P^{-1/2} with P the power term, so h' = -P' / (2 P^{3/2}).
    const double p = power_term(r);
    const double dp = power_term_derivative(r);
    return -dp / (2.0 * p * std::sqrt(p));
}

double Profile::power_term(double r) const {
    const Kind kind = family_kind(family_);
    if (half_alpha_) {
        switch (kind) {
        case Kind::HShrink:
        case Kind::HFlip: return std::exp(r * r) / (m_ * m_);
        case Kind::HGrow: return std::exp(-r * r) / (m_ * m_);
        case Kind::LightUp: return m_ * std::exp(4.0 * r * r);
        case Kind::LightDown: return m_ * std::exp(-4.0 * r * r);
        }
    }
    return std::pow(m_ + coef_ * r * r, expo_);
}

double Profile::power_term_derivative(double r) const {
    const Kind kind = family_kind(family_);
    if (half_alpha_) {
        switch (kind) {
        case Kind::HShrink:
        case Kind::HFlip: return 2.0 * r * std::exp(r * r) / (m_ * m_);
        case Kind::HGrow: return -2.0 * r * std::exp(-r * r) / (m_ * m_);
        case Kind::LightUp: return 8.0 * r * m_ * std::exp(4.0 * r * r);
        case Kind::LightDown: return -8.0 * r * m_ * std::exp(-4.0 * r * r);
        }
    }
    const double base = m_ + coef_ * r * r;
    return expo_ * std::pow(base, expo_ - 1.0) * 2.0 * coef_ * r;
}

void Profile::check_interior(double r) const {
    if (!domain_.contains(r)) {
        std::ostringstream msg;
        msg << "r = " << r << " is outside the open maximal domain (" << domain_.lo << ", "
            << domain_.hi << ") of " << family_name(family_) << " alpha = " << alpha_
            << " m = " << m_;
        throw DomainError(msg.str());
    }
}

double Profile::fprime(double r) const {
    check_interior(r);
    const double p = power_term(r);
    switch (family_kind(family_)) {
    case Kind::HShrink: {
        const double s2 = 1.0 - p;
        if (!(s2 >= 0.0)) throw DomainError("f' undefined: causal condition fails at this radius");
        return branch() * std::sqrt(s2);
    }
    case Kind::HGrow: return branch() * std::sqrt(1.0 + p);
    case Kind::HFlip: {
        const double s2 = p - 1.0;
        if (!(s2 >= 0.0)) throw DomainError("f' undefined: power term below 1 at this radius");
        return branch() * std::sqrt(s2);
    }
    case Kind::LightUp: return p;
    case Kind::LightDown: return -p;
    }
    return 0.0;
}

double Profile::fsecond(double r) const {
    check_interior(r);
    const double dp = power_term_derivative(r);
    switch (family_kind(family_)) {
    case Kind::HShrink:
    case Kind::HGrow:
    case Kind::HFlip: {
        const double fp = fprime(r);
        if (fp == 0.0)
            throw NumericalError("f'' undefined: f' vanishes at this radius (boundary sample)");
        const double sgn = family_kind(family_) == Kind::HShrink ? -1.0 : 1.0;
        return sgn * dp / (2.0 * fp);
    }
    case Kind::LightUp: return dp;
    case Kind::LightDown: return -dp;
    }
    return 0.0;
}

double Profile::causal_margin(double r) const {
    check_interior(r);
    if (family_kind(family_) == Kind::HFlip) return std::numeric_limits<double>::infinity();
    // In every other family the causal condition is equivalent to a positive
    // power term: f'^2 = 1 - P or 1 + P, and f' = +-P on the lightlike charts.
    return power_term(r);
}

const EndpointInfo& Profile::endpoint_info(Endpoint which) const {
    return which == Endpoint::Left ? left_ : right_;
}

EndpointBehavior Profile::endpoint_behavior(Endpoint which) const {
    return endpoint_info(which).behavior;
}

double Profile::integrate_f(double r_from, double r_to, const QuadratureOptions& opts) const {
    if (!std::isfinite(r_from) || !std::isfinite(r_to))
        throw DomainError("integration limits must be finite");
    for (double r : {r_from, r_to}) {
        if (!(r >= domain_.lo) || !(r <= domain_.hi)) {
            std::ostringstream msg;
            msg << "integration limit " << r << " outside the closed domain [" << domain_.lo
                << ", " << domain_.hi << "]";
            throw DomainError(msg.str());
        }
    }
    if (r_from == r_to) return 0.0;
    if (r_from > r_to) return -integrate_f(r_to, r_from, opts);

    const bool left_singular =
        r_from == domain_.lo && left_.behavior == EndpointBehavior::FprimeBlowup;
    const bool right_singular =
        r_to == domain_.hi && right_.behavior == EndpointBehavior::FprimeBlowup;
    for (const auto* info : {left_singular ? &left_ : nullptr, right_singular ? &right_ : nullptr})
        if (info && *info->singular_exponent <= -1.0)
            throw NumericalError("f' is not integrable over this endpoint (exponent <= -1)");

    auto integrand = [this](double r) { return fprime(r); };
    if (left_singular && right_singular) {
        const double mid = 0.5 * (r_from + r_to);
        return integrate_singular_left(integrand, r_from, mid, *left_.singular_exponent, opts)
                   .value +
               integrate_singular_right(integrand, mid, r_to, *right_.singular_exponent, opts)
                   .value;
    }
    if (left_singular)
        return integrate_singular_left(integrand, r_from, r_to, *left_.singular_exponent, opts)
            .value;
    if (right_singular)
        return integrate_singular_right(integrand, r_from, r_to, *right_.singular_exponent, opts)
            .value;
    return integrate_adaptive(integrand, r_from, r_to, opts).value;
}

double Profile::f(double r, const QuadratureOptions& opts) const {
    return integrate_f(r_ref_, r, opts);
}

std::optional<std::function<double(double)>> golden_closed_form(Family fam, double alpha,
                                                                double m) {
    try {
        (void)maximal_domain(fam, alpha, m);
    } catch (const AdmissibilityError&) {
        return std::nullopt;
    }

    const Kind kind = family_kind(fam);
    if (alpha == 0.25) {
        switch (kind) {
        case Kind::HShrink: // f' = sqrt(1 - m - r^2)
            return [m](double r) {
                const double s = std::sqrt(1.0 - m - r * r);
                return 0.5 * (r * s + (1.0 - m) * std::atan(r / s));
            };
        case Kind::HGrow: // f' = sqrt(1 + m - r^2)
            return [m](double r) {
                const double s = std::sqrt(1.0 + m - r * r);
                return 0.5 * (r * s + (1.0 + m) * std::atan(r / s));
            };
        case Kind::HFlip: // f' = sqrt(r^2 + m - 1)
            if (m == 1.0)
                return [](double r) { return 0.5 * r * r; };
            return [m](double r) {
                const double s = std::sqrt(r * r + m - 1.0);
                return 0.5 * (r * s + (m - 1.0) * std::log(r + s));
            };
        case Kind::LightUp: // f' = 4r^2 + m
            return [m](double r) { return 4.0 * r * r * r / 3.0 + m * r; };
        case Kind::LightDown: // f' = -(m - 4r^2)
            return [m](double r) { return 4.0 * r * r * r / 3.0 - m * r; };
        }
    }
    if (fam == Family::TA_S && alpha == 1.0 && m == 1.0) {
        return [](double r) {
            const double s = std::sqrt(r * r - 4.0);
            return s - std::sqrt(2.0) * std::atan(s / std::sqrt(2.0));
        };
    }
    if (fam == Family::TA_S && alpha == 1.0 / 6.0 && m == 0.0) {
        return [](double r) {
            return -(std::sqrt(2.0) / 3.0) * std::pow(1.0 - std::sqrt(2.0) * r, 1.5);
        };
    }
    if (fam == Family::TA_S && alpha == 0.1 && m == 0.0) {
        return [](double r) {
            const double u = std::sqrt(2.0 * r);
            return -(2.0 / 15.0) * std::sqrt(1.0 - u) * (2.0 + u - 6.0 * r);
        };
    }
    if (fam == Family::LA_S && alpha == 1.0 && m > 0.0) {
        return [m](double r) {
            return std::sqrt(2.0) * std::atanh(std::sqrt(2.0) * r / std::sqrt(m)) /
                       (4.0 * m * std::sqrt(m)) +
                   r / (2.0 * m * m - 4.0 * m * r * r);
        };
    }
    if (fam == Family::LA_S && alpha > 0.0 && alpha < 0.5 && m == 0.0) {
        const double e = general_exponent(alpha);
        const double q = 2.0 * (1.0 - 2.0 * alpha) / alpha;
        const double power = (1.0 + 2.0 * alpha) / (1.0 - 2.0 * alpha);
        const double lead = (1.0 - 2.0 * alpha) / (1.0 + 2.0 * alpha) * std::pow(q, e);
        return [lead, power](double r) { return lead * std::pow(r, power); };
    }
    return std::nullopt;
}

} // namespace ktrans
