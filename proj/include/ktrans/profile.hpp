#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "ktrans/family.hpp"
#include "ktrans/quadrature.hpp"

namespace ktrans {

enum class BranchSign { Plus, Minus };
enum class Endpoint { Left, Right };

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool hi_unbounded() const { return std::isinf(hi); }
    double width() const { return hi - lo; }
    bool contains(double r) const { return r > lo && r < hi; }
};

// Limit behavior of the generating curve at a domain endpoint.
enum class EndpointBehavior {
    ConicalPoint,           // axis point with h -> infinity (f'^2 -> 1)
    DegenerateToTimelike,   // f'^2 -> 1 from below; f' -> 0+ on the lightlike spacelike chart
    DegenerateToSpacelike,  // f'^2 -> 1 from above; f' -> 0- on the lightlike timelike chart
    SecondDerivativeBlowup, // f' -> 0 with f'' unbounded
    UnboundedEnd,           // r_hi = infinity
    AxisNonOrthogonal,      // r -> 0 with finite nonzero f' limit
    OrthogonalAxisMeeting,  // r -> 0 with f' -> 0 and bounded f''
    FprimeBlowup,           // |f'| -> infinity at a finite endpoint
};

std::string_view endpoint_behavior_name(EndpointBehavior b);

struct EndpointInfo {
    EndpointBehavior behavior = EndpointBehavior::UnboundedEnd;
    // For FprimeBlowup ends: |f'| ~ C (r - r_end)^p with p < 0; the profile
    // integral exists over the endpoint iff p > -1.
    std::optional<double> singular_exponent;
};

/// Maximal open interval on which the (family, alpha, m) profile derivative is
/// real and the family's causal condition holds. Throws AdmissibilityError
/// naming the violated parameter condition.
Interval maximal_domain(Family f, double alpha, double m);

/// Auxiliary substitution value h(r) (h = 1/sqrt(1 - f'^2), 1/sqrt(f'^2 - 1)
/// or 1/sqrt(1 + f'^2) depending on the family). Not defined for lightlike
/// axes. Errors when the power base is nonpositive or h leaves the family's
/// admissible range.
double h_value(Family f, double alpha, double m, double r);

/// Exact antiderivative of the plus-branch f' for the cataloged elementary
/// cases; absent (not an error) otherwise. The additive constant is the
/// formula's own; compare differences.
std::optional<std::function<double(double)>> golden_closed_form(Family f, double alpha, double m);

// A fully resolved solution instance: family, exponent, integration constant,
// branch, maximal domain. Immutable after construction; evaluators are pure.
class Profile {
  public:
    Profile(Family family, double alpha, double m, BranchSign sign = BranchSign::Plus);

    Family family() const { return family_; }
    double alpha() const { return alpha_; }
    double m() const { return m_; }
    BranchSign sign() const { return sign_; }
    const Interval& domain() const { return domain_; }
    /// Anchor radius with f(r_ref) = 0: domain midpoint, or lo + 1 when
    /// unbounded.
    double r_ref() const { return r_ref_; }
    /// Which parameter case of the classification applies.
    const std::string& case_label() const { return case_label_; }
    /// False only for the cataloged alpha = 1, m = 1 antiderivative on the
    /// timelike-axis spacelike chart, which has K < 0 and serves purely as a
    /// quadrature oracle.
    bool is_translator_case() const { return translator_case_; }

    bool has_h() const;
    double h(double r) const;
    double h_prime(double r) const;

    /// Branch-signed f'(r); r must lie strictly inside the domain.
    double fprime(double r) const;
    /// Closed-form derivative of fprime.
    double fsecond(double r) const;

    /// Stable margin of the family's causal condition at r: positive exactly
    /// when the condition holds (1 - f'^2, f'^2 - 1 or |f'| in exact
    /// arithmetic), evaluated without the cancellation that makes the rounded
    /// f' test collapse near asymptotically degenerate ends. Always +inf for
    /// the unconditionally timelike xy-curve chart.
    double causal_margin(double r) const;

    const EndpointInfo& endpoint_info(Endpoint which) const;
    EndpointBehavior endpoint_behavior(Endpoint which) const;

    /// Integral of fprime from r_from to r_to. Limits may sit on the closed
    /// domain boundary when the integrand extends continuously or the blowup
    /// is integrable; a non-integrable request is an error.
    double integrate_f(double r_from, double r_to, const QuadratureOptions& opts = {}) const;
    /// f(r) anchored at r_ref.
    double f(double r, const QuadratureOptions& opts = {}) const;

  private:
    double branch() const { return sign_ == BranchSign::Plus ? 1.0 : -1.0; }
    // Values of the family's power expression and its radial derivative.
    double power_term(double r) const;
    double power_term_derivative(double r) const;
    void check_interior(double r) const;

    Family family_;
    double alpha_;
    double m_;
    BranchSign sign_;
    Interval domain_;
    double r_ref_ = 0.0;
    std::string case_label_;
    bool translator_case_ = true;
    EndpointInfo left_;
    EndpointInfo right_;
    // Cached exponents/coefficients of the general-alpha formulas.
    double expo_ = 0.0;  // 2a/(1-2a)
    double coef_ = 0.0;  // chart-dependent quadratic coefficient
    bool half_alpha_ = false;
};

} // namespace ktrans
