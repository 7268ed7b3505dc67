#pragma once

#include <stdexcept>
#include <string>

namespace ktrans {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters outside the classification's admissible set (bad family/alpha/m
// combination, bad sign, malformed request).
struct AdmissibilityError : Error {
    using Error::Error;
};

// Evaluation point outside a profile's maximal domain, or a stencil/window
// leaving it.
struct DomainError : Error {
    using Error::Error;
};

// Numerical failure: quadrature budget exhausted, non-integrable endpoint,
// nonpositive curvature where a positive power is required.
struct NumericalError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace ktrans
