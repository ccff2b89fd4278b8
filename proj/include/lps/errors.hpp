#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lps {

// A contour sample fell below the zero guard: the query rectangle has a
// zero on (or numerically on) its boundary.  Callers perturb the rectangle,
// never the function.
struct BoundaryZeroError : std::runtime_error {
    std::complex<double> location;
    explicit BoundaryZeroError(std::complex<double> where)
        : std::runtime_error("zero on or too near the contour at s = (" +
                             std::to_string(where.real()) + ", " +
                             std::to_string(where.imag()) + ")"),
          location(where) {}
};

// F_N == f(1): no zeros exist, strip queries are degenerate.
struct NoZerosError : std::domain_error {
    NoZerosError() : std::domain_error("no zeros exist: f(n) = 0 for all n >= 2") {}
};

// Adaptive quadrature failed to settle (zero of the integrand on the line).
struct QuadratureStallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A library invariant was violated; indicates a programming error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace lps
