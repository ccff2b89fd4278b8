#pragma once

#include <utility>
#include <vector>

#include "lps/dirichletpoly.hpp"
#include "lps/errors.hpp"

namespace lps {

struct RectangleRegion {
    double sigma_lo, sigma_hi;
    double t_lo, t_hi;

    RectangleRegion(double slo, double shi, double tlo, double thi);
    double width() const { return sigma_hi - sigma_lo; }
    double height() const { return t_hi - t_lo; }
    double diameter() const;
};

struct WindingResult {
    long count = 0;
    double min_abs_on_contour = 0.0;   // smallest |F| seen on the contour
    long samples = 0;
};

struct ZeroRecord {
    double beta = 0.0;
    double gamma = 0.0;
    // |F_N(rho)| relative to the envelope sum |f(n)| n^{-beta}.  An absolute
    // residual is not representable for zeros deep in the strip, where |F'|
    // exceeds the double range; the relative form is the honest certificate.
    double residual = 0.0;
    int iterations = 0;
    int multiplicity = 1;   // winding count of an unresolved cluster
};

// Default contour guard, 1e-12 * sum |f(n)|, rescaled internally by the
// magnitude envelope away from sigma = 0.
double default_guard(const DirichletPolynomial& P);

// Total change of arg F_N / 2pi around R, sampled adaptively until every
// consecutive phase increment is below pi/2.  Throws BoundaryZeroError when
// |F_N| falls under the guard at a contour sample (after max refinement).
WindingResult winding_number(const DirichletPolynomial& P,
                             const RectangleRegion& R, double guard);

// Recursive quadrisection of R down to isolated zeros, then Newton
// refinement to relative residual < tol.  Zeros closer than tol are
// reported as one record carrying the cluster's winding multiplicity.
// Sorted by (gamma, beta); total multiplicity equals the winding count
// of R.  BoundaryZeroError is retried with edges shifted outward by
// tol, 2 tol, 4 tol before giving up.
std::vector<ZeroRecord> locate_zeros(const DirichletPolynomial& P,
                                     const RectangleRegion& R, double tol);

// N(T): winding count on [strip.first, strip.second] x [0, T], with the
// lim_{eps->0+} convention (edges through a zero are shifted outward, so
// boundary ordinates are included).
long count_upto(const DirichletPolynomial& P, double T,
                std::pair<double, double> strip);

// N(sigma, T) from located zeros: #{records with beta > sigma}.
long zero_density(const std::vector<ZeroRecord>& zeros, double sigma);

struct CountingResidual {
    long NT = 0;
    double formula = 0.0;      // (T / 2pi) log M
    double residual = 0.0;     // NT - formula
    size_t M = 0;
    size_t EN = 0;
    double strip = 0.0;        // certified half-width used for the count
};

// N(T) - (T/2pi) log M for a real-coefficient normalized series; the
// counting formula asserts this is O(E(N)).
CountingResidual counting_residual(const DirichletPolynomial& P, double T);

}  // namespace lps
