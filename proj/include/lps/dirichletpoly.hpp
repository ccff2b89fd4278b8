#pragma once

#include <complex>
#include <vector>

#include "lps/series.hpp"

namespace lps {

// Truncated Dirichlet series F_N(s) = sum_{n<=N} f(n) n^{-s}, entire in s.
// log n is cached at construction; evaluation is compensated summation of
// f(n) exp(-s log n).  The relative error of eval is bounded by
// c N eps (sum |f(n)| n^{-sigma}) / |result| with eps the machine epsilon.
class DirichletPolynomial {
public:
    explicit DirichletPolynomial(CoefficientSeries coeffs);

    size_t length() const { return coeffs_.length(); }
    const CoefficientSeries& coeffs() const { return coeffs_; }

    cplx eval(cplx s) const;
    cplx eval_deriv(cplx s) const;

    // Scaled form for Re s < 0: F(s) = G(s) exp(-s log M) with
    // G(s) = sum f(n) exp(-s (log n - log M)).  All exponents in G are
    // <= 0, so G never overflows on the left half-plane where F itself
    // can exceed the double range.
    cplx eval_scaled(cplx s) const;
    cplx eval_scaled_deriv(cplx s) const;

    // M: largest n <= N with f(n) != 0.  Throws NoZerosError-adjacent
    // std::domain_error when the series is all zero (cannot happen for
    // a valid series with f(1) != 0).
    size_t largest_nonzero() const { return M_; }
    // E(N) = #{n <= N : f(n) != 0}.
    size_t nonzero_count() const { return EN_; }

    double abs_coeff_sum() const { return abs_sum_; }
    double log_largest_nonzero() const { return logM_; }

    // sum |f(n)| n^{-sigma}: the natural magnitude envelope at Re s = sigma,
    // used for relative residuals and zero guards.
    double envelope(double sigma) const;
    // log of the envelope, computed overflow-free via the scaled form.
    double log_envelope(double sigma) const;

    // Smallest B (found by bisection to 1e-9, plus the caller's margin)
    // such that both
    //   sum_{2<=n<=M} |f(n)| n^{-B} < 1                        (right bound)
    //   sum_{1<=n<=M-1} |f(n)| n^{B} < |f(M)| M^{B}            (left bound)
    // hold; all zeros of F_N satisfy |Re s| < returned value.  Requires
    // f(1) = 1.  Throws NoZerosError when f(n) = 0 for all n >= 2.
    double strip_bound(double margin) const;

private:
    CoefficientSeries coeffs_;
    std::vector<double> logn_;
    double abs_sum_ = 0.0;
    size_t M_ = 0;
    size_t EN_ = 0;
    double logM_ = 0.0;
};

}  // namespace lps
