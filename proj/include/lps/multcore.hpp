#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lps/series.hpp"

namespace lps {

// d_k(n) = #{(m_1,...,m_k) : m_1 m_2 ... m_k = n}, the k-th divisor
// function; multiplicative with d_k(p^a) = C(a+k-1, k-1).
// Throws std::overflow_error instead of wrapping.
uint64_t dk(uint64_t n, unsigned k);

// Dirichlet convolution; output length min(len a, len b),
// entry n = sum_{d | n} a(d) b(n/d).
CoefficientSeries dirichlet_convolve(const CoefficientSeries& a,
                                     const CoefficientSeries& b);

// Lambda_f from f(n) log n = sum_{d|n} Lambda_f(d) f(n/d), solved
// recursively for n = 2..N.  Requires f(1) = 1.
VonMangoldtSeries lambda_f_from_coeffs(const CoefficientSeries& f);

struct KBoundViolation {
    uint64_t n;
    double lambda_f_abs;    // |Lambda_f(n)|
    double k_lambda;        // k * Lambda(n)
};

// Indices n with |Lambda_f(n)| > k Lambda(n) + tol.  Empty report is the
// membership evidence for the class C(k) up to the series limit.
std::vector<KBoundViolation> check_k_bounded(const VonMangoldtSeries& lam,
                                             double k, double tol);

// Rule giving f(p^m) for primes p and m >= 1; expanded by multiplicativity.
struct MultiplicativeSpec {
    std::function<cplx(uint64_t p, int m)> prime_power_rule;
    std::string label;
};

// f(1) = 1, f(prod p_i^{m_i}) = prod rule(p_i, m_i); sieve-based expansion.
CoefficientSeries coeffs_from_multiplicative(const MultiplicativeSpec& spec,
                                             size_t N);

MultiplicativeSpec zeta_spec();       // f(p^m) = 1
MultiplicativeSpec moebius_spec();    // f(p) = -1, f(p^m) = 0 for m >= 2

}  // namespace lps
