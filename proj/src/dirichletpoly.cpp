#include "lps/dirichletpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lps/errors.hpp"

namespace lps {

DirichletPolynomial::DirichletPolynomial(CoefficientSeries coeffs)
    : coeffs_(std::move(coeffs)) {
    size_t N = coeffs_.length();
    logn_.resize(N);
    for (size_t n = 1; n <= N; ++n) logn_[n - 1] = std::log(static_cast<double>(n));
    auto v = coeffs_.values();
    for (size_t n = 1; n <= N; ++n) {
        double a = std::abs(v[n - 1]);
        abs_sum_ += a;
        if (a != 0.0) {
            M_ = n;
            ++EN_;
        }
    }
    if (M_ == 0)
        throw std::invalid_argument("DirichletPolynomial: all coefficients are zero");
    logM_ = logn_[M_ - 1];
}

cplx DirichletPolynomial::eval(cplx s) const {
    auto v = coeffs_.values();
    double sigma = s.real(), t = s.imag();
    KahanSumC sum;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == cplx(0.0, 0.0)) continue;
        double L = logn_[i];
        double mag = std::exp(-sigma * L);
        if (mag == 0.0 && sigma > 0.0) break;   // later terms only smaller
        double ph = -t * L;
        sum.add(v[i] * cplx(mag * std::cos(ph), mag * std::sin(ph)));
    }
    return sum.value();
}

cplx DirichletPolynomial::eval_deriv(cplx s) const {
    auto v = coeffs_.values();
    double sigma = s.real(), t = s.imag();
    KahanSumC sum;
    for (size_t i = 1; i < v.size(); ++i) {   // the n = 1 term is constant
        if (v[i] == cplx(0.0, 0.0)) continue;
        double L = logn_[i];
        double mag = std::exp(-sigma * L);
        if (mag == 0.0 && sigma > 0.0) break;
        double ph = -t * L;
        sum.add(v[i] * (-L) * cplx(mag * std::cos(ph), mag * std::sin(ph)));
    }
    return sum.value();
}

cplx DirichletPolynomial::eval_scaled(cplx s) const {
    auto v = coeffs_.values();
    double sigma = s.real(), t = s.imag();
    KahanSumC sum;
    for (size_t i = 0; i < M_; ++i) {
        if (v[i] == cplx(0.0, 0.0)) continue;
        double L = logn_[i] - logM_;   // <= 0
        double mag = std::exp(-sigma * L);
        double ph = -t * L;
        sum.add(v[i] * cplx(mag * std::cos(ph), mag * std::sin(ph)));
    }
    return sum.value();
}

cplx DirichletPolynomial::eval_scaled_deriv(cplx s) const {
    auto v = coeffs_.values();
    double sigma = s.real(), t = s.imag();
    KahanSumC sum;
    for (size_t i = 0; i < M_; ++i) {
        if (v[i] == cplx(0.0, 0.0)) continue;
        double L = logn_[i] - logM_;
        if (L == 0.0) continue;
        double mag = std::exp(-sigma * L);
        double ph = -t * L;
        sum.add(v[i] * (-L) * cplx(mag * std::cos(ph), mag * std::sin(ph)));
    }
    return sum.value();
}

double DirichletPolynomial::envelope(double sigma) const {
    auto v = coeffs_.values();
    KahanSum sum;
    for (size_t i = 0; i < v.size(); ++i) {
        double a = std::abs(v[i]);
        if (a == 0.0) continue;
        sum.add(a * std::exp(-sigma * logn_[i]));
    }
    return sum.value();
}

double DirichletPolynomial::log_envelope(double sigma) const {
    if (sigma >= 0.0) return std::log(envelope(sigma));
    // factor out M^{-sigma} to stay in range
    auto v = coeffs_.values();
    KahanSum sum;
    for (size_t i = 0; i < M_; ++i) {
        double a = std::abs(v[i]);
        if (a == 0.0) continue;
        sum.add(a * std::exp(-sigma * (logn_[i] - logM_)));
    }
    return -sigma * logM_ + std::log(sum.value());
}

double DirichletPolynomial::strip_bound(double margin) const {
    if (margin <= 0.0)
        throw std::invalid_argument("strip_bound: margin must be positive");
    if (!coeffs_.normalized())
        throw std::invalid_argument("strip_bound: requires f(1) = 1");
    if (M_ == 1) throw NoZerosError();

    auto v = coeffs_.values();
    // (rb): sum_{2<=n<=M} |f(n)| n^{-B} < 1.  Underflow-safe directly.
    auto cond_rb = [&](double B) {
        KahanSum sum;
        for (size_t n = 2; n <= M_; ++n) {
            double a = std::abs(v[n - 1]);
            if (a != 0.0) sum.add(a * std::exp(-B * logn_[n - 1]));
        }
        return sum.value() < 1.0;
    };
    // (lb): sum_{1<=n<=M-1} |f(n)| n^{B} < |f(M)| M^{B}, compared in the
    // log domain (n^B overflows doubles long before B reaches the answer).
    double logfM = std::log(std::abs(v[M_ - 1]));
    auto cond_lb = [&](double B) {
        KahanSum sum;   // sum of |f(n)| (n/M)^B, every term <= |f(n)|
        for (size_t n = 1; n <= M_ - 1; ++n) {
            double a = std::abs(v[n - 1]);
            if (a != 0.0) sum.add(a * std::exp(B * (logn_[n - 1] - logM_)));
        }
        return std::log(sum.value()) < logfM;
    };
    auto ok = [&](double B) { return cond_rb(B) && cond_lb(B); };

    double hi = 1.0;
    int doublings = 0;
    while (!ok(hi)) {
        hi *= 2.0;
        if (++doublings > 64)
            throw InternalError("strip_bound: conditions never satisfied");
    }
    double lo = 0.0;
    // both conditions are monotone in B, so bisection is sound
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        (ok(mid) ? hi : lo) = mid;
    }
    return hi + margin;
}

}  // namespace lps
