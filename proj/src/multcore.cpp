#include "lps/multcore.hpp"

#include <cmath>
#include <stdexcept>

#include "lps/primes.hpp"

namespace lps {

namespace {

// C(a+k-1, k-1) with overflow detection.
uint64_t stars_and_bars(unsigned a, unsigned k) {
    // product form, dividing as we go keeps intermediates integral
    uint64_t r = 1;
    for (unsigned i = 1; i < k; ++i) {
        // r *= (a + i); r /= i;   with gcd-free exactness via stepwise division
        uint64_t num = a + i;
        uint64_t t;
        if (__builtin_mul_overflow(r, num, &t))
            throw std::overflow_error("dk: binomial exceeds 64-bit range");
        r = t / i;   // C(a+i, i) = C(a+i-1, i-1) * (a+i) / i is exact
    }
    return r;
}

}  // namespace

uint64_t dk(uint64_t n, unsigned k) {
    if (n < 1 || k < 1) throw std::invalid_argument("dk: need n >= 1, k >= 1");
    uint64_t result = 1;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            unsigned a = 0;
            while (n % p == 0) {
                n /= p;
                ++a;
            }
            uint64_t t;
            if (__builtin_mul_overflow(result, stars_and_bars(a, k), &t))
                throw std::overflow_error("dk: product exceeds 64-bit range");
            result = t;
        }
    }
    if (n > 1) {
        uint64_t t;
        if (__builtin_mul_overflow(result, stars_and_bars(1, k), &t))
            throw std::overflow_error("dk: product exceeds 64-bit range");
        result = t;
    }
    return result;
}

CoefficientSeries dirichlet_convolve(const CoefficientSeries& a,
                                     const CoefficientSeries& b) {
    size_t N = std::min(a.length(), b.length());
    std::vector<cplx> out(N, cplx(0.0, 0.0));
    auto av = a.values();
    auto bv = b.values();
    for (size_t d = 1; d <= N; ++d) {
        cplx ad = av[d - 1];
        if (ad == cplx(0.0, 0.0)) continue;
        for (size_t m = 1; d * m <= N; ++m) out[d * m - 1] += ad * bv[m - 1];
    }
    return CoefficientSeries(std::move(out));
}

VonMangoldtSeries lambda_f_from_coeffs(const CoefficientSeries& f) {
    if (!f.normalized())
        throw std::invalid_argument("lambda_f_from_coeffs: requires f(1) = 1");
    size_t N = f.length();
    if (N < 2)
        throw std::invalid_argument("lambda_f_from_coeffs: need N >= 2");
    auto fv = f.values();
    // lam[n] starts as f(n) log n; subtracting divisor contributions in
    // ascending d order finalizes lam[d] before it is used.
    std::vector<cplx> lam(N + 1, cplx(0.0, 0.0));
    for (size_t n = 2; n <= N; ++n)
        lam[n] = fv[n - 1] * std::log(static_cast<double>(n));
    for (size_t d = 2; d <= N / 2; ++d) {
        if (lam[d] == cplx(0.0, 0.0)) continue;
        for (size_t n = 2 * d; n <= N; n += d) lam[n] -= lam[d] * fv[n / d - 1];
    }
    return VonMangoldtSeries(std::vector<cplx>(lam.begin() + 2, lam.end()), N);
}

std::vector<KBoundViolation> check_k_bounded(const VonMangoldtSeries& lam,
                                             double k, double tol) {
    if (tol < 0) throw std::invalid_argument("check_k_bounded: tol must be >= 0");
    std::vector<double> classical = classical_von_mangoldt(lam.limit());
    std::vector<KBoundViolation> report;
    for (size_t n = 2; n <= lam.limit(); ++n) {
        double lhs = std::abs(lam.at(n));
        double rhs = k * classical[n];
        if (lhs > rhs + tol) report.push_back({n, lhs, rhs});
    }
    return report;
}

CoefficientSeries coeffs_from_multiplicative(const MultiplicativeSpec& spec,
                                             size_t N) {
    if (N < 1) throw std::invalid_argument("coeffs_from_multiplicative: N >= 1");
    PrimeSieve sieve(N);
    std::vector<cplx> f(N, cplx(0.0, 0.0));   // f[i] holds f(i+1)
    f[0] = 1.0;
    for (size_t n = 2; n <= N; ++n) {
        uint64_t p = sieve.spf(n);
        uint64_t m = n;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f[n - 1] = f[m - 1] * spec.prime_power_rule(p, e);
    }
    return CoefficientSeries(std::move(f), spec.label);
}

MultiplicativeSpec zeta_spec() {
    return {[](uint64_t, int) { return cplx(1.0, 0.0); }, "zeta"};
}

MultiplicativeSpec moebius_spec() {
    return {[](uint64_t, int m) { return m == 1 ? cplx(-1.0, 0.0) : cplx(0.0, 0.0); },
            "moebius"};
}

}  // namespace lps
