// Independent oracles for the test suites.  Everything here is brute force
// or a second algebraic route; none of it shares code with the library
// paths it checks.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

using cplx = std::complex<double>;

// ordered k-tuples with product n, by direct recursion over divisors
inline uint64_t dk_brute(uint64_t n, unsigned k) {
    if (k == 1) return 1;
    uint64_t total = 0;
    for (uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) total += dk_brute(n / d, k - 1);
    return total;
}

// Lambda_f by solving f(n) log n = sum_{d|n} Lambda(d) f(n/d) with explicit
// divisor enumeration, one n at a time (quadratic, test sizes only)
inline std::vector<cplx> lambda_direct(const std::vector<cplx>& f_1based) {
    size_t N = f_1based.size();
    std::vector<cplx> lam(N + 1, cplx(0.0));
    for (size_t n = 2; n <= N; ++n) {
        cplx rhs = f_1based[n - 1] * std::log(double(n));
        for (size_t d = 2; d < n; ++d)
            if (n % d == 0) rhs -= lam[d] * f_1based[n / d - 1];
        lam[n] = rhs;   // divides by f(1) = 1
    }
    return std::vector<cplx>(lam.begin() + 2, lam.end());
}

// Gaussian-lattice count of |{(a,b) : a^2 + b^2 = n}| / 4 = ideals of norm n
inline long long gaussian_ideals(long long n) {
    long long count = 0;
    long long r = static_cast<long long>(std::sqrt(double(n))) + 2;
    for (long long a = -r; a <= r; ++a)
        for (long long b = -r; b <= r; ++b)
            if (a * a + b * b == n) ++count;
    return count / 4;
}

// sum_{d|n} chi_{-4}(d), the classical formula for r2(n)/4
inline long long two_squares_divisor_formula(long long n) {
    long long s = 0;
    for (long long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (d % 4 == 1) ++s;
        else if (d % 4 == 3) --s;
    }
    return s;
}

// Legendre symbol by Euler's criterion (powmod), composed over the
// factorization of n: an independent route to the Kronecker symbol for
// odd n > 0
inline long long powmod(long long b, long long e, long long m) {
    long long r = 1;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % m;
        b = (__int128)b * b % m;
        e >>= 1;
    }
    return r;
}

inline int legendre(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long long r = powmod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

inline int kronecker_slow(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -1;
    }
    int result = sign;
    for (long long p = 2; p <= n; ++p) {
        while (n % p == 0) {
            n /= p;
            if (p == 2) {
                if (a % 2 == 0) return 0;
                long long r = ((a % 8) + 8) % 8;
                result *= (r == 1 || r == 7) ? 1 : -1;
            } else {
                int l = legendre(a, p);
                if (l == 0) return 0;
                result *= l;
            }
        }
    }
    return result;
}

// composite Simpson for complex integrands on [0, 1]
inline cplx simpson01(const std::function<cplx(double)>& f, int n) {
    if (n % 2 == 1) ++n;
    double h = 1.0 / n;
    cplx s = f(0.0) + f(1.0);
    for (int i = 1; i < n; ++i) s += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * (h / 3.0);
}

}  // namespace oracles
