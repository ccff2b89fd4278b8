#include "lps/primes.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lps {

PrimeSieve::PrimeSieve(size_t N) {
    if (N < 1) N = 1;
    spf_.assign(N + 1, 0);
    spf_[1] = 1;
    // linear sieve
    for (uint64_t i = 2; i <= N; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<uint32_t>(i);
            primes_.push_back(static_cast<uint32_t>(i));
        }
        for (uint32_t p : primes_) {
            if (p > spf_[i] || i * p > N) break;
            spf_[i * p] = p;
        }
    }
}

std::optional<PrimePower> as_prime_power(uint64_t n, const PrimeSieve& sieve) {
    if (n < 2 || n > sieve.limit()) return std::nullopt;
    uint64_t p = sieve.spf(n);
    int m = 0;
    while (n % p == 0) {
        n /= p;
        ++m;
    }
    if (n != 1) return std::nullopt;
    return PrimePower{p, m};
}

std::vector<double> classical_von_mangoldt(size_t N) {
    PrimeSieve sieve(N);
    std::vector<double> lam(N + 1, 0.0);
    for (uint32_t p : sieve.primes()) {
        double lp = std::log(static_cast<double>(p));
        for (uint64_t q = p; q <= N; q *= p) {
            lam[q] = lp;
            if (q > N / p) break;
        }
    }
    return lam;
}

uint64_t euler_phi(uint64_t n) {
    uint64_t result = n;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

uint64_t multiplicative_order(uint64_t a, uint64_t q) {
    if (q == 1) return 1;
    a %= q;
    if (std::gcd(a, q) != 1)
        throw std::invalid_argument("multiplicative_order: gcd(a, q) != 1");
    uint64_t x = a % q, ord = 1;
    while (x != 1) {
        x = (x * a) % q;
        ++ord;
        if (ord > q) throw std::logic_error("multiplicative_order: no order found");
    }
    return ord;
}

}  // namespace lps
