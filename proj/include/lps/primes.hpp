#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace lps {

// Smallest-prime-factor table for 1..N.  Built once, shared read-only.
class PrimeSieve {
public:
    explicit PrimeSieve(size_t N);

    size_t limit() const { return spf_.size() - 1; }
    bool is_prime(uint64_t n) const { return n >= 2 && spf_[n] == n; }
    uint32_t spf(uint64_t n) const { return spf_[n]; }
    const std::vector<uint32_t>& primes() const { return primes_; }

private:
    std::vector<uint32_t> spf_;
    std::vector<uint32_t> primes_;
};

struct PrimePower {
    uint64_t p;
    int m;
};

// n = p^m with m >= 1, or nullopt.  Integer arithmetic only.
std::optional<PrimePower> as_prime_power(uint64_t n, const PrimeSieve& sieve);

// Classical von Mangoldt Lambda(n): log p on prime powers, 0 elsewhere.
// The prime-power test is exact (integer sieve); only the final log is
// floating point.
std::vector<double> classical_von_mangoldt(size_t N);

uint64_t euler_phi(uint64_t n);

// Multiplicative order of a mod q; requires gcd(a, q) = 1.
uint64_t multiplicative_order(uint64_t a, uint64_t q);

}  // namespace lps
