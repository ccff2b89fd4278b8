#include "lps/numberfield.hpp"

#include <algorithm>
#include <cmath>

#include "lps/errors.hpp"
#include "lps/primes.hpp"

namespace lps::nf {

int SplittingRule::degree() const {
    int d = 0;
    for (auto [e, f] : ef) d += e * f;
    return d;
}

std::string SplittingRule::str() const {
    std::string s = "{";
    for (size_t i = 0; i < ef.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(ef[i].first) + "," + std::to_string(ef[i].second) + ")";
    }
    return s + "}";
}

bool is_fundamental_discriminant(long long d) {
    if (d == 0 || d == 1) return false;
    auto squarefree = [](long long m) {
        m = std::llabs(m);
        for (long long p = 2; p * p <= m; ++p) {
            if (m % (p * p) == 0) return false;
        }
        return true;
    };
    long long r = ((d % 4) + 4) % 4;
    if (r == 1) return squarefree(d);
    if (r == 0) {
        long long m = d / 4;
        long long rm = ((m % 4) + 4) % 4;
        return (rm == 2 || rm == 3) && squarefree(m);
    }
    return false;
}

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    // (a|2) component: 0 if a even, +1 if a = +-1 mod 8, -1 if a = +-3 mod 8
    auto kron2 = [](long long x) -> int {
        if (x % 2 == 0) return 0;
        long long r = ((x % 8) + 8) % 8;
        return (r == 1 || r == 7) ? 1 : -1;
    };
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // strip factors of 2 from n
    while (n % 2 == 0) {
        n /= 2;
        int k2 = kron2(a);
        if (k2 == 0) return 0;
        result *= k2;
    }
    // now n odd positive; Jacobi via reciprocity (periodic in a mod n)
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

SplittingRule quadratic_splitting(long long d, uint64_t p) {
    if (!is_fundamental_discriminant(d))
        throw std::invalid_argument("quadratic_splitting: " + std::to_string(d) +
                                    " is not a fundamental discriminant");
    int chi = kronecker(d, static_cast<long long>(p));
    if (chi == 1) return {{{1, 1}, {1, 1}}};
    if (chi == -1) return {{{1, 2}}};
    return {{{2, 1}}};
}

SplittingRule cyclotomic_splitting(long long q, uint64_t p) {
    if (q < 3) throw std::invalid_argument("cyclotomic_splitting: need q >= 3");
    uint64_t uq = static_cast<uint64_t>(q);
    if (uq % p != 0) {
        int f = static_cast<int>(multiplicative_order(p, uq));
        int g = static_cast<int>(euler_phi(uq)) / f;
        SplittingRule rule;
        rule.ef.assign(g, {1, f});
        return rule;
    }
    // p | q: q = p^v q' with p not dividing q'
    uint64_t pv = 1, qp = uq;
    while (qp % p == 0) {
        qp /= p;
        pv *= p;
    }
    int e = static_cast<int>(euler_phi(pv));
    int f = qp == 1 ? 1 : static_cast<int>(multiplicative_order(p, qp));
    int g = static_cast<int>(euler_phi(qp)) / f;
    SplittingRule rule;
    rule.ef.assign(g, {e, f});
    return rule;
}

FieldSpec FieldSpec::rationals() {
    FieldSpec fs;
    fs.kind = Kind::Custom;
    fs.degree = 1;
    fs.default_rule = {{{1, 1}}};
    fs.label = "Q";
    return fs;
}

FieldSpec FieldSpec::quadratic(long long disc) {
    if (!is_fundamental_discriminant(disc))
        throw std::invalid_argument("FieldSpec::quadratic: " + std::to_string(disc) +
                                    " is not a fundamental discriminant");
    FieldSpec fs;
    fs.kind = Kind::Quadratic;
    fs.degree = 2;
    fs.disc = disc;
    fs.label = "Q(sqrt(" + std::to_string(disc) + "))";
    return fs;
}

FieldSpec FieldSpec::cyclotomic(long long q) {
    if (q < 3) throw std::invalid_argument("FieldSpec::cyclotomic: need q >= 3");
    FieldSpec fs;
    fs.kind = Kind::Cyclotomic;
    fs.degree = static_cast<int>(euler_phi(static_cast<uint64_t>(q)));
    fs.q = q;
    fs.label = "Q(zeta_" + std::to_string(q) + ")";
    return fs;
}

FieldSpec FieldSpec::custom(int degree, std::map<uint64_t, SplittingRule> rules,
                            SplittingRule default_rule) {
    FieldSpec fs;
    fs.kind = Kind::Custom;
    fs.degree = degree;
    fs.rules = std::move(rules);
    fs.default_rule = std::move(default_rule);
    fs.label = "custom(" + std::to_string(degree) + ")";
    // validate now: every listed rule and the default must match the degree
    for (const auto& [p, rule] : fs.rules) {
        if (rule.degree() != degree)
            throw std::invalid_argument(
                "FieldSpec::custom: rule " + rule.str() + " at p = " + std::to_string(p) +
                " has sum e_i f_i = " + std::to_string(rule.degree()) +
                ", expected " + std::to_string(degree));
    }
    if (fs.default_rule.degree() != degree)
        throw std::invalid_argument(
            "FieldSpec::custom: default rule " + fs.default_rule.str() +
            " does not match degree " + std::to_string(degree));
    return fs;
}

SplittingRule FieldSpec::splitting(uint64_t p) const {
    SplittingRule rule;
    switch (kind) {
        case Kind::Quadratic:
            rule = quadratic_splitting(disc, p);
            break;
        case Kind::Cyclotomic:
            rule = cyclotomic_splitting(q, p);
            break;
        case Kind::Custom: {
            auto it = rules.find(p);
            rule = it == rules.end() ? default_rule : it->second;
            break;
        }
    }
    if (rule.degree() != degree)
        throw InternalError("FieldSpec::splitting: rule degree mismatch at p = " +
                            std::to_string(p));
    return rule;
}

std::vector<long long> local_coeffs(const SplittingRule& rule, int M) {
    if (M < 0) throw std::invalid_argument("local_coeffs: need M >= 0");
    std::vector<long long> c(M + 1, 0);
    c[0] = 1;
    for (auto [e, f] : rule.ef) {
        (void)e;   // ramification does not affect norms of the primes above p
        for (int j = f; j <= M; ++j) c[j] += c[j - f];
    }
    return c;
}

std::vector<long long> mobius_local_coeffs(const SplittingRule& rule, int M) {
    if (M < 0) throw std::invalid_argument("mobius_local_coeffs: need M >= 0");
    std::vector<long long> c(M + 1, 0);
    c[0] = 1;
    for (auto [e, f] : rule.ef) {
        (void)e;
        for (int j = M; j >= f; --j) c[j] -= c[j - f];
    }
    return c;
}

std::vector<long long> divisor_local_coeffs(const SplittingRule& rule, int M) {
    if (M < 0) throw std::invalid_argument("divisor_local_coeffs: need M >= 0");
    std::vector<long long> c(M + 1, 0);
    c[0] = 1;
    for (auto [e, f] : rule.ef) {
        (void)e;
        for (int j = f; j <= M; ++j) c[j] += c[j - f];
        for (int j = f; j <= M; ++j) c[j] += c[j - f];
    }
    return c;
}

namespace {

long long checked_mul(long long a, long long b, const char* what) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error(std::string(what) + ": 64-bit overflow in coefficient");
    return r;
}

// Multiplicative-by-norm assembly: v(1) = 1, v(p^e) from the local
// coefficient vector of the prime's splitting rule, extended by
// multiplicativity with an SPF sieve.
std::vector<long long> assemble_by_norm(
    const FieldSpec& field, size_t N,
    std::vector<long long> (*local_fn)(const SplittingRule&, int),
    const char* what) {
    if (N < 1) throw std::invalid_argument(std::string(what) + ": need N >= 1");
    PrimeSieve sieve(N);
    std::vector<long long> v(N + 1, 0);
    v[1] = 1;
    if (N == 1) return v;

    // local vectors for primes with p^2 <= N; single-exponent value otherwise
    std::vector<std::vector<long long>> small_local;
    std::vector<uint32_t> small_primes;
    for (uint32_t p : sieve.primes()) {
        if (static_cast<uint64_t>(p) * p > N) break;
        small_primes.push_back(p);
        int M = 0;
        uint64_t q = p;
        while (q <= N / p) {
            q *= p;
            ++M;
        }
        small_local.push_back(local_fn(field.splitting(p), M + 1));
    }
    auto local_at = [&](uint64_t p, int e) -> long long {
        auto it = std::lower_bound(small_primes.begin(), small_primes.end(), p);
        if (it != small_primes.end() && *it == p)
            return small_local[static_cast<size_t>(it - small_primes.begin())][e];
        return local_fn(field.splitting(p), e)[e];
    };

    for (size_t n = 2; n <= N; ++n) {
        uint64_t p = sieve.spf(n);
        uint64_t m = n;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        long long lp = local_at(p, e);
        v[n] = (lp == 0 || v[m] == 0) ? 0 : checked_mul(v[m], lp, what);
    }
    return v;
}

CoefficientSeries to_series(const std::vector<long long>& v, std::string label) {
    std::vector<cplx> c(v.size() - 1);
    for (size_t n = 1; n < v.size(); ++n) c[n - 1] = cplx(static_cast<double>(v[n]), 0.0);
    return CoefficientSeries(std::move(c), std::move(label));
}

}  // namespace

std::vector<long long> dedekind_coeffs_int(const FieldSpec& field, size_t N) {
    return assemble_by_norm(field, N, &local_coeffs, "dedekind_coeffs");
}

std::vector<long long> mobius_by_norm_int(const FieldSpec& field, size_t N) {
    return assemble_by_norm(field, N, &mobius_local_coeffs, "mobius_by_norm");
}

std::vector<long long> divisor_by_norm_int(const FieldSpec& field, size_t N) {
    return assemble_by_norm(field, N, &divisor_local_coeffs, "divisor_by_norm");
}

CoefficientSeries dedekind_coeffs(const FieldSpec& field, size_t N) {
    return to_series(dedekind_coeffs_int(field, N), "zeta_" + field.label);
}

CoefficientSeries mobius_by_norm(const FieldSpec& field, size_t N) {
    return to_series(mobius_by_norm_int(field, N), "mu_" + field.label);
}

CoefficientSeries divisor_by_norm(const FieldSpec& field, size_t N) {
    return to_series(divisor_by_norm_int(field, N), "d_" + field.label);
}

long long count_nonzero(const CoefficientSeries& a, size_t x) {
    if (x < 1 || x > a.length())
        throw std::invalid_argument("count_nonzero: need 1 <= x <= N");
    long long c = 0;
    auto v = a.values();
    for (size_t n = 1; n <= x; ++n)
        if (v[n - 1] != cplx(0.0, 0.0)) ++c;
    return c;
}

}  // namespace lps::nf
