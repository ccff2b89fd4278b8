#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lps/series.hpp"

namespace lps::nf {

// Local structure of a rational prime p in a number field: the list of
// (ramification index e_i, residue degree f_i) of the primes above p.
// sum e_i f_i equals the field degree.
struct SplittingRule {
    std::vector<std::pair<int, int>> ef;

    int degree() const;
    std::string str() const;
};

struct FieldSpec {
    enum class Kind { Quadratic, Cyclotomic, Custom };

    Kind kind = Kind::Custom;
    int degree = 1;
    long long disc = 0;                          // quadratic
    long long q = 0;                             // cyclotomic
    std::map<uint64_t, SplittingRule> rules;     // custom: listed primes
    SplittingRule default_rule;                  // custom: all other primes
    std::string label;

    static FieldSpec rationals();                // degree 1, rule {(1,1)}
    static FieldSpec quadratic(long long disc);  // fundamental discriminant
    static FieldSpec cyclotomic(long long q);    // degree phi(q)
    static FieldSpec custom(int degree, std::map<uint64_t, SplittingRule> rules,
                            SplittingRule default_rule);

    SplittingRule splitting(uint64_t p) const;
};

// Kronecker symbol (a|n), full 2-adic and sign rules, values in {-1,0,1}.
int kronecker(long long a, long long n);

bool is_fundamental_discriminant(long long d);

// Coefficients a(p^0..p^M) of prod_i (1 - x^{f_i})^{-1}: counts of ideals
// of norm p^m above p.  Ramification indices do not enter the norm count.
std::vector<long long> local_coeffs(const SplittingRule& rule, int M);

// Coefficients of prod_i (1 - x^{f_i}): sum of mu over ideals of norm p^m.
std::vector<long long> mobius_local_coeffs(const SplittingRule& rule, int M);

// Coefficients of prod_i (1 - x^{f_i})^{-2}: sum of the ideal divisor
// function over ideals of norm p^m.
std::vector<long long> divisor_local_coeffs(const SplittingRule& rule, int M);

SplittingRule quadratic_splitting(long long d, uint64_t p);
SplittingRule cyclotomic_splitting(long long q, uint64_t p);

// Integer-valued multiplicative-by-norm vectors, index n = 1..N.
// Entries are exact; overflow of 64-bit entries throws std::overflow_error.
std::vector<long long> dedekind_coeffs_int(const FieldSpec& field, size_t N);
std::vector<long long> mobius_by_norm_int(const FieldSpec& field, size_t N);
std::vector<long long> divisor_by_norm_int(const FieldSpec& field, size_t N);

CoefficientSeries dedekind_coeffs(const FieldSpec& field, size_t N);
CoefficientSeries mobius_by_norm(const FieldSpec& field, size_t N);
CoefficientSeries divisor_by_norm(const FieldSpec& field, size_t N);

// A(x) = #{n <= x : a(n) != 0}; exact comparison against stored values.
long long count_nonzero(const CoefficientSeries& a, size_t x);

}  // namespace lps::nf
