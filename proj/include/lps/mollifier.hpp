#pragma once

#include <string>
#include <vector>

#include "lps/numberfield.hpp"
#include "lps/series.hpp"

namespace lps {

// zeta_{K,X} * M_{K,Y} - 1 aggregated by norm.  Ideals are never
// materialized: everything is assembled from local generating polynomials,
// so all integer vectors are exact.
struct MollifiedProduct {
    nf::FieldSpec field;
    long long X = 0, Y = 0, Z = 0;           // Z = min(X, Y)
    std::vector<long long> zeta_int;         // a(n), n <= X
    std::vector<long long> mobius_int;       // sum of mu by norm, n <= Y
    std::vector<long long> g_int;            // g by norm, n <= XY
    std::vector<long long> divisor_int;      // d by norm, n <= XY

    CoefficientSeries zeta_coeffs() const;
    CoefficientSeries mobius_coeffs() const;
    CoefficientSeries g_coeffs() const;
};

// g(n) = sum_{de = n, d <= X, e <= Y} a(d) mu_norm(e), minus the unit.
// Construction verifies g(n) = 0 for n <= Z and |g(n)| <= d_norm(n);
// a failure is a programming error and throws InternalError.
MollifiedProduct build_mollified(const nf::FieldSpec& field, long long X,
                                 long long Y);

cplx fK_eval(const MollifiedProduct& mp, cplx s);
// h_K = 1 - f_K^2; vanishes wherever zeta_{K,X} M_{K,Y} is 0 or 2.
cplx hK_eval(const MollifiedProduct& mp, cplx s);

// integral_0^T log |h_K(sigma0 + it)| dt, Simpson with node doubling until
// the relative change is < 1e-4.  Nodes landing on a zero of h_K are
// shifted by epsilon; throws QuadratureStallError when refinement stalls.
double littlewood_integrand(const MollifiedProduct& mp, double sigma0,
                            double T, int quad_nodes);

struct DensityRow {
    double sigma = 0.0;
    long count = 0;       // N_{K,X}(sigma, T)
    double bound = 0.0;   // T X^{-2(sigma-1/2)} (log T)^5 + (log T)^2
    double ratio = 0.0;
};

struct DensityReport {
    std::string field_label;
    long long X = 0;
    double T = 0.0;
    std::vector<DensityRow> rows;   // sorted by sigma ascending
    double max_ratio = 0.0;
};

// Locates the zeros of zeta_{K,X} up to height T once and compares
// N_{K,X}(sigma, T) against the density bound on each grid sigma.
DensityReport density_shape_check(const nf::FieldSpec& field, long long X,
                                  double T, std::vector<double> sigma_grid);

struct MvtReport {
    double T = 0.0;
    double diagonal = 0.0;    // sum |a_n|^2
    double lhs = 0.0;         // integral_0^T |sum a_n n^{-it}|^2 dt, closed form
    double deviation = 0.0;   // lhs - T * diagonal
    double weighted = 0.0;    // sum n |a_n|^2
    double ratio = 0.0;       // |deviation| / weighted
};

// Mean value of a Dirichlet polynomial in closed form: the diagonal gives
// T sum |a_n|^2, the off-diagonal terms are integrated exactly.
MvtReport mvt_check(const CoefficientSeries& a, double T);

}  // namespace lps
