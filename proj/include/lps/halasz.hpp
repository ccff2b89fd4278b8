#pragma once

#include <functional>
#include <vector>

#include "lps/series.hpp"

namespace lps {

// S_1(x) = sum_{n<=x} f(n)/n, compensated summation.  Requires 1 <= x <= N.
cplx log_mean(const CoefficientSeries& f, double x);

// Evaluates F(s) for Re s > 1; built from a truncated coefficient series,
// optionally with a mean-density tail correction (see make_series_evaluator).
using AnalyticEvaluator = std::function<cplx(cplx s)>;

// Truncated-series evaluator F(s) ~ sum_{n<=cutoff} f(n) n^{-s}.  When the
// partial sums of f grow linearly (measured by comparing S(cutoff) with
// 2 S(cutoff/2)), the tail is corrected by S(cutoff) cutoff^{-s} / (s-1);
// for cancellative series (mu, the sharp example) the correction is skipped.
AnalyticEvaluator make_series_evaluator(CoefficientSeries coeffs,
                                        bool tail_correction = true);

struct M1Params {
    int K_trunc = 32;          // cells k in [-K_trunc, K_trunc]
    int grid_sigma = 33;       // sigma samples per cell
    int grid_t = 65;           // t samples per cell
    size_t series_cutoff = 100000;
    double k_class = 1.0;      // class index, used by the tail annotation
};

struct M1Result {
    double value = 0.0;
    // Bound on the change of the value if the cell sum were extended to all
    // integers, from |F(1+sigma+it)| <= zeta(1+alpha)^k on f in C(k).
    double tail_bound = 0.0;
};

// M_1(alpha): per-cell grid maximum of |F(1+sigma+it)/(sigma+it)| over
// alpha <= sigma <= 1, |t-k| <= 1/2, square-summed over cells and rooted.
// One local refinement pass runs around each cell's grid argmax.
M1Result m1(const AnalyticEvaluator& F, double alpha, const M1Params& params);

// M_1 at several alphas (ascending, in (0,1]) from one shared evaluation
// grid whose sigma nodes are the alphas themselves; used by halasz_bound
// where the alpha grid is geometric.  No per-cell refinement pass.
std::vector<M1Result> m1_profile(const AnalyticEvaluator& F,
                                 const std::vector<double>& alphas,
                                 const M1Params& params);

struct BoundReport {
    double x = 0.0;
    double k = 0.0;
    double lhs = 0.0;        // |S_1(x)|
    double rhs = 0.0;        // (k^2 (k+1) / log x) * integral of M_1(a)/a
    double ratio = 0.0;      // lhs / rhs
    double tail_bound = 0.0; // largest M_1 cell-truncation tail on the grid
    M1Params params;
    int alpha_nodes = 0;
};

// Logarithmic mean value bound: quadrature of M_1(alpha)/alpha over a
// geometric alpha grid from 1/log x to 1 (trapezoid in log alpha, >= 32
// nodes), against |S_1(x)|.
BoundReport halasz_bound(const CoefficientSeries& f, double x, double k,
                         const M1Params& params);

// |F(sigma)| (sigma-1)^k (log x)^{k-1} ((sigma-1)^{-4k/pi} + log x),
// valid uniformly for 1 + 1/log x < sigma <= 2.
double f1_estimate_bound(double F_sigma_abs, double sigma, double x, double k);

// g totally multiplicative with g(p) = i e^{i pi frac(log p / 2 pi)};
// entry n is g(n) d_k(n).  The extremal series for the log-mean bound.
CoefficientSeries sharp_example_coeffs(unsigned k, size_t N);

// Fourier coefficient a_r of b(u) = i e^{i pi u} on [0,1]:
// a_r = 2 / (pi (2r - 1)), in closed form.
cplx fourier_coeffs_b(long r);

struct RatioReport {
    double ratio = 0.0;       // measured |F(.)| ratio
    double lower = 0.0;       // bracket or bound, per the lemma
    double upper = 0.0;
    double c_lo = 0.5;        // recorded slack constants
    double c_hi = 2.0;
    bool within = false;
    double tail_fraction = 0.0;  // truncation sensitivity of the ratio
    bool voided = false;         // tail_fraction > 10%: check not binding
};

// |F(sigma2)/F(sigma1)| against the brackets ((sigma1-1)/(sigma2-1))^k and
// its reciprocal, for 1 < sigma1 <= sigma2 <= 2.
RatioReport ratio_check_lemma1(const CoefficientSeries& f, double sigma1,
                               double sigma2, double k, size_t cutoff);

// |F(sigma+it)/F(sigma)| against (1+|t|/(sigma-1))^{4k/pi} for |t| <= 2,
// (log|t|/(sigma-1))^{4k/pi} for |t| > 2.
RatioReport ratio_check_lemma2(const CoefficientSeries& f, double sigma,
                               double t, double k, size_t cutoff);

struct GrowthFit {
    double slope = 0.0;
    double residual = 0.0;    // rms residual of the linear fit
    std::vector<std::pair<double, double>> points;  // (loglog x, log |S_1|)
};

// Least-squares slope of log|S_1(x)| against log log x over the grid.
GrowthFit growth_fit_series(const CoefficientSeries& f,
                            const std::vector<double>& x_grid);
// Same, over the sharp-example series of the given k (built to max x).
GrowthFit growth_fit_sharp(unsigned k, const std::vector<double>& x_grid);

}  // namespace lps
