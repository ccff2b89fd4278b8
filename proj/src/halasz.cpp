#include "lps/halasz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "lps/errors.hpp"
#include "lps/multcore.hpp"
#include "lps/parallel.hpp"

namespace lps {

namespace {
constexpr double kPi = std::numbers::pi;
}

cplx log_mean(const CoefficientSeries& f, double x) {
    if (x < 1.0) throw std::invalid_argument("log_mean: need x >= 1");
    if (x > static_cast<double>(f.length()))
        throw std::invalid_argument("log_mean: x exceeds the series length");
    auto v = f.values();
    size_t nx = static_cast<size_t>(std::floor(x));
    KahanSumC sum;
    for (size_t n = 1; n <= nx; ++n)
        sum.add(v[n - 1] / static_cast<double>(n));
    return sum.value();
}

AnalyticEvaluator make_series_evaluator(CoefficientSeries coeffs,
                                        bool tail_correction) {
    auto data = std::make_shared<CoefficientSeries>(std::move(coeffs));
    size_t N = data->length();
    // S(N) and the linear-growth probe S(N) vs 2 S(N/2): the tail correction
    // S(N) N^{-s} / (s-1) assumes the partial sums grow linearly, which holds
    // for zeta-like series and fails for cancellative ones (mu) and for the
    // rotating sharp example.
    cplx SN(0.0, 0.0), SN2(0.0, 0.0);
    {
        KahanSumC s;
        auto v = data->values();
        for (size_t n = 1; n <= N; ++n) {
            s.add(v[n - 1]);
            if (n == N / 2) SN2 = s.value();
        }
        SN = s.value();
    }
    bool apply = tail_correction && N >= 16 && std::abs(SN) > 1e-4 * static_cast<double>(N) &&
                 std::abs(SN - 2.0 * SN2) < 0.1 * std::abs(SN);
    double logN = std::log(static_cast<double>(N));
    // packed nonzero terms with precomputed logs: the evaluator sits in the
    // innermost loop of every M1 grid
    auto terms = std::make_shared<std::vector<std::pair<double, cplx>>>();
    {
        auto v = data->values();
        terms->reserve(N);
        for (size_t n = 1; n <= N; ++n)
            if (v[n - 1] != cplx(0.0, 0.0))
                terms->emplace_back(std::log(static_cast<double>(n)), v[n - 1]);
    }
    return [terms, SN, apply, logN](cplx s) -> cplx {
        double sigma = s.real(), t = s.imag();
        KahanSumC sum;
        for (const auto& [L, c] : *terms) {
            double mag = std::exp(-sigma * L);
            double ph = -t * L;
            sum.add(c * cplx(mag * std::cos(ph), mag * std::sin(ph)));
        }
        cplx val = sum.value();
        if (apply) val += SN * std::exp(-s * logN) / (s - 1.0);
        return val;
    };
}

namespace {

// sum_{j > K} (j - 1/2)^{-2} = psi'(K + 1/2), by the trigamma series.
double tail_cell_sum(int K) {
    double x = K + 0.5;
    // recurrence to push x into the asymptotic range
    double acc = 0.0;
    while (x < 40.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    // psi'(x) ~ 1/x + 1/(2x^2) + 1/(6x^3) - 1/(30x^5) + 1/(42x^7)
    double asym = inv + 0.5 * inv2 + inv2 * inv / 6.0 - inv2 * inv2 * inv / 30.0 +
                  inv2 * inv2 * inv2 * inv / 42.0;
    return acc + asym;
}

double m1_tail_bound(double alpha, const M1Params& p, double square_sum) {
    double zeta_pow = std::pow(std::riemann_zeta(1.0 + alpha), 2.0 * p.k_class);
    double tail_sq = zeta_pow * 2.0 * tail_cell_sum(p.K_trunc);
    return std::sqrt(square_sum + tail_sq) - std::sqrt(square_sum);
}

// |F(1 + sigma + it) / (sigma + it)|^2 on the given node
double cell_value(const AnalyticEvaluator& F, double sigma, double t) {
    cplx s(1.0 + sigma, t);
    cplx w = F(s) / cplx(sigma, t);
    return std::norm(w);
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    double r = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(r * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

// max over one cell, tensor grid plus one refinement pass around the argmax
double cell_max(const AnalyticEvaluator& F, int k, double alpha,
                const M1Params& p) {
    std::vector<double> sgrid =
        alpha < 1.0 ? geometric_grid(alpha, 1.0, std::max(2, p.grid_sigma))
                    : std::vector<double>{1.0};
    int nt = std::max(2, p.grid_t);
    double t0 = k - 0.5, t1 = k + 0.5;
    double best = 0.0;
    size_t bi = 0;
    int bj = 0;
    for (size_t i = 0; i < sgrid.size(); ++i) {
        for (int j = 0; j < nt; ++j) {
            double t = t0 + (t1 - t0) * j / (nt - 1);
            double val = cell_value(F, sgrid[i], t);
            if (val > best) {
                best = val;
                bi = i;
                bj = j;
            }
        }
    }
    // refinement: 9x9 over the neighboring grid box
    double slo = sgrid[bi > 0 ? bi - 1 : 0];
    double shi = sgrid[std::min(bi + 1, sgrid.size() - 1)];
    double tlo = t0 + (t1 - t0) * std::max(bj - 1, 0) / (nt - 1);
    double thi = t0 + (t1 - t0) * std::min(bj + 1, nt - 1) / (nt - 1);
    for (int i = 0; i < 9; ++i) {
        double sg = slo + (shi - slo) * i / 8.0;
        for (int j = 0; j < 9; ++j) {
            double t = tlo + (thi - tlo) * j / 8.0;
            best = std::max(best, cell_value(F, sg, t));
        }
    }
    return best;
}

template <typename Fn>
std::vector<double> map_cells(int K, unsigned nthreads, Fn&& fn) {
    int ncells = 2 * K + 1;
    std::vector<double> out(ncells);
    if (nthreads <= 1 || ncells < 4) {
        for (int i = 0; i < ncells; ++i) out[i] = fn(i - K);
        return out;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= ncells) return;
            out[i] = fn(i - K);
        }
    };
    std::vector<std::future<void>> futs;
    for (unsigned w = 0; w + 1 < nthreads; ++w)
        futs.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : futs) f.get();
    return out;
}

}  // namespace

M1Result m1(const AnalyticEvaluator& F, double alpha, const M1Params& params) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("m1: need 0 < alpha <= 1");
    std::vector<double> maxima = map_cells(
        params.K_trunc, threads(),
        [&](int k) { return cell_max(F, k, alpha, params); });
    KahanSum sq;
    for (double v : maxima) sq.add(v);   // fixed index order
    double S = sq.value();
    return {std::sqrt(S), m1_tail_bound(alpha, params, S)};
}

std::vector<M1Result> m1_profile(const AnalyticEvaluator& F,
                                 const std::vector<double>& alphas,
                                 const M1Params& params) {
    if (alphas.empty()) return {};
    for (size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] > 0.0) || alphas[i] > 1.0)
            throw std::invalid_argument("m1_profile: alphas must lie in (0, 1]");
        if (i > 0 && alphas[i] <= alphas[i - 1])
            throw std::invalid_argument("m1_profile: alphas must ascend");
    }
    // sigma nodes: the alpha grid itself, extended to 1
    std::vector<double> sigma = alphas;
    if (sigma.back() < 1.0) sigma.push_back(1.0);
    size_t ns = sigma.size(), na = alphas.size();
    int K = params.K_trunc, nt = std::max(2, params.grid_t);

    // per cell: max over t for each sigma node, then suffix-max over sigma
    std::vector<std::vector<double>> suffix =
        [&] {
            std::vector<std::vector<double>> rows(2 * K + 1);
            std::vector<double> cells = map_cells(K, threads(), [&](int k) {
                std::vector<double> row(ns);
                for (size_t i = 0; i < ns; ++i) {
                    double best = 0.0;
                    for (int j = 0; j < nt; ++j) {
                        double t = (k - 0.5) + static_cast<double>(j) / (nt - 1);
                        best = std::max(best, cell_value(F, sigma[i], t));
                    }
                    row[i] = best;
                }
                for (size_t i = ns - 1; i-- > 0;) row[i] = std::max(row[i], row[i + 1]);
                rows[static_cast<size_t>(k + K)] = std::move(row);
                return 0.0;
            });
            (void)cells;
            return rows;
        }();

    std::vector<M1Result> out(na);
    for (size_t a = 0; a < na; ++a) {
        KahanSum sq;
        for (const auto& row : suffix) sq.add(row[a]);
        double S = sq.value();
        out[a] = {std::sqrt(S), m1_tail_bound(alphas[a], params, S)};
    }
    return out;
}

BoundReport halasz_bound(const CoefficientSeries& f, double x, double k,
                         const M1Params& params) {
    if (!(x >= 3.0)) throw std::invalid_argument("halasz_bound: need x >= 3");
    double logx = std::log(x);
    int nodes = 32;
    std::vector<double> alphas = geometric_grid(1.0 / logx, 1.0, nodes);

    size_t cutoff = std::min(f.length(), params.series_cutoff);
    std::vector<cplx> head(f.values().begin(),
                           f.values().begin() + static_cast<long>(cutoff));
    AnalyticEvaluator F = make_series_evaluator(CoefficientSeries(std::move(head)));

    std::vector<M1Result> prof = m1_profile(F, alphas, params);
    // trapezoid in log alpha: integral of M1(a)/a da = integral M1 d(log a)
    KahanSum integral;
    double max_tail = 0.0;
    for (size_t i = 0; i + 1 < prof.size(); ++i) {
        double dtheta = std::log(alphas[i + 1] / alphas[i]);
        integral.add(0.5 * dtheta * (prof[i].value + prof[i + 1].value));
        max_tail = std::max(max_tail, prof[i].tail_bound);
    }
    max_tail = std::max(max_tail, prof.back().tail_bound);

    BoundReport rep;
    rep.x = x;
    rep.k = k;
    rep.params = params;
    rep.alpha_nodes = nodes;
    rep.lhs = std::abs(log_mean(f, x));
    rep.rhs = k * k * (k + 1.0) / logx * integral.value();
    rep.ratio = rep.lhs / rep.rhs;
    rep.tail_bound = max_tail;
    return rep;
}

double f1_estimate_bound(double F_sigma_abs, double sigma, double x, double k) {
    if (!(x > 1.0)) throw std::invalid_argument("f1_estimate_bound: need x > 1");
    double logx = std::log(x);
    // the boundary sigma = 1 + 1/log x is admissible: it is the substitution
    // that produces the sharp (log x)^{4k/pi - 1} shape
    if (!(sigma >= 1.0 + 1.0 / logx) || !(sigma <= 2.0))
        throw std::invalid_argument(
            "f1_estimate_bound: need 1 + 1/log x <= sigma <= 2");
    double s1 = sigma - 1.0;
    return F_sigma_abs * std::pow(s1, k) * std::pow(logx, k - 1.0) *
           (std::pow(s1, -4.0 * k / kPi) + logx);
}

CoefficientSeries sharp_example_coeffs(unsigned k, size_t N) {
    if (k < 1) throw std::invalid_argument("sharp_example_coeffs: need k >= 1");
    const double two_pi = 2.0 * kPi;
    MultiplicativeSpec spec;
    spec.label = "sharp-k" + std::to_string(k);
    spec.prime_power_rule = [k, two_pi](uint64_t p, int m) -> cplx {
        double u = std::log(static_cast<double>(p)) / two_pi;
        u -= std::floor(u);
        cplx gp = cplx(0.0, 1.0) * std::exp(cplx(0.0, kPi * u));
        // d_k(p^m) = C(m+k-1, k-1)
        double b = 1.0;
        for (unsigned i = 1; i < k; ++i) b = b * (m + i) / i;
        return std::pow(gp, m) * b;
    };
    return coeffs_from_multiplicative(spec, N);
}

cplx fourier_coeffs_b(long r) {
    // a_r = int_0^1 i e^{i pi u} e^{-2 pi i r u} du = 2 / (pi (2r - 1))
    return cplx(2.0 / (kPi * (2.0 * r - 1.0)), 0.0);
}

namespace {

// truncation sensitivity: how much the ratio moves when the evaluator is
// cut to half length
double ratio_with_cutoff(const CoefficientSeries& f, size_t cutoff, cplx s_num,
                         cplx s_den) {
    size_t n = std::max<size_t>(1, std::min(f.length(), cutoff));
    std::vector<cplx> head(f.values().begin(), f.values().begin() + static_cast<long>(n));
    AnalyticEvaluator F = make_series_evaluator(CoefficientSeries(std::move(head)));
    return std::abs(F(s_num)) / std::abs(F(s_den));
}

}  // namespace

RatioReport ratio_check_lemma1(const CoefficientSeries& f, double sigma1,
                               double sigma2, double k, size_t cutoff) {
    if (!(sigma1 > 1.0) || !(sigma1 <= sigma2) || !(sigma2 <= 2.0))
        throw std::invalid_argument("ratio_check_lemma1: need 1 < s1 <= s2 <= 2");
    RatioReport rep;
    rep.ratio = ratio_with_cutoff(f, cutoff, cplx(sigma2, 0), cplx(sigma1, 0));
    rep.lower = std::pow((sigma1 - 1.0) / (sigma2 - 1.0), k);
    rep.upper = std::pow((sigma2 - 1.0) / (sigma1 - 1.0), k);
    double half = ratio_with_cutoff(f, cutoff / 2, cplx(sigma2, 0), cplx(sigma1, 0));
    rep.tail_fraction = std::abs(rep.ratio - half) / std::max(rep.ratio, 1e-300);
    rep.voided = rep.tail_fraction > 0.10;
    rep.within = rep.ratio >= rep.c_lo * rep.lower && rep.ratio <= rep.c_hi * rep.upper;
    return rep;
}

RatioReport ratio_check_lemma2(const CoefficientSeries& f, double sigma,
                               double t, double k, size_t cutoff) {
    if (!(sigma > 1.0) || !(sigma <= 2.0))
        throw std::invalid_argument("ratio_check_lemma2: need 1 < sigma <= 2");
    RatioReport rep;
    rep.ratio = ratio_with_cutoff(f, cutoff, cplx(sigma, t), cplx(sigma, 0));
    double s1 = sigma - 1.0;
    rep.lower = 0.0;
    rep.upper = std::abs(t) <= 2.0
                    ? std::pow(1.0 + std::abs(t) / s1, 4.0 * k / kPi)
                    : std::pow(std::log(std::abs(t)) / s1, 4.0 * k / kPi);
    double half = ratio_with_cutoff(f, cutoff / 2, cplx(sigma, t), cplx(sigma, 0));
    rep.tail_fraction = std::abs(rep.ratio - half) / std::max(rep.ratio, 1e-300);
    rep.voided = rep.tail_fraction > 0.10;
    rep.within = rep.ratio <= rep.c_hi * rep.upper;
    return rep;
}

GrowthFit growth_fit_series(const CoefficientSeries& f,
                            const std::vector<double>& x_grid) {
    if (x_grid.size() < 5)
        throw std::invalid_argument("growth_fit: need at least 5 grid points");
    for (size_t i = 0; i < x_grid.size(); ++i) {
        if (x_grid[i] <= std::exp(1.0))
            throw std::invalid_argument("growth_fit: grid points must exceed e");
        if (i > 0 && x_grid[i] <= x_grid[i - 1])
            throw std::invalid_argument("growth_fit: grid must increase");
        if (x_grid[i] > static_cast<double>(f.length()))
            throw std::invalid_argument("growth_fit: grid exceeds the series length");
    }
    GrowthFit fit;
    for (double x : x_grid) {
        double s1 = std::abs(log_mean(f, x));
        if (s1 <= 0.0)
            throw std::invalid_argument("growth_fit: |S_1(x)| vanished on the grid");
        fit.points.emplace_back(std::log(std::log(x)), std::log(s1));
    }
    double n = static_cast<double>(fit.points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [px, py] : fit.points) {
        sx += px;
        sy += py;
        sxx += px * px;
        sxy += px * py;
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("growth_fit: degenerate grid");
    fit.slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (auto [px, py] : fit.points) {
        double r = py - (fit.slope * px + intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

GrowthFit growth_fit_sharp(unsigned k, const std::vector<double>& x_grid) {
    if (x_grid.empty()) throw std::invalid_argument("growth_fit: empty grid");
    size_t N = static_cast<size_t>(std::floor(x_grid.back()));
    CoefficientSeries f = sharp_example_coeffs(k, N);
    return growth_fit_series(f, x_grid);
}

}  // namespace lps
