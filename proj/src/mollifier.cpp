#include "lps/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lps/dirichletpoly.hpp"
#include "lps/errors.hpp"
#include "lps/zeroengine.hpp"

namespace lps {

namespace {
constexpr double kPi = std::numbers::pi;

CoefficientSeries int_series(const std::vector<long long>& v, size_t from1,
                             std::string label) {
    std::vector<cplx> c(v.size() - from1);
    for (size_t i = from1; i < v.size(); ++i)
        c[i - from1] = cplx(static_cast<double>(v[i]), 0.0);
    return CoefficientSeries(std::move(c), std::move(label));
}
}  // namespace

CoefficientSeries MollifiedProduct::zeta_coeffs() const {
    return int_series(zeta_int, 1, "zeta_" + field.label);
}
CoefficientSeries MollifiedProduct::mobius_coeffs() const {
    return int_series(mobius_int, 1, "mu_" + field.label);
}
CoefficientSeries MollifiedProduct::g_coeffs() const {
    return int_series(g_int, 1, "g_" + field.label);
}

MollifiedProduct build_mollified(const nf::FieldSpec& field, long long X,
                                 long long Y) {
    if (X < 2 || Y < 2)
        throw std::invalid_argument("build_mollified: need X, Y >= 2");
    MollifiedProduct mp;
    mp.field = field;
    mp.X = X;
    mp.Y = Y;
    mp.Z = std::min(X, Y);
    size_t XY = static_cast<size_t>(X) * static_cast<size_t>(Y);
    mp.zeta_int = nf::dedekind_coeffs_int(field, static_cast<size_t>(X));
    mp.mobius_int = nf::mobius_by_norm_int(field, static_cast<size_t>(Y));
    mp.divisor_int = nf::divisor_by_norm_int(field, XY);

    // g(n) = sum_{de=n, d<=X, e<=Y} a(d) mu(e), minus the unit
    mp.g_int.assign(XY + 1, 0);
    for (long long d = 1; d <= X; ++d) {
        long long ad = mp.zeta_int[static_cast<size_t>(d)];
        if (ad == 0) continue;
        for (long long e = 1; e <= Y; ++e) {
            long long me = mp.mobius_int[static_cast<size_t>(e)];
            if (me == 0) continue;
            mp.g_int[static_cast<size_t>(d * e)] += ad * me;
        }
    }
    mp.g_int[1] -= 1;

    // construction invariants (integer arithmetic end-to-end)
    for (long long n = 1; n <= mp.Z; ++n)
        if (mp.g_int[static_cast<size_t>(n)] != 0)
            throw InternalError("build_mollified: g(" + std::to_string(n) +
                                ") != 0 below Z");
    for (size_t n = 1; n <= XY; ++n)
        if (std::llabs(mp.g_int[n]) > mp.divisor_int[n])
            throw InternalError("build_mollified: |g(n)| exceeds the divisor bound at n = " +
                                std::to_string(n));
    return mp;
}

cplx fK_eval(const MollifiedProduct& mp, cplx s) {
    KahanSumC sum;
    size_t XY = mp.g_int.size() - 1;
    for (size_t n = static_cast<size_t>(mp.Z) + 1; n <= XY; ++n) {
        if (mp.g_int[n] == 0) continue;
        double L = std::log(static_cast<double>(n));
        double mag = std::exp(-s.real() * L);
        double ph = -s.imag() * L;
        sum.add(static_cast<double>(mp.g_int[n]) *
                cplx(mag * std::cos(ph), mag * std::sin(ph)));
    }
    return sum.value();
}

cplx hK_eval(const MollifiedProduct& mp, cplx s) {
    cplx f = fK_eval(mp, s);
    return 1.0 - f * f;
}

double littlewood_integrand(const MollifiedProduct& mp, double sigma0,
                            double T, int quad_nodes) {
    if (sigma0 < 0.5)
        throw std::invalid_argument("littlewood_integrand: need sigma0 >= 1/2");
    if (T < 0.0) throw std::invalid_argument("littlewood_integrand: need T >= 0");
    if (T == 0.0) return 0.0;
    int n = std::max(8, quad_nodes);
    if (n % 2 == 1) ++n;

    auto integrand = [&](double t) {
        double a = std::abs(hK_eval(mp, cplx(sigma0, t)));
        if (a < 1e-300) {
            // zero of h_K on the line: shift the node, same convention as the
            // rectangle edges
            a = std::abs(hK_eval(mp, cplx(sigma0, t + 1e-9 * (1.0 + std::abs(t)))));
            if (a < 1e-300) return -690.0;   // log floor, reported via stall below
        }
        return std::log(a);
    };

    auto simpson = [&](int nodes) {
        double h = T / nodes;
        KahanSum s;
        s.add(integrand(0.0));
        s.add(integrand(T));
        for (int i = 1; i < nodes; ++i)
            s.add(integrand(i * h) * (i % 2 == 1 ? 4.0 : 2.0));
        return s.value() * h / 3.0;
    };

    double prev = simpson(n);
    for (int pass = 0; pass < 20; ++pass) {
        n *= 2;
        double cur = simpson(n);
        double change = std::abs(cur - prev) / std::max(std::abs(cur), 1e-12);
        if (change < 1e-4) return cur;
        prev = cur;
    }
    throw QuadratureStallError(
        "littlewood_integrand: refinement stalled (zero of h_K on the line?)");
}

DensityReport density_shape_check(const nf::FieldSpec& field, long long X,
                                  double T, std::vector<double> sigma_grid) {
    if (X < 2) throw std::invalid_argument("density_shape_check: need X >= 2");
    if (!(T > 0.0)) throw std::invalid_argument("density_shape_check: need T > 0");
    if (static_cast<double>(X) > T)
        throw std::invalid_argument("density_shape_check: need X <= T");
    for (double s : sigma_grid)
        if (s < 0.5 || s > 2.0)
            throw std::invalid_argument("density_shape_check: sigma grid must lie in [1/2, 2]");
    std::sort(sigma_grid.begin(), sigma_grid.end());   // order-independent report

    DensityReport rep;
    rep.field_label = field.label;
    rep.X = X;
    rep.T = T;

    DirichletPolynomial P(nf::dedekind_coeffs(field, static_cast<size_t>(X)));
    double B = P.strip_bound(0.05);
    auto zeros = locate_zeros(P, RectangleRegion(-B, B, 0.0, T), 1e-8);

    double logT = std::log(T);
    double lt2 = logT * logT;
    double lt5 = lt2 * lt2 * logT;
    for (double sigma : sigma_grid) {
        DensityRow row;
        row.sigma = sigma;
        row.count = zero_density(zeros, sigma);
        row.bound = T * std::pow(static_cast<double>(X), -2.0 * (sigma - 0.5)) * lt5 + lt2;
        row.ratio = static_cast<double>(row.count) / row.bound;
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
        rep.rows.push_back(row);
    }
    return rep;
}

MvtReport mvt_check(const CoefficientSeries& a, double T) {
    if (!(T >= 0.0)) throw std::invalid_argument("mvt_check: need T >= 0");
    MvtReport rep;
    rep.T = T;
    auto v = a.values();
    size_t N = a.length();
    KahanSum diag, weighted;
    for (size_t n = 1; n <= N; ++n) {
        double a2 = std::norm(v[n - 1]);
        diag.add(a2);
        weighted.add(static_cast<double>(n) * a2);
    }
    rep.diagonal = diag.value();
    rep.weighted = weighted.value();

    // off-diagonal closed form:
    // int_0^T e^{-it log(m/n)} dt = (e^{-iT log(m/n)} - 1) / (-i log(m/n))
    KahanSumC off;
    for (size_t m = 1; m <= N; ++m) {
        if (v[m - 1] == cplx(0.0, 0.0)) continue;
        for (size_t n = 1; n <= N; ++n) {
            if (n == m || v[n - 1] == cplx(0.0, 0.0)) continue;
            double L = std::log(static_cast<double>(m) / static_cast<double>(n));
            cplx phase = std::exp(cplx(0.0, -T * L)) - 1.0;
            off.add(v[m - 1] * std::conj(v[n - 1]) * phase / cplx(0.0, -L));
        }
    }
    rep.deviation = (off.value()).real();   // the integral is real
    rep.lhs = T * rep.diagonal + rep.deviation;
    rep.ratio = std::abs(rep.deviation) / std::max(rep.weighted, 1e-300);
    return rep;
}

}  // namespace lps
