#include <doctest.h>

#include <cmath>
#include <random>

#include "lps/mollifier.hpp"
#include "lps/numberfield.hpp"
#include "lps/zeroengine.hpp"

using namespace lps;
using nf::FieldSpec;

TEST_CASE("build_mollified: Q with X = Y = 3, direct enumeration") {
    auto mp = build_mollified(FieldSpec::rationals(), 3, 3);
    CHECK(mp.Z == 3);
    for (long long n = 1; n <= 3; ++n) CHECK(mp.g_int[size_t(n)] == 0);
    CHECK(mp.g_int[4] == -1);
    CHECK(mp.g_int[5] == 0);
    CHECK(mp.g_int[6] == -2);
    CHECK(mp.g_int[7] == 0);
    CHECK(mp.g_int[8] == 0);
    CHECK(mp.g_int[9] == -1);
}

TEST_CASE("build_mollified: vanishing below Z and the two-term case") {
    auto qi = build_mollified(FieldSpec::quadratic(-4), 5, 5);
    for (long long n = 1; n <= 5; ++n) CHECK(qi.g_int[size_t(n)] == 0);

    // X = Y = 2: g(4) = mu-by-norm(2) * a(2)
    for (const auto& field :
         {FieldSpec::rationals(), FieldSpec::quadratic(-4), FieldSpec::cyclotomic(5)}) {
        auto mp = build_mollified(field, 2, 2);
        CHECK(mp.g_int[4] == mp.zeta_int[2] * mp.mobius_int[2]);
    }
    CHECK_THROWS_AS(build_mollified(FieldSpec::rationals(), 1, 5), std::invalid_argument);
}

TEST_CASE("mollifier invariants over the small matrix") {
    for (const auto& field :
         {FieldSpec::rationals(), FieldSpec::quadratic(-4), FieldSpec::cyclotomic(5)}) {
        for (long long X : {2, 7, 20}) {
            for (long long Y : {2, 13, 20}) {
                auto mp = build_mollified(field, X, Y);
                for (long long n = 1; n <= mp.Z; ++n)
                    CHECK(mp.g_int[size_t(n)] == 0);
                for (size_t n = 1; n < mp.g_int.size(); ++n)
                    CHECK(std::llabs(mp.g_int[n]) <= mp.divisor_int[n]);
            }
        }
    }
}

TEST_CASE("fK_eval and hK_eval: closed forms and the defining identity") {
    auto mp = build_mollified(FieldSpec::rationals(), 3, 3);
    double expect = -1.0 / 16 - 2.0 / 36 - 1.0 / 81;
    CHECK(fK_eval(mp, cplx(2.0, 0.0)).real() == doctest::Approx(expect).epsilon(1e-14));
    CHECK(std::abs(fK_eval(mp, cplx(40.0, 0.0))) < 1e-12);
    CHECK(hK_eval(mp, cplx(40.0, 0.0)).real() == doctest::Approx(1.0));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> us(0.5, 3.0), ut(-20.0, 20.0);
    auto mp2 = build_mollified(FieldSpec::quadratic(-4), 12, 9);
    for (int i = 0; i < 1000; ++i) {
        cplx s(us(rng), ut(rng));
        cplx f = fK_eval(mp2, s);
        cplx h = hK_eval(mp2, s);
        CHECK(std::abs(h - (1.0 - f * f)) <= 1e-15 * (1.0 + std::abs(h)));
    }
}

TEST_CASE("littlewood_integrand: T = 0, bounded integrand, Riemann-sum oracle") {
    auto mp = build_mollified(FieldSpec::rationals(), 10, 10);
    CHECK(littlewood_integrand(mp, 2.0, 0.0, 16) == 0.0);

    // |f_K| <= 1/2 on sigma = 2 keeps |log|h_K|| <= log(4/3) pointwise
    double val = littlewood_integrand(mp, 2.0, 10.0, 16);
    CHECK(std::abs(val) <= std::log(4.0 / 3.0) * 10.0);

    // independent fine-grid Riemann sum
    const int n = 40000;
    double h = 10.0 / n;
    double riemann = 0.0;
    for (int i = 0; i < n; ++i)
        riemann += std::log(std::abs(hK_eval(mp, cplx(2.0, (i + 0.5) * h)))) * h;
    CHECK(val == doctest::Approx(riemann).epsilon(1e-3));
}

TEST_CASE("density_shape_check: sigma = 2 row is zero, reversal-stable") {
    auto rep = density_shape_check(FieldSpec::rationals(), 12, 40.0, {2.0, 0.6, 1.0});
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].sigma == 0.6);
    CHECK(rep.rows[2].sigma == 2.0);
    CHECK(rep.rows[2].count == 0);
    CHECK(rep.max_ratio >= 0.0);

    auto rev = density_shape_check(FieldSpec::rationals(), 12, 40.0, {1.0, 0.6, 2.0});
    REQUIRE(rev.rows.size() == rep.rows.size());
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(rev.rows[i].sigma == rep.rows[i].sigma);
        CHECK(rev.rows[i].count == rep.rows[i].count);
        CHECK(rev.rows[i].ratio == rep.rows[i].ratio);
    }
}

TEST_CASE("h_K vanishes at the zeros of the partial sum") {
    auto field = FieldSpec::quadratic(-4);
    auto mp = build_mollified(field, 12, 12);
    DirichletPolynomial P{mp.zeta_coeffs()};
    double B = P.strip_bound(0.1);
    auto zeros = locate_zeros(P, RectangleRegion(-B, B, 0, 20), 1e-10);
    CHECK(!zeros.empty());
    DirichletPolynomial M{mp.mobius_coeffs()};
    for (const auto& z : zeros) {
        cplx rho(z.beta, z.gamma);
        // h = ZM (2 - ZM), so |h(rho)| <= |Z||M| (2 + |Z||M|) with Z(rho) ~ 0
        double zm = std::abs(P.eval(rho)) * std::abs(M.eval(rho));
        CHECK(std::abs(hK_eval(mp, rho)) <= zm * (2.0 + zm) + 1e-12);
        CHECK(std::abs(hK_eval(mp, rho)) < 1e-4);
    }
}

TEST_CASE("mvt_check: closed forms") {
    std::vector<cplx> a1 = {cplx(1.0, 0.0)};
    auto rep1 = mvt_check(CoefficientSeries(a1), 37.0);
    CHECK(rep1.lhs == doctest::Approx(37.0).epsilon(1e-15));
    CHECK(rep1.deviation == doctest::Approx(0.0));

    // a = [1, 1/2]: LHS = 1.25 T + sin(T log 2)/log 2
    std::vector<cplx> a2 = {cplx(1.0, 0.0), cplx(0.5, 0.0)};
    for (double T : {10.0, 100.0}) {
        auto rep = mvt_check(CoefficientSeries(a2), T);
        double expect = 1.25 * T + std::sin(T * std::log(2.0)) / std::log(2.0);
        CHECK(rep.lhs == doctest::Approx(expect).epsilon(1e-12));
        CHECK(rep.diagonal == doctest::Approx(1.25));
    }
}

TEST_CASE("mvt_check: random series stay within the 3 sum n|a_n|^2 envelope") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double T : {10.0, 100.0}) {
        for (int draw = 0; draw < 100; ++draw) {
            std::vector<cplx> v(20);
            for (auto& z : v) z = cplx(u(rng), u(rng));
            auto rep = mvt_check(CoefficientSeries(v), T);
            CHECK(std::abs(rep.deviation) <= 3.0 * rep.weighted);
        }
    }
}

TEST_CASE("divisor-by-norm sums: x log x and x (log x)^3 envelopes stay bounded") {
    for (const auto& field :
         {FieldSpec::rationals(), FieldSpec::quadratic(-4), FieldSpec::cyclotomic(5)}) {
        const size_t N = 1000000;
        auto d = nf::divisor_by_norm_int(field, N);
        double sum = 0.0, sum_sq = 0.0;
        size_t checkpoint = 100;
        for (size_t n = 1; n <= N; ++n) {
            sum += double(d[n]);
            sum_sq += double(d[n]) * double(d[n]);
            if (n == checkpoint) {
                double lx = std::log(double(n));
                CHECK(sum / (double(n) * lx) < 4.0);
                CHECK(sum_sq / (double(n) * lx * lx * lx) < 4.0);
                checkpoint *= 10;
            }
        }
    }
}
