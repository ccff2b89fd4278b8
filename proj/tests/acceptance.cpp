// Acceptance suite: runs the toolkit's end-to-end criteria and prints one
// pass/fail line per criterion.  Usage:
//   acceptance [--criterion N] [--cli PATH]
// With no --criterion, all twelve run.  --cli is needed by criterion 12.

#include <chrono>
#include <thread>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lps/dirichletpoly.hpp"
#include "lps/halasz.hpp"
#include "lps/mollifier.hpp"
#include "lps/multcore.hpp"
#include "lps/numberfield.hpp"
#include "lps/parallel.hpp"
#include "lps/zeroengine.hpp"

using namespace lps;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
std::string g_cli;

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

DirichletPolynomial zeta_poly(size_t N) {
    return DirichletPolynomial(CoefficientSeries::all_ones(N));
}

// ---------------------------------------------------------------- 1
// exact-zero anchor: zeta_2 on [-1,1] x [0,100]
Check crit1() {
    Check c;
    auto zeros = locate_zeros(zeta_poly(2), RectangleRegion(-1, 1, 0, 100), 1e-10);
    if (zeros.size() != 11) c.fail("expected 11 zeros, got " + std::to_string(zeros.size()));
    for (size_t m = 0; m < zeros.size() && m < 11; ++m) {
        double expect = (2.0 * m + 1.0) * kPi / std::log(2.0);
        if (std::abs(zeros[m].beta) > 1e-10 || std::abs(zeros[m].gamma - expect) > 1e-10)
            c.fail("zero " + std::to_string(m) + " off target");
        if (zeros[m].residual > 1e-10) c.fail("residual above tol");
    }
    return c;
}

// ---------------------------------------------------------------- 2
// counting formula for zeta_N: |N(T) - (T/2pi) log N| <= 3 E(N)
Check crit2() {
    Check c;
    double worst = 0.0;
    for (size_t N : {2u, 3u, 5u, 10u, 20u}) {
        auto P = zeta_poly(N);
        for (double T : {50.0, 100.0, 500.0}) {
            auto r = counting_residual(P, T);
            double ratio = std::abs(r.residual) / (3.0 * double(r.EN));
            worst = std::max(worst, ratio);
            if (std::abs(r.residual) > 3.0 * double(r.EN))
                c.fail("N=" + std::to_string(N) + " T=" + fmt(T) + " residual " +
                       fmt(r.residual) + " > 3 E(N)");
        }
    }
    c.note("max |residual|/(3 E(N)) = " + fmt(worst));
    return c;
}

// ---------------------------------------------------------------- 3
// Dedekind counting formula: one constant C <= 10 over all cells
Check crit3() {
    Check c;
    double C = 0.0;
    for (auto [field, n0] : {std::pair{nf::FieldSpec::quadratic(-4), 2},
                             std::pair{nf::FieldSpec::cyclotomic(5), 4}}) {
        for (long long X : {20, 50}) {
            DirichletPolynomial P(nf::dedekind_coeffs(field, size_t(X)));
            for (double T : {100.0, 500.0}) {
                auto r = counting_residual(P, T);
                double shape = double(X) / std::pow(std::log(double(X)), 1.0 - 1.0 / n0);
                C = std::max(C, std::abs(r.residual) / shape);
            }
        }
    }
    c.note("recorded C = " + fmt(C));
    if (C > 10.0) c.fail("constant exceeds 10");
    return c;
}

// ---------------------------------------------------------------- 4
// Dedekind oracle equivalence for Q(i)
Check crit4() {
    Check c;
    const size_t N = 10000;
    auto a = nf::dedekind_coeffs_int(nf::FieldSpec::quadratic(-4), N);
    for (size_t n = 1; n <= N; ++n) {
        long long expect = 0;
        for (size_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            size_t e = n / d;
            auto chi = [](size_t m) { return m % 4 == 1 ? 1 : (m % 4 == 3 ? -1 : 0); };
            expect += chi(d);
            if (e != d) expect += chi(e);
        }
        if (a[n] != expect) {
            c.fail("chi_{-4} divisor sum mismatch at n = " + std::to_string(n));
            break;
        }
    }
    for (long long n = 1; n <= 500; ++n) {
        long long lattice = 0;
        long long r = llround(std::sqrt(double(n))) + 2;
        for (long long x = -r; x <= r; ++x)
            for (long long y = -r; y <= r; ++y)
                if (x * x + y * y == n) ++lattice;
        if (a[size_t(n)] != lattice / 4) {
            c.fail("Gaussian lattice mismatch at n = " + std::to_string(n));
            break;
        }
    }
    return c;
}

// ---------------------------------------------------------------- 5
// C(k) membership for Q(i): passes k=2, fails k=1 at n=5
Check crit5() {
    Check c;
    auto a = nf::dedekind_coeffs(nf::FieldSpec::quadratic(-4), 10000);
    auto lam = lambda_f_from_coeffs(a);
    if (!check_k_bounded(lam, 2.0, 1e-8).empty()) c.fail("violations at k = 2");
    auto rep = check_k_bounded(lam, 1.0, 1e-8);
    bool has5 = false;
    for (const auto& v : rep) has5 = has5 || v.n == 5;
    if (!has5) c.fail("k = 1 report does not contain n = 5");
    c.note("k=1 violations: " + std::to_string(rep.size()));
    return c;
}

// ---------------------------------------------------------------- 6
// mollifier vanishing and divisor bound, exhaustive X, Y <= 50
Check crit6() {
    Check c;
    for (const auto& field : {nf::FieldSpec::rationals(), nf::FieldSpec::quadratic(-4),
                              nf::FieldSpec::cyclotomic(5)}) {
        for (long long X = 2; X <= 50; ++X) {
            for (long long Y = 2; Y <= 50; ++Y) {
                auto mp = build_mollified(field, X, Y);   // construction verifies
                for (long long n = 1; n <= mp.Z; ++n) {
                    if (mp.g_int[size_t(n)] != 0) {
                        c.fail(field.label + " X=" + std::to_string(X) +
                               " Y=" + std::to_string(Y) + ": g(" + std::to_string(n) +
                               ") != 0");
                        return c;
                    }
                }
                for (size_t n = 1; n < mp.g_int.size(); ++n) {
                    if (std::llabs(mp.g_int[n]) > mp.divisor_int[n]) {
                        c.fail("divisor bound broken at n = " + std::to_string(n));
                        return c;
                    }
                }
            }
        }
    }
    return c;
}

// ---------------------------------------------------------------- 7
// zero-free region for zeta_N up to T = 1000
Check crit7() {
    Check c;
    for (size_t N : {100u, 1000u, 10000u}) {
        auto P = zeta_poly(N);
        double logN = std::log(double(N));
        double sigma_star = 1.0 + (4.0 / kPi - 1.0) * std::log(logN) / logN;
        double B = P.strip_bound(0.1);
        long found = count_upto(P, 1000.0, {sigma_star, B});
        if (found != 0)
            c.fail("N=" + std::to_string(N) + ": " + std::to_string(found) +
                   " zeros right of sigma* = " + fmt(sigma_star));
    }
    return c;
}

// ---------------------------------------------------------------- 8
// sharp example: k-boundedness, Fourier anchors, growth exponent
Check crit8() {
    Check c;
    auto prefix = sharp_example_coeffs(1, 10000);
    auto lam = lambda_f_from_coeffs(prefix);
    if (!check_k_bounded(lam, 1.0, 1e-8).empty())
        c.fail("sharp k=1 series violates the C(1) bound below 10^4");

    if (std::abs(fourier_coeffs_b(0).real() + 2.0 / kPi) > 1e-12) c.fail("a_0 != -2/pi");
    if (std::abs(fourier_coeffs_b(1).real() - 2.0 / kPi) > 1e-12) c.fail("a_1 != 2/pi");

    auto fit = growth_fit_sharp(1, {1e3, 1e4, 1e5, 1e6, 1e7});
    double target = 2.0 / kPi - 1.0;
    c.note("slope = " + fmt(fit.slope) + " (target " + fmt(target) + ")");
    if (std::abs(fit.slope - target) > 0.2)
        c.fail("slope " + fmt(fit.slope) + " further than 0.2 from " + fmt(target) +
               ": known red -- |S_1| carries an x^i-phase interference term decaying "
               "only like (log x)^{-0.273}, so the asymptotic exponent is not visible "
               "on a decade grid below 1e7; the S_1 values themselves are verified "
               "against an independent summation (see README, Known results)");
    return c;
}

// ---------------------------------------------------------------- 9
// Halasz bound: one recorded constant across 12 cells
Check crit9() {
    Check c;
    double recorded = 0.0;
    auto run = [&](const CoefficientSeries& f, double k, double x) {
        M1Params p;
        p.k_class = k;
        auto rep = halasz_bound(f, x, k, p);
        recorded = std::max(recorded, rep.ratio);
    };
    for (double x : {100.0, 1000.0, 10000.0}) {
        size_t n = size_t(x);
        run(CoefficientSeries::all_ones(n), 1.0, x);
        run(coeffs_from_multiplicative(moebius_spec(), n), 1.0, x);
        run(nf::dedekind_coeffs(nf::FieldSpec::quadratic(-4), n), 2.0, x);
        run(sharp_example_coeffs(1, n), 1.0, x);
    }
    c.note("recorded constant = " + fmt(recorded));
    if (recorded > 10.0) c.fail("ratio exceeds the pinned envelope 10");
    return c;
}

// ---------------------------------------------------------------- 10
// Montgomery-Vaughan self-test
Check crit10() {
    Check c;
    std::mt19937_64 rng(20260810);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        std::vector<cplx> v(20);
        for (auto& z : v) z = cplx(u(rng), u(rng));
        CoefficientSeries a(v);
        for (double T : {10.0, 100.0}) {
            auto rep = mvt_check(a, T);
            worst = std::max(worst, rep.ratio);
            if (std::abs(rep.deviation) > 3.0 * rep.weighted)
                c.fail("draw " + std::to_string(draw) + " T=" + fmt(T) +
                       " exceeds 3 sum n|a_n|^2");
        }
    }
    c.note("max |dev|/sum n|a_n|^2 = " + fmt(worst));
    return c;
}

// ---------------------------------------------------------------- 11
// zero-density shape: bounded ratio over the matrix
Check crit11() {
    Check c;
    double recorded = 0.0;
    for (const auto& field : {nf::FieldSpec::rationals(), nf::FieldSpec::quadratic(-4)}) {
        for (long long X : {10, 20}) {
            for (double T : {100.0, 200.0}) {
                auto rep = density_shape_check(field, X, T, {0.55, 0.6, 0.75, 1.0, 1.25});
                recorded = std::max(recorded, rep.max_ratio);
            }
        }
    }
    c.note("recorded constant = " + fmt(recorded));
    if (recorded > 1.0) c.fail("density ratio exceeds the pinned envelope 1.0");
    return c;
}

// ---------------------------------------------------------------- 12
// CLI determinism across thread counts
Check crit12() {
    Check c;
    if (g_cli.empty()) {
        c.fail("--cli PATH required for criterion 12");
        return c;
    }
    auto dir = fs::temp_directory_path() / "lps_acceptance";
    fs::create_directories(dir);
    auto read_file = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::vector<std::pair<std::string, std::string>> cases = {
        {"zeros --N 5 --T 30 --format csv", "zeros_csv"},
        {"zeros --N 5 --T 30 --format json", "zeros_json"},
        {"count --N 5 --T 30", "count"},
        {"density --N 5 --T 30 --sigma 0.5 --sigma -0.5 --sigma 0.0", "density"},
        {"dedekind --spec '{\"type\":\"quadratic\",\"disc\":-4}' --N 300", "dedekind"},
        {"halasz --X 150 --k 1", "halasz"},
        {"zerofree --N 64 --k 1 --T 50", "zerofree"},
        {"sharp-fit --k 1 --N 20000", "sharp"},
        {"mollify --spec '{\"type\":\"rational\"}' --X 8 --Y 8 --T 30", "mollify"},
        {"mvt --T 10 --seed 11", "mvt"},
    };
    for (const auto& [args, name] : cases) {
        fs::path f1 = dir / (name + "_t1.out");
        fs::path f8 = dir / (name + "_t8.out");
        std::string base = g_cli + " " + args;
        int r1 = std::system(
            (base + " --threads 1 --out " + f1.string() + " >/dev/null 2>&1").c_str());
        int r8 = std::system(
            (base + " --threads 8 --out " + f8.string() + " >/dev/null 2>&1").c_str());
        if (r1 != 0 || r8 != 0) {
            c.fail(name + ": nonzero exit");
            continue;
        }
        auto b1 = read_file(f1), b8 = read_file(f8);
        if (b1.empty() || b1 != b8) c.fail(name + ": outputs differ across thread counts");
    }
    return c;
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Check()> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--cli") && i + 1 < argc) g_cli = argv[++i];
    }
    set_threads(std::thread::hardware_concurrency());
    if (g_cli.empty()) {
#ifdef LPSUM_BIN
        g_cli = LPSUM_BIN;
#endif
    }

    std::vector<Criterion> criteria = {
        {1, "exact-zero anchor (zeta_2, 11 zeros to 1e-10)", 1.0, crit1},
        {2, "counting formula for zeta_N within 3 E(N)", 120.0, crit2},
        {3, "Dedekind counting formula, constant <= 10", 600.0, crit3},
        {4, "Dedekind coefficient oracle equivalence", 10.0, crit4},
        {5, "C(k) membership: Q(i) passes k=2, fails k=1 at n=5", 60.0, crit5},
        {6, "mollifier vanishing and divisor bound, X,Y <= 50", 5.0, crit6},
        {7, "zero-free region for zeta_N up to T=1000", 300.0, crit7},
        {8, "sharp example: C(1), Fourier anchors, growth slope", 180.0, crit8},
        {9, "Halasz bound, one recorded constant over 12 cells", 600.0, crit9},
        {10, "Montgomery-Vaughan closed-form self-test", 5.0, crit10},
        {11, "zero-density shape, bounded ratio over the matrix", 900.0, crit11},
        {12, "CLI determinism across thread counts", 600.0, crit12},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        if (only != 0 && crit.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = crit.run();
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > crit.budget_seconds)
            c.fail("runtime " + fmt(secs) + " s over budget " + fmt(crit.budget_seconds) + " s");
        std::printf("[%s] criterion %2d (%7.2f s): %s%s%s\n", c.ok ? "PASS" : "FAIL",
                    crit.id, secs, crit.title, c.detail.empty() ? "" : " -- ",
                    c.detail.c_str());
        std::fflush(stdout);
        if (!c.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
