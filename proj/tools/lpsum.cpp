// lpsum: partial sums of L-functions -- zero scans, counting-formula and
// zero-density reports, Dedekind coefficient tables, logarithmic mean-value
// bounds, mollifier diagnostics.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure
// (boundary-zero exhaustion / quadrature stall), 4 internal invariant breach.

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "lps/dirichletpoly.hpp"
#include "lps/errors.hpp"
#include "lps/halasz.hpp"
#include "lps/mollifier.hpp"
#include "lps/multcore.hpp"
#include "lps/numberfield.hpp"
#include "lps/parallel.hpp"
#include "lps/specjson.hpp"
#include "lps/version.hpp"
#include "lps/zeroengine.hpp"

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 17 significant digits: guaranteed round-trip for doubles
std::string f17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json load_spec(const std::string& spec, const json& fallback) {
    if (spec.empty()) {
        if (fallback.is_null()) throw ConfigError("--spec is required for this command");
        return fallback;
    }
    try {
        if (!spec.empty() && (spec.front() == '{' || spec.front() == '['))
            return json::parse(spec);
        std::ifstream in(spec);
        if (!in) throw ConfigError("cannot open spec file: " + spec);
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("spec JSON parse error: ") + e.what());
    }
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + out_path);
    out << content;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json zero_to_json(const lps::ZeroRecord& z) {
    json j;
    j["beta"] = z.beta;
    j["gamma"] = z.gamma;
    j["residual"] = z.residual;
    j["iterations"] = z.iterations;
    if (z.multiplicity != 1) j["multiplicity"] = z.multiplicity;
    return j;
}

struct Common {
    std::string spec;
    std::string out;
    std::string format = "json";
    double T = 0.0;
    long long N = 0;
    long long X = 0;
    long long Y = 0;
    double k = 1.0;
    std::vector<double> sigma;
    double tol = 1e-10;
    unsigned threads = 0;
    uint64_t seed = 12345;
};

json base_config(const Common& c, const json& spec_json) {
    // --threads intentionally omitted: outputs are identical across worker
    // counts and the echoed config identifies the run
    json cfg;
    cfg["spec"] = spec_json;
    cfg["format"] = c.format;
    return cfg;
}

void require_json_format(const Common& c, const char* cmd) {
    if (c.format == "csv")
        throw ConfigError(std::string(cmd) + ": emits JSON only, csv is not supported");
}

int cmd_zeros(const Common& c) {
    json spec = load_spec(c.spec, json{{"type", "zeta"}});
    long long N = c.N > 0 ? c.N : 100;
    if (c.T <= 0.0) throw ConfigError("zeros: need --T > 0");
    if (N < 1) throw ConfigError("zeros: need --N >= 1");
    lps::DirichletPolynomial P(lps::series_from_json(spec, static_cast<size_t>(N)));
    double B = P.strip_bound(0.1);
    auto zeros = lps::locate_zeros(P, lps::RectangleRegion(-B, B, 0.0, c.T), c.tol);

    json cfg = base_config(c, spec);
    cfg["N"] = N;
    cfg["T"] = c.T;
    cfg["tol"] = c.tol;
    if (c.format == "csv") {
        std::ostringstream os;
        os << "# lpsum zeros v" << lps::kVersion << "\n";
        os << "# config: " << cfg.dump() << "\n";
        os << "beta,gamma,residual,iterations\n";
        for (const auto& z : zeros)
            os << f17(z.beta) << "," << f17(z.gamma) << "," << f17(z.residual)
               << "," << z.iterations << "\n";
        write_output(c.out, os.str());
    } else {
        json j;
        j["version"] = lps::kVersion;
        j["config"] = cfg;
        j["strip_bound"] = B;
        j["zeros"] = json::array();
        for (const auto& z : zeros) j["zeros"].push_back(zero_to_json(z));
        write_output(c.out, dump_json(j));
    }
    std::cerr << "zeros: count=" << zeros.size() << " strip_bound=" << B << "\n";
    return 0;
}

int cmd_count(const Common& c) {
    require_json_format(c, "count");
    json spec = load_spec(c.spec, json{{"type", "zeta"}});
    long long N = c.N > 0 ? c.N : 100;
    if (c.T <= 0.0) throw ConfigError("count: need --T > 0");
    lps::DirichletPolynomial P(lps::series_from_json(spec, static_cast<size_t>(N)));
    auto res = lps::counting_residual(P, c.T);

    json cfg = base_config(c, spec);
    cfg["N"] = N;
    cfg["T"] = c.T;
    json j;
    j["version"] = lps::kVersion;
    j["config"] = cfg;
    j["NT"] = res.NT;
    j["formula"] = res.formula;
    j["residual"] = res.residual;
    j["EN"] = res.EN;
    j["M"] = res.M;
    j["strip_bound"] = res.strip;
    write_output(c.out, dump_json(j));
    return 0;
}

int cmd_density(const Common& c) {
    require_json_format(c, "density");
    json spec = load_spec(c.spec, json{{"type", "zeta"}});
    long long N = c.N > 0 ? c.N : 100;
    if (c.T <= 0.0) throw ConfigError("density: need --T > 0");
    if (c.sigma.empty()) throw ConfigError("density: need at least one --sigma");
    lps::DirichletPolynomial P(lps::series_from_json(spec, static_cast<size_t>(N)));
    double B = P.strip_bound(0.1);
    auto zeros = lps::locate_zeros(P, lps::RectangleRegion(-B, B, 0.0, c.T), c.tol);
    std::vector<double> grid = c.sigma;
    std::sort(grid.begin(), grid.end());

    json cfg = base_config(c, spec);
    cfg["N"] = N;
    cfg["T"] = c.T;
    cfg["sigma"] = grid;
    cfg["tol"] = c.tol;
    json j;
    j["version"] = lps::kVersion;
    j["config"] = cfg;
    j["NT"] = zeros.size();
    j["rows"] = json::array();
    for (double s : grid)
        j["rows"].push_back({{"sigma", s}, {"count", lps::zero_density(zeros, s)}});
    write_output(c.out, dump_json(j));
    return 0;
}

int cmd_dedekind(const Common& c) {
    json spec = load_spec(c.spec, json());
    long long N = c.N > 0 ? c.N : 100;
    auto field = lps::field_from_json(spec);
    auto a = lps::nf::dedekind_coeffs_int(field, static_cast<size_t>(N));
    long long A = 0;
    for (long long n = 1; n <= N; ++n)
        if (a[static_cast<size_t>(n)] != 0) ++A;

    json cfg = base_config(c, spec);
    cfg["N"] = N;
    if (c.format == "csv") {
        std::ostringstream os;
        os << "# lpsum dedekind v" << lps::kVersion << "\n";
        os << "# config: " << cfg.dump() << "\n";
        os << "n,a\n";
        for (long long n = 1; n <= N; ++n)
            os << n << "," << a[static_cast<size_t>(n)] << "\n";
        write_output(c.out, os.str());
    } else {
        json j;
        j["version"] = lps::kVersion;
        j["config"] = cfg;
        j["A"] = A;
        j["a"] = std::vector<long long>(a.begin() + 1, a.end());
        write_output(c.out, dump_json(j));
    }
    std::cerr << "dedekind: " << field.label << " A(" << N << ")=" << A << "\n";
    return 0;
}

int cmd_halasz(const Common& c) {
    require_json_format(c, "halasz");
    json spec = load_spec(c.spec, json{{"type", "zeta"}});
    long long x = c.X > 0 ? c.X : (c.N > 0 ? c.N : 1000);
    if (x < 3) throw ConfigError("halasz: need --X >= 3");
    auto f = lps::series_from_json(spec, static_cast<size_t>(x));
    lps::M1Params params;
    params.k_class = c.k;
    auto rep = lps::halasz_bound(f, static_cast<double>(x), c.k, params);

    // companion estimate at sigma = 1 + 2/log x (inside the valid range)
    double logx = std::log(static_cast<double>(x));
    double sigma = std::min(2.0, 1.0 + 2.0 / logx);
    auto F = lps::make_series_evaluator(f);
    double F_abs = std::abs(F(lps::cplx(sigma, 0.0)));
    double f1b = lps::f1_estimate_bound(F_abs, sigma, static_cast<double>(x), c.k);

    json cfg = base_config(c, spec);
    cfg["x"] = x;
    cfg["k"] = c.k;
    json j;
    j["version"] = lps::kVersion;
    j["config"] = cfg;
    j["bound_report"] = {{"x", rep.x},
                         {"k", rep.k},
                         {"lhs", rep.lhs},
                         {"rhs", rep.rhs},
                         {"ratio", rep.ratio},
                         {"tail_bound", rep.tail_bound},
                         {"params",
                          {{"K_trunc", rep.params.K_trunc},
                           {"grid_sigma", rep.params.grid_sigma},
                           {"grid_t", rep.params.grid_t},
                           {"series_cutoff", rep.params.series_cutoff},
                           {"alpha_nodes", rep.alpha_nodes}}}};
    j["f1_estimate"] = {{"sigma", sigma}, {"F_abs", F_abs}, {"value", f1b}};
    write_output(c.out, dump_json(j));
    return 0;
}

int cmd_zerofree(const Common& c) {
    require_json_format(c, "zerofree");
    json spec = load_spec(c.spec, json{{"type", "zeta"}});
    long long N = c.N > 0 ? c.N : 0;
    if (N < 16) throw ConfigError("zerofree: need --N >= 16 (loglog N margin)");
    if (c.T <= 0.0) throw ConfigError("zerofree: need --T > 0");
    lps::DirichletPolynomial P(lps::series_from_json(spec, static_cast<size_t>(N)));
    double logN = std::log(static_cast<double>(N));
    double sigma_star = 1.0 + (4.0 * c.k / kPi - 1.0) * std::log(logN) / logN;
    double B = P.strip_bound(0.1);
    long found = 0;
    if (sigma_star < B)
        found = lps::count_upto(P, c.T, {sigma_star, B});

    json cfg = base_config(c, spec);
    cfg["N"] = N;
    cfg["k"] = c.k;
    cfg["T"] = c.T;
    json j;
    j["version"] = lps::kVersion;
    j["config"] = cfg;
    j["sigma_star"] = sigma_star;
    j["strip_bound"] = B;
    j["zeros_found"] = found;
    j["T"] = c.T;
    write_output(c.out, dump_json(j));
    return 0;
}

int cmd_sharp_fit(const Common& c) {
    require_json_format(c, "sharp-fit");
    long long N = c.N > 0 ? c.N : 1000000;
    if (N < 10000) throw ConfigError("sharp-fit: need --N >= 10000");
    unsigned k = static_cast<unsigned>(c.k);
    if (k < 1) throw ConfigError("sharp-fit: need --k >= 1");
    int npts = 8;
    std::vector<double> grid(npts);
    double lo = std::log(1000.0), hi = std::log(static_cast<double>(N));
    for (int i = 0; i < npts; ++i)
        grid[i] = std::exp(lo + (hi - lo) * i / (npts - 1));
    grid.front() = 1000.0;
    grid.back() = static_cast<double>(N);   // exp/log round trip can overshoot
    auto fit = lps::growth_fit_sharp(k, grid);

    json cfg;
    cfg["format"] = c.format;
    cfg["N"] = N;
    cfg["k"] = k;
    json j;
    j["version"] = lps::kVersion;
    j["config"] = cfg;
    j["slope"] = fit.slope;
    j["residual"] = fit.residual;
    j["target"] = 2.0 * k / kPi - 1.0;
    j["points"] = json::array();
    for (auto [px, py] : fit.points) j["points"].push_back({px, py});
    write_output(c.out, dump_json(j));
    return 0;
}

int cmd_mollify(const Common& c) {
    require_json_format(c, "mollify");
    json spec = load_spec(c.spec, json());
    auto field = lps::field_from_json(spec);
    long long X = c.X > 0 ? c.X : 10;
    long long Y = c.Y > 0 ? c.Y : X;
    if (c.T <= 0.0) throw ConfigError("mollify: need --T > 0");
    std::vector<double> grid =
        c.sigma.empty() ? std::vector<double>{0.55, 0.6, 0.75, 1.0, 1.25} : c.sigma;

    auto rep = lps::density_shape_check(field, X, c.T, grid);
    auto mp = lps::build_mollified(field, X, Y);
    double lw = lps::littlewood_integrand(mp, 2.0, c.T, 32);

    json cfg = base_config(c, spec);
    cfg["X"] = X;
    cfg["Y"] = Y;
    cfg["T"] = c.T;
    cfg["sigma"] = rep.rows.empty() ? json::array() : [&] {
        json g = json::array();
        for (const auto& row : rep.rows) g.push_back(row.sigma);
        return g;
    }();
    json j;
    j["version"] = lps::kVersion;
    j["config"] = cfg;
    j["field"] = rep.field_label;
    j["X"] = rep.X;
    j["T"] = rep.T;
    j["rows"] = json::array();
    for (const auto& row : rep.rows)
        j["rows"].push_back({{"sigma", row.sigma},
                             {"count", row.count},
                             {"bound", row.bound},
                             {"ratio", row.ratio}});
    j["max_ratio"] = rep.max_ratio;
    j["littlewood"] = {{"sigma0", 2.0}, {"T", c.T}, {"value", lw}};
    write_output(c.out, dump_json(j));
    return 0;
}

int cmd_mvt(const Common& c) {
    require_json_format(c, "mvt");
    double T = c.T > 0.0 ? c.T : 100.0;
    long long len = c.N > 0 ? c.N : 20;
    json j;
    j["version"] = lps::kVersion;
    json cfg;
    cfg["T"] = T;
    cfg["N"] = len;
    j["rows"] = json::array();
    double max_ratio = 0.0;
    if (!c.spec.empty()) {
        json spec = load_spec(c.spec, json());
        auto a = lps::series_from_json(spec, static_cast<size_t>(len));
        auto rep = lps::mvt_check(a, T);
        cfg["spec"] = spec;
        j["rows"].push_back({{"draw", 0},
                             {"deviation", rep.deviation},
                             {"weighted", rep.weighted},
                             {"ratio", rep.ratio}});
        max_ratio = rep.ratio;
    } else {
        cfg["seed"] = c.seed;
        cfg["draws"] = 100;
        std::mt19937_64 rng(c.seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int draw = 0; draw < 100; ++draw) {
            std::vector<lps::cplx> v(static_cast<size_t>(len));
            for (auto& z : v) z = lps::cplx(u(rng), u(rng));
            auto rep = lps::mvt_check(lps::CoefficientSeries(std::move(v)), T);
            j["rows"].push_back({{"draw", draw},
                                 {"deviation", rep.deviation},
                                 {"weighted", rep.weighted},
                                 {"ratio", rep.ratio}});
            max_ratio = std::max(max_ratio, rep.ratio);
        }
    }
    cfg["format"] = c.format;
    j["config"] = cfg;
    j["max_ratio"] = max_ratio;
    write_output(c.out, dump_json(j));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial sums of L-functions: zeros, counts, bounds"};
    app.require_subcommand(1);
    Common c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--spec", c.spec, "function/field spec: JSON file or inline JSON");
        sub->add_option("--out", c.out, "output file (default: stdout)");
        sub->add_option("--format", c.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--T", c.T, "height bound");
        sub->add_option("--N", c.N, "series length");
        sub->add_option("--X", c.X, "partial-sum cutoff / mean-value endpoint");
        sub->add_option("--Y", c.Y, "mollifier cutoff");
        sub->add_option("--k", c.k, "class index k");
        sub->add_option("--sigma", c.sigma, "sigma grid values");
        sub->add_option("--tol", c.tol, "localization tolerance");
        sub->add_option("--threads", c.threads, "worker count (default: hardware)");
        sub->add_option("--seed", c.seed, "seed for randomized property commands");
    };

    auto* s_zeros = app.add_subcommand("zeros", "locate zeros, CSV/JSON export");
    auto* s_count = app.add_subcommand("count", "N(T) and the counting-formula residual");
    auto* s_density = app.add_subcommand("density", "N(sigma, T) per sigma");
    auto* s_dedekind = app.add_subcommand("dedekind", "Dedekind zeta coefficients a(n), A(x)");
    auto* s_halasz = app.add_subcommand("halasz", "logarithmic mean-value bound report");
    auto* s_zerofree = app.add_subcommand("zerofree", "zero-free half-plane verifier");
    auto* s_sharp = app.add_subcommand("sharp-fit", "sharp-example growth exponent fit");
    auto* s_mollify = app.add_subcommand("mollify", "zero-density shape + Littlewood integrand");
    auto* s_mvt = app.add_subcommand("mvt", "mean-value self-test for Dirichlet polynomials");
    for (auto* sub : {s_zeros, s_count, s_density, s_dedekind, s_halasz, s_zerofree,
                      s_sharp, s_mollify, s_mvt})
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    lps::set_threads(c.threads > 0 ? c.threads : std::thread::hardware_concurrency());

    try {
        if (s_zeros->parsed()) return cmd_zeros(c);
        if (s_count->parsed()) return cmd_count(c);
        if (s_density->parsed()) return cmd_density(c);
        if (s_dedekind->parsed()) return cmd_dedekind(c);
        if (s_halasz->parsed()) return cmd_halasz(c);
        if (s_zerofree->parsed()) return cmd_zerofree(c);
        if (s_sharp->parsed()) return cmd_sharp_fit(c);
        if (s_mollify->parsed()) return cmd_mollify(c);
        if (s_mvt->parsed()) return cmd_mvt(c);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const lps::BoundaryZeroError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const lps::QuadratureStallError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const lps::NoZerosError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const lps::InternalError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 4;
    } catch (const std::overflow_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
