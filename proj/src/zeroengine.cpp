#include "lps/zeroengine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include "lps/parallel.hpp"

namespace lps {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_threads(unsigned n) { g_threads.store(n == 0 ? 1 : n); }
unsigned threads() { return g_threads.load(); }

RectangleRegion::RectangleRegion(double slo, double shi, double tlo, double thi)
    : sigma_lo(slo), sigma_hi(shi), t_lo(tlo), t_hi(thi) {
    if (!(slo < shi) || !(tlo < thi))
        throw std::invalid_argument("RectangleRegion: need sigma_lo < sigma_hi, t_lo < t_hi");
}

double RectangleRegion::diameter() const { return std::hypot(width(), height()); }

double default_guard(const DirichletPolynomial& P) {
    return 1e-12 * P.abs_coeff_sum();
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPhaseLimit = kPi / 2.0;
constexpr int kMaxDepth = 46;

double principal(double a) {
    while (a > kPi) a -= 2.0 * kPi;
    while (a <= -kPi) a += 2.0 * kPi;
    return a;
}

// One contour sample.  In the scaled representation (sigma < 0) the stored
// quantities describe G with F = G exp(-s log M); otherwise they describe F.
struct Sample {
    double log_abs;   // log |F|, exact in both representations
    double arg_core;  // principal arg of F (plain) or of G (scaled)
};

struct ContourScan {
    const DirichletPolynomial& P;
    double guard_log;
    double logM;

    // guard rescaling anchors: the n = n0 and n = M terms of the envelope
    double log_f_n0, log_n0, log_f_M, log_abs_sum;

    double min_log_abs = std::numeric_limits<double>::infinity();
    long samples = 0;
    KahanSum total;
    // worst-case accumulated argument noise: each sample's phase is known to
    // about eps * envelope / |F|, which matters on the tiny rectangles of a
    // deep quadrisection where |F| approaches the guard
    double arg_noise = 0.0;

    explicit ContourScan(const DirichletPolynomial& poly, double guard)
        : P(poly), guard_log(std::log(guard)), logM(poly.log_largest_nonzero()) {
        auto v = P.coeffs().values();
        size_t n0 = 1;
        while (v[n0 - 1] == cplx(0.0, 0.0)) ++n0;
        log_f_n0 = std::log(std::abs(v[n0 - 1]));
        log_n0 = std::log(static_cast<double>(n0));
        log_f_M = std::log(std::abs(v[P.largest_nonzero() - 1]));
        log_abs_sum = std::log(P.abs_coeff_sum());
    }

    // The guard is quoted at the natural coefficient scale; away from
    // sigma ~ 0 it is rescaled by the max-term envelope so that "too close
    // to a zero" means the same thing deep in the strip, where |F| itself
    // is astronomically large or small.
    double guard_threshold_log(double sigma) const {
        double env = std::max(log_f_n0 - sigma * log_n0, log_f_M - sigma * logM);
        return guard_log + std::max(0.0, env - log_abs_sum);
    }

    Sample sample(cplx s, bool scaled) {
        ++samples;
        Sample out;
        if (scaled) {
            cplx g = P.eval_scaled(s);
            out.log_abs = -s.real() * logM + std::log(std::abs(g));
            out.arg_core = std::arg(g);
        } else {
            cplx f = P.eval(s);
            out.log_abs = std::log(std::abs(f));
            out.arg_core = std::arg(f);
        }
        min_log_abs = std::min(min_log_abs, out.log_abs);
        if (!(out.log_abs > guard_threshold_log(s.real())))
            throw BoundaryZeroError(s);
        double env = std::max(log_f_n0 - s.real() * log_n0, log_f_M - s.real() * logM) +
                     std::log(static_cast<double>(P.nonzero_count()));
        arg_noise += 2.3e-16 * std::exp(std::min(40.0, env - out.log_abs));
        return out;
    }

    double delta(const Sample& a, const Sample& b, double dt, bool scaled) const {
        double d = principal(b.arg_core - a.arg_core);
        if (scaled) d -= dt * logM;
        return d;
    }

    void refine(cplx sa, const Sample& a, cplx sb, const Sample& b, bool scaled,
                int depth) {
        double dt = sb.imag() - sa.imag();
        bool need_split = scaled && std::abs(dt) * logM >= kPhaseLimit;
        double d = 0.0;
        if (!need_split) {
            d = delta(a, b, dt, scaled);
            need_split = std::abs(d) >= kPhaseLimit;
        }
        if (!need_split) {
            total.add(d);
            return;
        }
        cplx mid = 0.5 * (sa + sb);
        if (depth >= kMaxDepth || mid == sa || mid == sb)
            throw BoundaryZeroError(mid);   // phase cannot be resolved
        Sample m = sample(mid, scaled);
        refine(sa, a, mid, m, scaled, depth + 1);
        refine(mid, m, sb, b, scaled, depth + 1);
    }

    // Straight directed segment, entirely within one half-plane.
    void scan_segment(cplx a, cplx b) {
        bool scaled = std::min(a.real(), b.real()) < 0.0;
        double len = std::abs(b - a);
        bool vertical = a.real() == b.real();
        double h0 = vertical ? std::min(0.5, kPi / (2.0 * (1.0 + std::abs(logM))))
                             : 0.5;
        long n0 = std::max(1L, static_cast<long>(std::ceil(len / h0)));
        Sample prev = sample(a, scaled);
        cplx sprev = a;
        for (long j = 1; j <= n0; ++j) {
            cplx sj = (j == n0) ? b : a + (b - a) * (static_cast<double>(j) / n0);
            Sample cur = sample(sj, scaled);
            refine(sprev, prev, sj, cur, scaled, 0);
            sprev = sj;
            prev = cur;
        }
    }

    // Edge that may span sigma = 0 (horizontal edges); split so each piece
    // lives in one representation.
    void scan_edge(cplx a, cplx b) {
        if ((a.real() < 0.0) != (b.real() < 0.0) && a.real() != b.real() &&
            a.imag() == b.imag()) {
            cplx mid(0.0, a.imag());
            if (mid != a && mid != b) {
                scan_segment(a, mid);
                scan_segment(mid, b);
                return;
            }
        }
        scan_segment(a, b);
    }
};

}  // namespace

WindingResult winding_number(const DirichletPolynomial& P,
                             const RectangleRegion& R, double guard) {
    if (!(guard > 0.0))
        throw std::invalid_argument("winding_number: guard must be positive");
    ContourScan scan(P, guard);
    cplx bl(R.sigma_lo, R.t_lo), br(R.sigma_hi, R.t_lo);
    cplx tr(R.sigma_hi, R.t_hi), tl(R.sigma_lo, R.t_hi);
    scan.scan_edge(bl, br);
    scan.scan_edge(br, tr);
    scan.scan_edge(tr, tl);
    scan.scan_edge(tl, bl);
    double turns = scan.total.value() / (2.0 * kPi);
    double rounded = std::round(turns);
    // 1e-6 plus the tracked phase-noise floor; capped far below one turn
    double int_tol = std::max(1e-6, std::min(0.01, scan.arg_noise / (2.0 * kPi)));
    if (std::abs(turns - rounded) > int_tol)
        throw InternalError("winding_number: non-integer winding " +
                            std::to_string(turns));
    long count = static_cast<long>(rounded);
    if (count < 0)
        throw InternalError("winding_number: negative count for an entire function");
    return {count, std::exp(scan.min_log_abs), scan.samples};
}

namespace {

double rel_residual(const DirichletPolynomial& P, cplx z) {
    double la;
    if (z.real() < 0.0) {
        cplx g = P.eval_scaled(z);
        la = -z.real() * P.log_largest_nonzero() + std::log(std::abs(g));
    } else {
        la = std::log(std::abs(P.eval(z)));
    }
    return std::exp(la - P.log_envelope(z.real()));
}

ZeroRecord newton_polish(const DirichletPolynomial& P, cplx z0, double tol) {
    cplx z = z0;
    double resid = rel_residual(P, z);
    int it = 0;
    double logM = P.log_largest_nonzero();
    while (it < 80) {
        cplx step;
        if (z.real() < 0.0) {
            cplx g = P.eval_scaled(z);
            cplx gp = P.eval_scaled_deriv(z);
            step = -g / (gp - logM * g);
        } else {
            cplx f = P.eval(z);
            cplx fp = P.eval_deriv(z);
            step = -f / fp;
        }
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        if (std::abs(step) > 1.0) step *= 1.0 / std::abs(step);
        z += step;
        ++it;
        resid = rel_residual(P, z);
        if (resid < 0.01 * tol || (resid < tol && std::abs(step) < 10.0 * tol))
            break;
    }
    if (!(resid < tol))
        throw InternalError("locate_zeros: Newton did not reach the residual target");
    return {z.real(), z.imag(), resid, it, 1};
}

struct Locator {
    const DirichletPolynomial& P;
    double tol;
    double guard;

    long winding(const RectangleRegion& r) const {
        return winding_number(P, r, guard).count;
    }

    void recurse(const RectangleRegion& r, long w, std::vector<ZeroRecord>& out,
                 int depth) const {
        if (w == 0) return;
        double diam = r.diameter();
        cplx center(0.5 * (r.sigma_lo + r.sigma_hi), 0.5 * (r.t_lo + r.t_hi));
        if (w == 1 && diam < 10.0 * tol) {
            out.push_back(newton_polish(P, center, tol));
            return;
        }
        if (diam < tol) {
            // unresolved cluster: report the winding multiplicity, honesty
            // over fabricated distinct points
            ZeroRecord rec;
            rec.beta = center.real();
            rec.gamma = center.imag();
            rec.residual = rel_residual(P, center);
            rec.iterations = 0;
            rec.multiplicity = static_cast<int>(w);
            out.push_back(rec);
            return;
        }
        // quadrisection; a cut through a zero is retried with the cut lines
        // shifted by a fraction of the box size
        static constexpr double kJitter[] = {0.0, 1.0 / 32, -1.0 / 32, 1.0 / 16};
        for (double j : kJitter) {
            double sm = r.sigma_lo + (0.5 + j) * r.width();
            double tm = r.t_lo + (0.5 + j) * r.height();
            RectangleRegion q[4] = {
                {r.sigma_lo, sm, r.t_lo, tm},
                {sm, r.sigma_hi, r.t_lo, tm},
                {r.sigma_lo, sm, tm, r.t_hi},
                {sm, r.sigma_hi, tm, r.t_hi},
            };
            long wq[4];
            try {
                long sum = 0;
                for (int i = 0; i < 4; ++i) {
                    wq[i] = winding(q[i]);
                    sum += wq[i];
                }
                if (sum != w)
                    throw InternalError("locate_zeros: child windings do not sum");
                bool parallel = depth == 0 && threads() > 1;
                if (parallel) {
                    std::future<std::vector<ZeroRecord>> futs[4];
                    for (int i = 0; i < 4; ++i)
                        futs[i] = std::async(std::launch::async, [&, i] {
                            std::vector<ZeroRecord> part;
                            recurse(q[i], wq[i], part, depth + 1);
                            return part;
                        });
                    for (int i = 0; i < 4; ++i) {
                        auto part = futs[i].get();
                        out.insert(out.end(), part.begin(), part.end());
                    }
                } else {
                    for (int i = 0; i < 4; ++i) recurse(q[i], wq[i], out, depth + 1);
                }
                return;
            } catch (const BoundaryZeroError&) {
                continue;
            }
        }
        throw BoundaryZeroError(center);
    }
};

RectangleRegion expand(const RectangleRegion& r, double eps) {
    return {r.sigma_lo - eps, r.sigma_hi + eps, r.t_lo - eps, r.t_hi + eps};
}

// The paper's convention N(T) = lim N(T + eps): edges through a zero are
// moved outward, keeping boundary zeros inside.  Schedule eps, 2 eps, 4 eps.
template <typename F>
auto with_outward_retries(const RectangleRegion& R, double eps, F&& f) {
    const double shifts[] = {0.0, eps, 2.0 * eps, 4.0 * eps};
    for (size_t i = 0; i < 4; ++i) {
        try {
            return f(expand(R, shifts[i]));
        } catch (const BoundaryZeroError&) {
            if (i + 1 == 4) throw;
        }
    }
    throw InternalError("unreachable");
}

}  // namespace

std::vector<ZeroRecord> locate_zeros(const DirichletPolynomial& P,
                                     const RectangleRegion& R, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("locate_zeros: tol must be positive");
    Locator loc{P, tol, default_guard(P)};
    std::vector<ZeroRecord> out;
    long w = with_outward_retries(R, tol, [&](const RectangleRegion& r) {
        out.clear();
        long wr = loc.winding(r);
        loc.recurse(r, wr, out, 0);
        return wr;
    });
    long total_mult = 0;
    for (const auto& rec : out) total_mult += rec.multiplicity;
    if (total_mult != w)
        throw InternalError("locate_zeros: located multiplicity != winding count");
    std::sort(out.begin(), out.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        return a.gamma != b.gamma ? a.gamma < b.gamma : a.beta < b.beta;
    });
    // strip-bound sanity check on every localization run
    if (P.coeffs().normalized() && P.largest_nonzero() > 1) {
        double B = P.strip_bound(1e-9);
        for (const auto& rec : out)
            if (std::abs(rec.beta) >= B)
                throw InternalError("locate_zeros: zero outside the certified strip");
    }
    return out;
}

long count_upto(const DirichletPolynomial& P, double T,
                std::pair<double, double> strip) {
    if (!(T > 0.0)) throw std::invalid_argument("count_upto: T must be positive");
    RectangleRegion R(strip.first, strip.second, 0.0, T);
    double guard = default_guard(P);
    return with_outward_retries(R, 1e-9, [&](const RectangleRegion& r) {
        return winding_number(P, r, guard).count;
    });
}

long zero_density(const std::vector<ZeroRecord>& zeros, double sigma) {
    long c = 0;
    for (const auto& z : zeros)
        if (z.beta > sigma) c += z.multiplicity;
    return c;
}

CountingResidual counting_residual(const DirichletPolynomial& P, double T) {
    if (!P.coeffs().normalized())
        throw std::invalid_argument("counting_residual: requires f(1) = 1");
    if (!P.coeffs().all_real())
        throw std::invalid_argument("counting_residual: requires real coefficients");
    CountingResidual out;
    out.strip = P.strip_bound(0.05);   // throws NoZerosError for F == 1
    out.M = P.largest_nonzero();
    out.EN = P.nonzero_count();
    out.NT = count_upto(P, T, {-out.strip, out.strip});
    out.formula = T / (2.0 * kPi) * std::log(static_cast<double>(out.M));
    out.residual = static_cast<double>(out.NT) - out.formula;
    return out;
}

}  // namespace lps
