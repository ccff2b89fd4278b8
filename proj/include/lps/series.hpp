#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lps {

using cplx = std::complex<double>;

// Finite coefficient vector f(1), ..., f(N).  Index 1 maps to values()[0].
// Most of the library assumes the normalization f(1) = 1; operations that
// require it say so and reject other series.
class CoefficientSeries {
public:
    explicit CoefficientSeries(std::vector<cplx> values, std::string label = "");

    size_t length() const { return values_.size(); }
    cplx at(size_t n) const;        // 1-based, throws std::out_of_range
    void set(size_t n, cplx v);
    bool normalized() const { return values_[0] == cplx(1.0, 0.0); }
    bool all_real() const;
    std::span<const cplx> values() const { return values_; }
    const std::string& label() const { return label_; }

    static CoefficientSeries all_ones(size_t N);
    static CoefficientSeries unit(size_t N);    // [1, 0, 0, ...]

private:
    std::vector<cplx> values_;
    std::string label_;
};

// Lambda_f(n) for n = 2..N; values()[0] corresponds to n = 2.
class VonMangoldtSeries {
public:
    VonMangoldtSeries(std::vector<cplx> values_from_2, size_t N);

    size_t limit() const { return N_; }
    cplx at(size_t n) const;        // n in [2, N]
    std::span<const cplx> values() const { return values_; }

private:
    std::vector<cplx> values_;
    size_t N_;
};

// Compensated (Kahan) accumulator, used wherever a sum's rounding error
// must stay independent of the term count.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

struct KahanSumC {
    KahanSum re, im;
    void add(cplx z) {
        re.add(z.real());
        im.add(z.imag());
    }
    cplx value() const { return {re.value(), im.value()}; }
};

}  // namespace lps
