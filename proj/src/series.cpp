#include "lps/series.hpp"

#include <stdexcept>

namespace lps {

CoefficientSeries::CoefficientSeries(std::vector<cplx> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.empty())
        throw std::invalid_argument("CoefficientSeries: N must be >= 1");
}

cplx CoefficientSeries::at(size_t n) const {
    if (n < 1 || n > values_.size())
        throw std::out_of_range("CoefficientSeries::at: index out of range");
    return values_[n - 1];
}

void CoefficientSeries::set(size_t n, cplx v) {
    if (n < 1 || n > values_.size())
        throw std::out_of_range("CoefficientSeries::set: index out of range");
    values_[n - 1] = v;
}

bool CoefficientSeries::all_real() const {
    for (const cplx& v : values_)
        if (v.imag() != 0.0) return false;
    return true;
}

CoefficientSeries CoefficientSeries::all_ones(size_t N) {
    return CoefficientSeries(std::vector<cplx>(N, cplx(1.0, 0.0)), "ones");
}

CoefficientSeries CoefficientSeries::unit(size_t N) {
    std::vector<cplx> v(N, cplx(0.0, 0.0));
    v[0] = 1.0;
    return CoefficientSeries(std::move(v), "unit");
}

VonMangoldtSeries::VonMangoldtSeries(std::vector<cplx> values_from_2, size_t N)
    : values_(std::move(values_from_2)), N_(N) {
    if (N_ < 2 || values_.size() != N_ - 1)
        throw std::invalid_argument("VonMangoldtSeries: need values for n = 2..N");
}

cplx VonMangoldtSeries::at(size_t n) const {
    if (n < 2 || n > N_)
        throw std::out_of_range("VonMangoldtSeries::at: index out of range");
    return values_[n - 2];
}

}  // namespace lps
