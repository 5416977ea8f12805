#include "szego/laurent_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace szego {

LaurentSeries::LaurentSeries(long min_index, std::vector<cplx> coeffs, double tail_exponent)
    : min_(min_index), c_(std::move(coeffs)), tail_(tail_exponent) {}

LaurentSeries LaurentSeries::zeros(long min_index, long max_index, double tail_exponent) {
    if (max_index < min_index - 1)
        throw std::invalid_argument("LaurentSeries: max_index < min_index - 1");
    return LaurentSeries(min_index, std::vector<cplx>(max_index - min_index + 1), tail_exponent);
}

LaurentSeries LaurentSeries::delta(long index) {
    return LaurentSeries(index, {cplx(1.0)});
}

cplx LaurentSeries::operator[](long u) const {
    if (u < min_ || u > max_index())
        return 0.0;
    return c_[u - min_];
}

cplx &LaurentSeries::at(long u) {
    if (u < min_ || u > max_index())
        throw std::out_of_range("LaurentSeries index outside stored window");
    return c_[u - min_];
}

double LaurentSeries::energy(long radius) const {
    double e = 0.0;
    long lo = std::max(min_, -radius), hi = std::min(max_index(), radius);
    for (long u = lo; u <= hi; ++u)
        e += std::norm(c_[u - min_]);
    return e;
}

LaurentSeries convolve(const LaurentSeries &a, const LaurentSeries &b, long lo, long hi) {
    LaurentSeries out = LaurentSeries::zeros(lo, hi, std::max(a.tail_exponent(), b.tail_exponent()));
    if (a.empty() || b.empty())
        return out;
    for (long u = lo; u <= hi; ++u) {
        // a(v) b(u - v), v ascending
        long vlo = std::max(a.min_index(), u - b.max_index());
        long vhi = std::min(a.max_index(), u - b.min_index());
        cplx s = 0.0;
        for (long v = vlo; v <= vhi; ++v)
            s += a[v] * b[u - v];
        out.at(u) = s;
    }
    return out;
}

double max_abs_diff(const LaurentSeries &a, const LaurentSeries &b) {
    long lo = std::min(a.min_index(), b.min_index());
    long hi = std::max(a.max_index(), b.max_index());
    double d = 0.0;
    for (long u = lo; u <= hi; ++u)
        d = std::max(d, std::abs(a[u] - b[u]));
    return d;
}

} // namespace szego
