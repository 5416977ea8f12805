#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace szego {

using cplx = std::complex<double>;

// Truncated doubly indexed coefficient sequence c(min_index) .. c(max_index).
// tail_exponent is the claimed decay |c(u)| = O(|u|^tail_exponent); -inf means
// geometric decay.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(long min_index, std::vector<cplx> coeffs, double tail_exponent = 0.0);

    static LaurentSeries zeros(long min_index, long max_index, double tail_exponent = 0.0);
    static LaurentSeries delta(long index);

    long min_index() const { return min_; }
    long max_index() const { return min_ + static_cast<long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    bool empty() const { return c_.empty(); }
    double tail_exponent() const { return tail_; }
    void set_tail_exponent(double t) { tail_ = t; }

    bool is_analytic() const { return !empty() && min_ == 0; }
    bool is_anti_analytic() const { return !empty() && max_index() < 0; }

    // zero outside the stored window
    cplx operator[](long u) const;
    cplx &at(long u);

    const std::vector<cplx> &coeffs() const { return c_; }
    std::vector<cplx> &coeffs() { return c_; }

    // sum |c(u)|^2 over |u| <= radius
    double energy(long radius) const;

private:
    long min_ = 0;
    std::vector<cplx> c_;
    double tail_ = 0.0;
};

// (a * b)(u) for u in [lo, hi], exact on the stored coefficients.
LaurentSeries convolve(const LaurentSeries &a, const LaurentSeries &b, long lo, long hi);

double max_abs_diff(const LaurentSeries &a, const LaurentSeries &b);

} // namespace szego
