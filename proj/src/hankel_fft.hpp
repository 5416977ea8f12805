#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace szego::detail {

// y[m] = sum_{n < n_in} h[m + n] x[n] for m < n_out, via one FFT correlation.
// Plans are created once; apply() reuses internal buffers (one instance per thread).
class HankelFft {
public:
    HankelFft(const std::vector<std::complex<double>> &h, std::size_t n_out, std::size_t n_in);
    ~HankelFft();
    HankelFft(const HankelFft &) = delete;
    HankelFft &operator=(const HankelFft &) = delete;

    void apply(const std::complex<double> *x, std::complex<double> *y);

private:
    std::size_t n_out_, n_in_, size_;
    std::complex<double> *hf_ = nullptr, *buf_ = nullptr;
    void *fwd_ = nullptr, *bwd_ = nullptr;
};

} // namespace szego::detail
