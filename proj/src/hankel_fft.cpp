#include "hankel_fft.hpp"

#include <cstring>
#include <mutex>
#include <new>
#include <stdexcept>

#include <fftw3.h>

namespace szego::detail {

namespace {
// fftw planning is not thread safe
std::mutex &plan_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

HankelFft::HankelFft(const std::vector<std::complex<double>> &h, std::size_t n_out, std::size_t n_in)
    : n_out_(n_out), n_in_(n_in) {
    if (h.size() < n_out + n_in - 1)
        throw std::invalid_argument("HankelFft: kernel too short");
    size_ = 1;
    while (size_ < n_out + 2 * n_in)
        size_ <<= 1;
    hf_ = reinterpret_cast<std::complex<double> *>(fftw_malloc(sizeof(fftw_complex) * size_));
    buf_ = reinterpret_cast<std::complex<double> *>(fftw_malloc(sizeof(fftw_complex) * size_));
    if (!hf_ || !buf_)
        throw std::bad_alloc();
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fwd_ = fftw_plan_dft_1d(static_cast<int>(size_), reinterpret_cast<fftw_complex *>(buf_),
                                reinterpret_cast<fftw_complex *>(buf_), FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_1d(static_cast<int>(size_), reinterpret_cast<fftw_complex *>(buf_),
                                reinterpret_cast<fftw_complex *>(buf_), FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    std::memset(static_cast<void *>(buf_), 0, sizeof(fftw_complex) * size_);
    for (std::size_t t = 0; t < n_out + n_in - 1; ++t)
        buf_[t] = h[t];
    fftw_execute(static_cast<fftw_plan>(fwd_));
    std::memcpy(static_cast<void *>(hf_), buf_, sizeof(fftw_complex) * size_);
}

HankelFft::~HankelFft() {
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
        fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
    }
    fftw_free(hf_);
    fftw_free(buf_);
}

void HankelFft::apply(const std::complex<double> *x, std::complex<double> *y) {
    // conv(h, reversed x)[m + n_in - 1] = sum_n h[m + n] x[n]
    std::memset(static_cast<void *>(buf_), 0, sizeof(fftw_complex) * size_);
    for (std::size_t n = 0; n < n_in_; ++n)
        buf_[n_in_ - 1 - n] = x[n];
    fftw_execute(static_cast<fftw_plan>(fwd_));
    for (std::size_t i = 0; i < size_; ++i)
        buf_[i] *= hf_[i];
    fftw_execute(static_cast<fftw_plan>(bwd_));
    const double scale = 1.0 / static_cast<double>(size_);
    for (std::size_t m = 0; m < n_out_; ++m)
        y[m] = buf_[m + n_in_ - 1] * scale;
}

} // namespace szego::detail
