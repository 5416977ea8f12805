#pragma once

#include <complex>
#include <functional>
#include <thread>
#include <vector>

namespace szego::detail {

// P(a, c, s) = sum_v b^a_v b^c_{v+s} for s in [s_lo, s_hi], b^a the coefficients of (1 - z)^a.
// Closed form (-1)^s Gamma(1+a+c) / (Gamma(1+a+s) Gamma(1+c-s)), generated by recurrence from s = 0.
std::vector<double> pair_sum_sequence(double a, double c, long s_lo, long s_hi);

// sum_{t >= 0} w^t h(t) from h(0), h(1), h(2) (three Euler transform terms), |w| = 1, w != 1
std::complex<double> euler_tail(std::complex<double> w, double h0, double h1, double h2);

// e^{i t}, argument reduced first
std::complex<double> unit(double t);

// calls fn(lo, hi) on contiguous chunks of [0, n)
void parallel_chunks(long n, unsigned threads, const std::function<void(long, long)> &fn);

} // namespace szego::detail
