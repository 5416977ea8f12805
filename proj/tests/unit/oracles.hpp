#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "szego/symbol.hpp"

namespace oracle {

using szego::cplx;
constexpr double pi = std::numbers::pi;

// (1/2pi) int_0^{2pi} h(theta) d theta, split at the singular angles
template <class F>
cplx circle_integral(const szego::FHSymbol &s, F h) {
    std::vector<double> cuts{0.0, 2 * pi};
    for (const auto &f : s.factors())
        cuts.push_back(f.theta);
    std::sort(cuts.begin(), cuts.end());
    boost::math::quadrature::tanh_sinh<double> q;
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] < 1e-14)
            continue;
        re += q.integrate([&](double t) { return h(t).real(); }, cuts[i], cuts[i + 1], 1e-13);
        im += q.integrate([&](double t) { return h(t).imag(); }, cuts[i], cuts[i + 1], 1e-13);
    }
    return {re / (2 * pi), im / (2 * pi)};
}

inline cplx fourier(const szego::FHSymbol &s, long k) {
    return circle_integral(s, [&](double t) {
        return szego::eval_symbol(s, t) * std::polar(1.0, -static_cast<double>(k) * t);
    });
}

// Gamma(u + a) / (Gamma(a) Gamma(u + 1)) through log-gamma
inline double gamma_ratio(double a, long u) {
    double sign = std::tgamma(a) < 0 ? -1.0 : 1.0;
    return sign * std::exp(std::lgamma(u + a) - std::lgamma(a) - std::lgamma(u + 1.0));
}

// Fourier coefficients of (2 + 2 cos theta)^alpha
inline double fhat_at_pi(double alpha, long k) {
    if (k < 0)
        k = -k;
    if (k == 0)
        return std::tgamma(2 * alpha + 1) / std::pow(std::tgamma(alpha + 1), 2);
    // 1 / Gamma(1 - x) = Gamma(x) sin(pi x) / pi with x = k - alpha
    double x = static_cast<double>(k) - alpha;
    return std::exp(std::lgamma(2 * alpha + 1) - std::lgamma(alpha + k + 1.0) + std::lgamma(x)) *
           std::sin(pi * x) / pi;
}

// gamma_u of (1 + z)^alpha / (1 + 1/z)^alpha = e^{i alpha theta} on (-pi, pi)
inline double phase_at_pi(double alpha, long u) {
    double d = alpha - static_cast<double>(u);
    return std::sin(pi * d) / (pi * d);
}

} // namespace oracle
