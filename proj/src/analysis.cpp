#include "szego/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace szego {

double beta0_of(const FHSymbol &symbol) { return 1.0 / symbol.regular().c1(0.0).real(); }

WindowStats coef_window(const FHSymbol &symbol, const PredictorPolynomial &pred, double lo, double hi) {
    const long N = pred.N;
    const double b0 = beta0_of(symbol);
    long k0 = std::max<long>(1, static_cast<long>(std::ceil(lo * N)));
    long k1 = std::min<long>(N - 1, static_cast<long>(std::floor(hi * N)));
    WindowStats w;
    std::vector<double> ratios;
    for (long k = k0; k <= k1; ++k) {
        auto p = entry_asymptotic(symbol, N, k);
        cplx exact = normalized_entry(pred.first_column, k, b0);
        auto rec = compare(exact, p);
        double e = p.envelope > 0.0 ? rec.abs_err / p.envelope : rec.abs_err;
        w.max_norm_err = std::max(w.max_norm_err, e);
        if (std::abs(p.value) >= 0.1 * p.envelope && rec.ratio)
            ratios.push_back(std::abs(*rec.ratio));
        w.records.push_back(rec);
    }
    w.ratio_count = static_cast<long>(ratios.size());
    if (!ratios.empty()) {
        std::sort(ratios.begin(), ratios.end());
        std::size_t n = ratios.size();
        w.median_ratio = n % 2 ? ratios[n / 2] : 0.5 * (ratios[n / 2 - 1] + ratios[n / 2]);
    }
    return w;
}

double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    const std::size_t n = std::min(x.size(), y.size());
    if (n < 2)
        return NAN;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(y[i] > 0.0) || !(x[i] > 0.0) || !std::isfinite(y[i]))
            return NAN;
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool nonincreasing_within(const std::vector<double> &v, double band) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] <= (1.0 + band) * v[i - 1]))
            return false;
    return true;
}

std::vector<double> sign_changes(const std::vector<double> &values, long k_lo, double eps) {
    double vmax = 0.0;
    for (double v : values)
        vmax = std::max(vmax, std::fabs(v));
    std::vector<double> out;
    long prev = -1;
    for (long i = 0; i < static_cast<long>(values.size()); ++i) {
        if (std::fabs(values[i]) < eps * vmax)
            continue;
        if (prev >= 0 && values[prev] * values[i] < 0.0) {
            double t = values[prev] / (values[prev] - values[i]);
            out.push_back(k_lo + prev + t * (i - prev));
        }
        prev = i;
    }
    return out;
}

std::vector<double> cosine_zeros(double theta0, double omega, double k_lo, double k_hi) {
    const double pi = std::numbers::pi;
    std::vector<double> out;
    double n0 = std::ceil((k_lo * theta0 + omega - pi / 2) / pi);
    for (double n = n0;; n += 1.0) {
        double k = (pi / 2 + n * pi - omega) / theta0;
        if (k > k_hi)
            break;
        if (k >= k_lo)
            out.push_back(k);
    }
    return out;
}

double matched_fraction(const std::vector<double> &a, const std::vector<double> &b, double tol) {
    if (a.empty())
        return 0.0;
    std::vector<double> s = b;
    std::sort(s.begin(), s.end());
    long hits = 0;
    for (double v : a) {
        auto it = std::lower_bound(s.begin(), s.end(), v);
        double d = INFINITY;
        if (it != s.end())
            d = std::min(d, *it - v);
        if (it != s.begin())
            d = std::min(d, v - *(it - 1));
        if (d <= tol + 1e-9)
            ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(a.size());
}

double crossing_frequency(const std::vector<double> &c) {
    if (c.size() < 2)
        return 0.0;
    return static_cast<double>(c.size() - 1) / (c.back() - c.front());
}

} // namespace szego
