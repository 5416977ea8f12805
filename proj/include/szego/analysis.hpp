#pragma once

#include <vector>

#include "szego/asymptotics.hpp"
#include "szego/toeplitz.hpp"

namespace szego {

double beta0_of(const FHSymbol &symbol);

// interior entry asymptotics over k in [ceil(lo N), floor(hi N)]. Errors are normalized by the
// prediction envelope; ratios use only k where |prediction| >= 0.1 envelope.
struct WindowStats {
    double median_ratio = 0.0;
    double max_norm_err = 0.0;
    long ratio_count = 0;
    std::vector<ComparisonRecord> records;
};

WindowStats coef_window(const FHSymbol &symbol, const PredictorPolynomial &pred, double lo, double hi);

// least-squares slope of log y against log x; NaN when some y is not positive
double loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

// each value at most (1 + band) times the previous one
bool nonincreasing_within(const std::vector<double> &v, double band);

// sign changes of values[k - k_lo] on [k_lo, k_hi], ignoring |v| < eps max|v|,
// placed by linear interpolation
std::vector<double> sign_changes(const std::vector<double> &values, long k_lo, double eps = 1e-8);

// zeros of cos(k theta0 + omega) in [k_lo, k_hi]
std::vector<double> cosine_zeros(double theta0, double omega, double k_lo, double k_hi);

// fraction of `a` having a member of `b` within tol
double matched_fraction(const std::vector<double> &a, const std::vector<double> &b, double tol);

// crossings per unit k
double crossing_frequency(const std::vector<double> &crossings);

} // namespace szego
