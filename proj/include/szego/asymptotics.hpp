#pragma once

#include <optional>
#include <string>
#include <vector>

#include "szego/symbol.hpp"

namespace szego {

enum class Regime { interior_x, small_k_over_N, special_predizero, large_k, regular_symbol };

std::string to_string(Regime r);

struct AsymptoticPrediction {
    cplx value;
    double leading_exponent = 0.0;
    double claimed_error_order = 0.0;
    Regime regime = Regime::interior_x;
    long N = 0; // 0 when the prediction has no order
    long k = 0;
    // sum over the leading set of |term|; scale for oscillating predictions
    double envelope = 0.0;
};

struct LeadingConstants {
    std::vector<cplx> K;          // j < m
    std::vector<cplx> c1_inverse; // j < m, normalized so that beta_0 = 1
    std::vector<cplx> H;          // j < M
    std::vector<cplx> phase_ratio;

    static LeadingConstants of(const FHSymbol &symbol);
};

// c1 / c1(0); the normalization beta_0 = 1
cplx normalized_c1(const RationalRegularPart &regular, cplx z);

AsymptoticPrediction beta_asymptotic(const FHSymbol &symbol, long k);
// gamma_{-k}
AsymptoticPrediction gamma_asymptotic(const FHSymbol &symbol, long k);
AsymptoticPrediction entry_asymptotic(const FHSymbol &symbol, long N, long k);

struct GegenbauerPrediction {
    AsymptoticPrediction closed_form;      // K cos(k theta0 + omega) k^{alpha-1} (1-k/N)^alpha / Gamma(alpha)
    AsymptoticPrediction specialized; // entry_asymptotic on the two-factor symbol
    double omega = 0.0;
    cplx K;
};

GegenbauerPrediction gegenbauer_asymptotic(double alpha, double theta0,
                                           const RationalRegularPart &regular, long N, long k);

// beta_k / beta_0 from the series
AsymptoticPrediction small_k_entry(const FHSymbol &symbol, long N, long k);

// singularity at theta = 0 with |1 - e^{i theta}|^{2 alpha} c
FHSymbol predizero_symbol(double alpha, const RationalRegularPart &regular);
// prediction of (T_N^{-1})_{[Nx]+1,1} itself
AsymptoticPrediction predizero_special(double alpha, const RationalRegularPart &regular, long N,
                                       double x);

// Exact T^{-1} entry (k, 0) rescaled to the beta_0 = 1 normalization:
// conj(first_column[k]) / beta_0^2.
cplx normalized_entry(const std::vector<cplx> &first_column, long k, double beta0);

struct ComparisonRecord {
    Regime regime;
    long N = 0;
    long k = 0;
    double x = 0.0;
    cplx exact;
    cplx predicted;
    std::optional<cplx> ratio; // empty when undefined
    double abs_err = 0.0;
    double normalized_err = 0.0;
};

ComparisonRecord compare(cplx exact, const AsymptoticPrediction &prediction);

void write_comparison_csv(const std::string &path, const std::vector<ComparisonRecord> &rows);

} // namespace szego
