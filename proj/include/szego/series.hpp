#pragma once

#include <vector>

#include "szego/laurent_series.hpp"
#include "szego/symbol.hpp"

namespace szego {

// Coefficients of (1 - conj(chi) z)^{sign * alpha}, u = 0..L-1.
LaurentSeries binomial_series(double alpha, cplx chi, int sign, long L);

// Real coefficients of (1 - z)^a, u = 0..L-1.
std::vector<double> binomial_coefficients(double a, long L);

// P/Q as a power series
LaurentSeries c1_series(const RationalRegularPart &regular, long L);
// Q/P as a power series
LaurentSeries c1_inverse_series(const RationalRegularPart &regular, long L);

LaurentSeries g_series(const FHSymbol &symbol, long L);
// beta_k
LaurentSeries g_inv_series(const FHSymbol &symbol, long L);

// gamma_u for u = -L..L, inner sums of length L
LaurentSeries phase_series(const FHSymbol &symbol, long L);

// gamma_u for u in [lo, hi], inner window W
LaurentSeries phase_coefficients(const FHSymbol &symbol, long lo, long hi, long W);

cplx fhat(const FHSymbol &symbol, long k, long L);
// fhat(0..N); threads only splits the k range
std::vector<cplx> fhat_row(const FHSymbol &symbol, long N, long L, unsigned threads = 1);

long default_series_length(long N);

// Throws TruncationError when the regular-part transient at index L is not
// dominated by the power-law tail the series declares.
void check_truncation_budget(const FHSymbol &symbol, long L);

} // namespace szego
