#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "szego/symbol.hpp"

namespace szego {

// T_N(f) of order N + 1, stored by its first row: (T)_{i,j} = fhat(j - i), 0-based.
struct ToeplitzSystem {
    long N = 0;
    std::vector<cplx> first_row;
    FHSymbol symbol;
    long L = 0;

    cplx entry(long i, long j) const;
    Eigen::MatrixXcd dense() const;
};

// First column x of T^{-1}; external reports use k = 0..N for (T^{-1})_{k+1,1}.
struct PredictorPolynomial {
    long N = 0;
    std::vector<cplx> first_column;
    std::vector<cplx> reflection;       // rho_1 .. rho_N
    std::vector<double> error_sequence;  // sigma_0 .. sigma_N
    double prediction_error = 0.0;      // 1 / first_column[0]
    bool ill_conditioned = false;

    cplx phi_star(long k) const { return first_column[k] / first_column[0]; }
    std::vector<cplx> normalized() const;
};

ToeplitzSystem build_system(const FHSymbol &symbol, long N, long L, unsigned threads = 1);
ToeplitzSystem build_system(const FHSymbol &symbol, long N);
ToeplitzSystem system_from_row(std::vector<cplx> first_row);

PredictorPolynomial levinson_first_column(const ToeplitzSystem &sys);

Eigen::MatrixXcd dense_inverse_oracle(const ToeplitzSystem &sys);

// (T^{-1})_{k, N} for k = 0..N
std::vector<cplx> last_column_from_first(const PredictorPolynomial &pred);

// coefficients of Phi_N, ascending; Phi_N[k] = conj(phi*_{N-k})
std::vector<cplx> szego_polynomial(const PredictorPolynomial &pred);
// applies the reversal map to any coefficient list
std::vector<cplx> reverse_conjugate(const std::vector<cplx> &coeffs);

// last column normalized by its last entry
std::vector<cplx> predictor_from_last_column(const std::vector<cplx> &last_column);

// roots of Phi_N
std::vector<cplx> szego_zeros(const PredictorPolynomial &pred);

void write_first_column_csv(const std::string &path, const PredictorPolynomial &pred);

} // namespace szego
