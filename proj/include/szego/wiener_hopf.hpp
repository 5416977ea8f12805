#pragma once

#include <memory>
#include <vector>

#include "szego/laurent_series.hpp"
#include "szego/symbol.hpp"

namespace szego {

LaurentSeries project_plus(const LaurentSeries &s);
LaurentSeries project_minus(const LaurentSeries &s);

// Phi_N = (g / conj g) chi^{N+1}
struct HankelOperatorData {
    LaurentSeries phi_series;
    long N = 0;
    long cutoff = 0;
    double norm_estimate = 0.0; // ||H* H|| on the cutoff window
};

HankelOperatorData make_hankel_operator(const FHSymbol &symbol, long N, long cutoff, long L = 0);

// H(psi) = pi_-(Phi psi) on indices [-cutoff, -1]; adjoint: pi_+(conj(Phi) psi) on [0, cutoff]
LaurentSeries hankel_apply(const HankelOperatorData &op, const LaurentSeries &psi, bool adjoint);

// power iteration for ||H* H|| on the truncated window
double estimate_hh_norm(const HankelOperatorData &op, int iterations = 60);

struct NeumannOptions {
    int s_max = 16;
    long cutoff = 0;   // 0: max(4N, 2048)
    long series_len = 0; // gamma inner window; 0: max(8192, 2 cutoff)
};

struct NeumannResult {
    cplx value;
    double tail_estimate = 0.0;
    double contraction_ratio = 0.0;
    std::vector<double> increments; // |change of the value| per added Neumann term
};

class FarFieldSolver;

// Second path to T_N^{-1} entries via the generalized inversion formula.
// Indices below the cutoff are treated exactly; beyond it each singularity
// contributes a smooth channel sampled on a logarithmic quadrature grid.
class NeumannInverter {
public:
    NeumannInverter(const FHSymbol &symbol, long N, NeumannOptions opts = {});
    ~NeumannInverter();
    NeumannInverter(const NeumannInverter &) = delete;
    NeumannInverter &operator=(const NeumannInverter &) = delete;

    // (T^{-1})_{l,k}, 0-based, matrix (T)_{i,j} = fhat(j - i)
    NeumannResult entry(long k, long l) const;
    // (T^{-1})_{l,k} for all l = 0..N
    std::vector<NeumannResult> column(long k) const;

    // H_N(u), u = 0..N
    std::vector<cplx> H_N() const;

    // first term of the formula only: <pi_+(chi^k / conj g), chi^l / conj g>
    cplx leading_term(long k, long l) const;

    long N() const { return N_; }
    long cutoff() const;
    cplx beta(long k) const { return beta_[k]; }

private:
    std::vector<cplx> solve_d(long k, std::vector<double> *increments, double *ratio,
                              double *tail, long l_probe) const;

    FHSymbol symbol_;
    long N_;
    NeumannOptions opts_;
    std::vector<cplx> beta_;
    std::unique_ptr<FarFieldSolver> solver_;
};

NeumannResult neumann_entry(const FHSymbol &symbol, long N, long k, long l, int s_max = 16,
                            long cutoff = 0);

cplx H_N_of_u(const FHSymbol &symbol, long N, long u, int p_max = 16, long n_max = 0);

struct FKernelResult {
    double value = 0.0;           // sum_p s^{2p} F_{p,N}(z), s = sin(pi alpha)/pi
    double weighted = 0.0;        // s^2 * value
    double truncation_error = 0.0;
    double far_field = 0.0;       // contribution of indices beyond n_max
    std::vector<double> terms;    // F_{p,N}(z)
};

FKernelResult F_kernel(long N, double alpha, double z, int p_max = 16, long n_max = 0);

// evaluates several z with one kernel setup
std::vector<FKernelResult> F_kernel_grid(long N, double alpha, const std::vector<double> &z,
                                         int p_max = 16, long n_max = 0);

} // namespace szego
