#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include <Eigen/Dense>

#include "hankel_fft.hpp"
#include "quadrature.hpp"
#include "szego/symbol.hpp"

namespace szego {

// Truncated H* H on the analytic side. Indices n < n0 (analytic) and 1 <= m <= n0
// (anti-analytic) are exact; beyond them each singularity j carries a channel
// psi_n = conj(chi_j)^n phi_j(n), xi_{-m} = chi_j^m eta_j(m) driven by the model
// gamma_{-q} ~ a_j chi_j^q / (q + alpha_j).
class FarFieldSolver {
public:
    struct State {
        Eigen::VectorXcd near;
        std::vector<Eigen::VectorXcd> far;
    };

    FarFieldSolver(const FHSymbol &symbol, long N, long n0, long W);
    ~FarFieldSolver();

    long n0() const { return n0_; }
    // gamma_{-q}, 0 <= q <= N + 2 n0
    cplx gamma_neg(long q) const { return gamma_[q]; }

    // pi_+(conj(Phi_N) a) for a supported on [0, a.size())
    State source(const std::vector<cplx> &a) const;
    State apply_hh(const State &s) const;
    // pi_-(Phi_N c) restricted to u = 0..umax read back as d_u
    std::vector<cplx> project_back(const State &c, long umax) const;
    double norm(const State &s) const;
    State zero() const;
    static void add(State &acc, const State &s);

private:
    struct Anti {
        Eigen::VectorXcd near;
        std::vector<Eigen::VectorXcd> far;
    };
    Anti apply_H(const State &s) const;
    State apply_Hs(const Anti &s) const;

    struct Channel {
        cplx a, chi;
        double alpha;
        Eigen::MatrixXd Knf; // kappa(N+1+m+x_i), m = 1..n0
        Eigen::MatrixXd Kfn; // kappa(N+1+n+y_l), n = 0..n0-1
        Eigen::MatrixXd Kff; // kappa(N+1+x_i+y_l)
        Eigen::VectorXcd pow_m; // chi^m, m = 0..n0 + N + 1
    };

    long N_, n0_;
    std::vector<cplx> gamma_;
    std::vector<Channel> ch_;
    detail::LogGrid xg_, yg_;
    Eigen::VectorXd xw_, yw_;
    std::unique_ptr<detail::HankelFft> fwd_, adj_;
    mutable std::mutex mu_;
};

} // namespace szego
