#include "far_field.hpp"

#include <cmath>
#include <numbers>

#include "szego/series.hpp"
#include "tails.hpp"

namespace szego {

namespace {

Eigen::VectorXcd rmul(const Eigen::MatrixXd &K, const Eigen::VectorXcd &v) {
    Eigen::VectorXcd r(K.rows());
    r.real() = K * v.real();
    r.imag() = K * v.imag();
    return r;
}

Eigen::VectorXcd rmul_t(const Eigen::MatrixXd &K, const Eigen::VectorXcd &v) {
    Eigen::VectorXcd r(K.cols());
    r.real() = K.transpose() * v.real();
    r.imag() = K.transpose() * v.imag();
    return r;
}

} // namespace

FarFieldSolver::FarFieldSolver(const FHSymbol &symbol, long N, long n0, long W) : N_(N), n0_(n0) {
    const long qmax = N + 2 * n0;
    LaurentSeries g = phase_coefficients(symbol, -qmax, 0, W);
    gamma_.resize(qmax + 1);
    for (long q = 0; q <= qmax; ++q)
        gamma_[q] = g[-q];

    xg_ = detail::log_grid(N + 1 + n0 - 0.5);
    yg_ = detail::log_grid(N + 1 + n0 + 0.5);
    const long Q = static_cast<long>(xg_.X.size());
    xw_ = Eigen::Map<const Eigen::VectorXd>(xg_.w.data(), Q);
    yw_ = Eigen::Map<const Eigen::VectorXd>(yg_.w.data(), Q);

    const auto &fs = symbol.factors();
    const auto &A = symbol.amplitudes();
    for (std::size_t j = 0; j < fs.size(); ++j) {
        Channel c;
        c.a = std::sin(std::numbers::pi * fs[j].alpha) / std::numbers::pi * A[j] / std::conj(A[j]);
        c.chi = fs[j].chi();
        c.alpha = fs[j].alpha;
        c.Knf.resize(n0, Q);
        c.Kfn.resize(n0, Q);
        c.Kff.resize(Q, Q);
        for (long i = 0; i < Q; ++i)
            for (long m = 0; m < n0; ++m) {
                c.Knf(m, i) = 1.0 / (xg_.X[i] + (m + 1) + c.alpha);
                c.Kfn(m, i) = 1.0 / (yg_.X[i] + m + c.alpha);
            }
        for (long l = 0; l < Q; ++l)
            for (long i = 0; i < Q; ++i)
                c.Kff(i, l) = 1.0 / (xg_.X[i] + yg_.X[l] - (N + 1) + c.alpha);
        c.pow_m.resize(n0 + N + 2);
        for (long m = 0; m < n0 + N + 2; ++m)
            c.pow_m[m] = detail::unit(fs[j].theta * static_cast<double>(m));
        ch_.push_back(std::move(c));
    }

    std::vector<cplx> h(2 * n0 - 1), hc(2 * n0 - 1);
    for (long t = 0; t < 2 * n0 - 1; ++t) {
        h[t] = gamma_[N + 2 + t];
        hc[t] = std::conj(h[t]);
    }
    fwd_ = std::make_unique<detail::HankelFft>(h, n0, n0);
    adj_ = std::make_unique<detail::HankelFft>(hc, n0, n0);
}

FarFieldSolver::~FarFieldSolver() = default;

FarFieldSolver::State FarFieldSolver::zero() const {
    State s;
    s.near = Eigen::VectorXcd::Zero(n0_);
    for (std::size_t j = 0; j < ch_.size(); ++j)
        s.far.push_back(Eigen::VectorXcd::Zero(xg_.X.size()));
    return s;
}

void FarFieldSolver::add(State &acc, const State &s) {
    acc.near += s.near;
    for (std::size_t j = 0; j < acc.far.size(); ++j)
        acc.far[j] += s.far[j];
}

double FarFieldSolver::norm(const State &s) const {
    double e = s.near.squaredNorm();
    for (const auto &f : s.far)
        e += (xw_.array() * f.array().abs2()).sum();
    return std::sqrt(e);
}

FarFieldSolver::State FarFieldSolver::source(const std::vector<cplx> &a) const {
    const long k = static_cast<long>(a.size()) - 1;
    State b = zero();
    for (long n = 0; n < n0_; ++n) {
        cplx s = 0.0;
        for (long i = 0; i <= k; ++i)
            s += std::conj(gamma_[N_ + 1 + n - i]) * a[i];
        b.near[n] = s;
    }
    for (std::size_t j = 0; j < ch_.size(); ++j) {
        const auto &c = ch_[j];
        cplx pre = std::conj(c.a) * std::conj(c.pow_m[N_ + 1]);
        for (std::size_t i = 0; i < xg_.X.size(); ++i) {
            cplx s = 0.0;
            for (long t = 0; t <= k; ++t)
                s += a[t] * c.pow_m[t] / (xg_.X[i] - t + c.alpha);
            b.far[j][i] = pre * s;
        }
    }
    return b;
}

FarFieldSolver::Anti FarFieldSolver::apply_H(const State &s) const {
    Anti r;
    r.near.resize(n0_);
    fwd_->apply(s.near.data(), r.near.data());
    for (std::size_t j = 0; j < ch_.size(); ++j) {
        const auto &c = ch_[j];
        Eigen::VectorXcd wphi = xw_.cast<cplx>().cwiseProduct(s.far[j]);
        Eigen::VectorXcd t = rmul(c.Knf, wphi);
        for (long m = 1; m <= n0_; ++m)
            r.near[m - 1] += c.a * c.pow_m[N_ + 1 + m] * t[m - 1];
        Eigen::VectorXcd cpsi = c.pow_m.head(n0_).cwiseProduct(s.near);
        r.far.push_back(c.a * c.pow_m[N_ + 1] * (rmul_t(c.Kfn, cpsi) + rmul_t(c.Kff, wphi)));
    }
    return r;
}

FarFieldSolver::State FarFieldSolver::apply_Hs(const Anti &s) const {
    State r;
    r.near.resize(n0_);
    adj_->apply(s.near.data(), r.near.data());
    for (std::size_t j = 0; j < ch_.size(); ++j) {
        const auto &c = ch_[j];
        Eigen::VectorXcd wy = yw_.cast<cplx>().cwiseProduct(s.far[j]);
        Eigen::VectorXcd t = rmul(c.Kfn, wy);
        cplx ca = std::conj(c.a);
        for (long n = 0; n < n0_; ++n)
            r.near[n] += ca * std::conj(c.pow_m[N_ + 1 + n]) * t[n];
        Eigen::VectorXcd cxi = c.pow_m.segment(1, n0_).conjugate().cwiseProduct(s.near);
        r.far.push_back(ca * std::conj(c.pow_m[N_ + 1]) * (rmul_t(c.Knf, cxi) + rmul(c.Kff, wy)));
    }
    return r;
}

FarFieldSolver::State FarFieldSolver::apply_hh(const State &s) const {
    std::lock_guard<std::mutex> lock(mu_);
    return apply_Hs(apply_H(s));
}

std::vector<cplx> FarFieldSolver::project_back(const State &c, long umax) const {
    std::vector<cplx> d(umax + 1);
    for (long u = 0; u <= umax; ++u) {
        cplx s = 0.0;
        for (long n = 0; n < n0_; ++n)
            s += gamma_[N_ + 1 + n - u] * c.near[n];
        for (std::size_t j = 0; j < ch_.size(); ++j) {
            const auto &ch = ch_[j];
            cplx f = 0.0;
            for (std::size_t i = 0; i < xg_.X.size(); ++i)
                f += xg_.w[i] * c.far[j][i] / (xg_.X[i] - u + ch.alpha);
            s += ch.a * ch.pow_m[N_ + 1 - u] * f;
        }
        d[u] = s;
    }
    return d;
}

} // namespace szego
