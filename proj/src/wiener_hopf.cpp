#include "szego/wiener_hopf.hpp"

#include <algorithm>
#include <cmath>

#include "far_field.hpp"
#include "szego/errors.hpp"
#include "szego/series.hpp"

namespace szego {

LaurentSeries project_plus(const LaurentSeries &s) {
    LaurentSeries out = LaurentSeries::zeros(0, std::max(s.max_index(), 0L), s.tail_exponent());
    for (long u = std::max(s.min_index(), 0L); u <= s.max_index(); ++u)
        out.at(u) = s[u];
    return out;
}

LaurentSeries project_minus(const LaurentSeries &s) {
    LaurentSeries out = LaurentSeries::zeros(std::min(s.min_index(), -1L), -1, s.tail_exponent());
    for (long u = s.min_index(); u <= std::min(s.max_index(), -1L); ++u)
        out.at(u) = s[u];
    return out;
}

HankelOperatorData make_hankel_operator(const FHSymbol &symbol, long N, long cutoff, long L) {
    if (N < 0 || cutoff < 1)
        throw DomainError("make_hankel_operator: N >= 0 and cutoff >= 1 required");
    if (L <= 0)
        L = std::max<long>(4096, 2 * cutoff);
    HankelOperatorData op;
    op.N = N;
    op.cutoff = cutoff;
    // Phi_N(w) = gamma_{w - N - 1}
    LaurentSeries g = phase_coefficients(symbol, -2 * cutoff - N - 1, cutoff - N - 1, L);
    op.phi_series = LaurentSeries(-2 * cutoff, g.coeffs(), g.tail_exponent());
    op.norm_estimate = estimate_hh_norm(op);
    return op;
}

LaurentSeries hankel_apply(const HankelOperatorData &op, const LaurentSeries &psi, bool adjoint) {
    const long C = op.cutoff;
    if (psi.empty())
        return adjoint ? LaurentSeries::zeros(0, C) : LaurentSeries::zeros(-C, -1);
    if (!adjoint) {
        if (psi.min_index() < 0)
            throw DomainError("hankel_apply: psi must be analytic");
        if (psi.max_index() > C)
            throw DomainError("hankel_apply: cutoff overflow");
        LaurentSeries out = LaurentSeries::zeros(-C, -1);
        for (long m = -C; m <= -1; ++m) {
            cplx s = 0.0;
            for (long n = psi.min_index(); n <= psi.max_index(); ++n)
                s += op.phi_series[m - n] * psi[n];
            out.at(m) = s;
        }
        return out;
    }
    if (psi.max_index() >= 0)
        throw DomainError("hankel_apply: psi must be anti-analytic for the adjoint");
    if (psi.min_index() < -C)
        throw DomainError("hankel_apply: cutoff overflow");
    LaurentSeries out = LaurentSeries::zeros(0, C);
    for (long n = 0; n <= C; ++n) {
        cplx s = 0.0;
        for (long m = psi.min_index(); m <= psi.max_index(); ++m)
            s += std::conj(op.phi_series[m - n]) * psi[m];
        out.at(n) = s;
    }
    return out;
}

double estimate_hh_norm(const HankelOperatorData &op, int iterations) {
    LaurentSeries v(0, std::vector<cplx>(op.cutoff + 1, cplx(1.0)));
    double lambda = 0.0;
    for (int it = 0; it < iterations; ++it) {
        double nv = std::sqrt(v.energy(op.cutoff));
        if (nv == 0.0)
            return 0.0;
        for (auto &c : v.coeffs())
            c /= nv;
        LaurentSeries w = hankel_apply(op, hankel_apply(op, v, false), true);
        lambda = std::sqrt(w.energy(op.cutoff));
        v = std::move(w);
    }
    return lambda;
}

NeumannInverter::NeumannInverter(const FHSymbol &symbol, long N, NeumannOptions opts)
    : symbol_(symbol), N_(N), opts_(opts) {
    if (N < 0)
        throw DomainError("NeumannInverter: N must be >= 0");
    if (opts_.s_max < 0)
        throw DomainError("NeumannInverter: s_max must be >= 0");
    if (opts_.cutoff <= 0)
        opts_.cutoff = std::max<long>(4 * N, 2048);
    if (opts_.series_len <= 0)
        opts_.series_len = std::max<long>(8192, 2 * opts_.cutoff);
    auto b = g_inv_series(symbol, std::max<long>(N + 1, 4096));
    beta_.assign(b.coeffs().begin(), b.coeffs().begin() + (N + 1));
    solver_ = std::make_unique<FarFieldSolver>(symbol, N, opts_.cutoff, opts_.series_len);
}

NeumannInverter::~NeumannInverter() = default;

long NeumannInverter::cutoff() const { return opts_.cutoff; }

std::vector<cplx> NeumannInverter::solve_d(long k, std::vector<double> *increments, double *ratio,
                                           double *tail, long l_probe) const {
    std::vector<cplx> a(k + 1);
    for (long i = 0; i <= k; ++i)
        a[i] = std::conj(beta_[k - i]);
    auto term = solver_->source(a);
    auto c = term;
    // value of -sum_m beta_{l-m} d_m carried by one Neumann term
    auto probe = [&](const FarFieldSolver::State &t) {
        auto d = solver_->project_back(t, l_probe);
        cplx s = 0.0;
        for (long m = 0; m <= l_probe; ++m)
            s -= beta_[l_probe - m] * d[m];
        return std::abs(s);
    };
    std::vector<double> inc{probe(term)};
    double prev_norm = solver_->norm(term), rho = 0.0;
    for (int s = 1; s <= opts_.s_max; ++s) {
        term = solver_->apply_hh(term);
        double nt = solver_->norm(term);
        rho = prev_norm > 0.0 ? nt / prev_norm : 0.0;
        prev_norm = nt;
        FarFieldSolver::add(c, term);
        inc.push_back(probe(term));
        if (rho >= 1.0)
            throw ContractionError("series not contracting within cutoff (ratio " +
                                   std::to_string(rho) + ")");
    }
    if (ratio)
        *ratio = rho;
    if (tail)
        *tail = rho < 1.0 ? inc.back() * rho / (1.0 - rho) : INFINITY;
    if (increments)
        *increments = inc;
    return solver_->project_back(c, N_);
}

std::vector<NeumannResult> NeumannInverter::column(long k) const {
    if (k < 0 || k > N_)
        throw DomainError("neumann: k must lie in [0, N]");
    NeumannResult base;
    auto d = solve_d(k, &base.increments, &base.contraction_ratio, &base.tail_estimate, 0);
    std::vector<NeumannResult> out(N_ + 1, base);
    for (long l = 0; l <= N_; ++l) {
        cplx G = 0.0;
        for (long m = 0; m <= l; ++m) {
            cplx am = m <= k ? std::conj(beta_[k - m]) : cplx(0.0);
            G += beta_[l - m] * (am - d[m]);
        }
        out[l].value = std::conj(G);
    }
    return out;
}

NeumannResult NeumannInverter::entry(long k, long l) const {
    if (k < 0 || k > N_ || l < 0 || l > N_)
        throw DomainError("neumann: k and l must lie in [0, N]");
    NeumannResult r;
    auto d = solve_d(k, &r.increments, &r.contraction_ratio, &r.tail_estimate, l);
    cplx G = 0.0;
    for (long m = 0; m <= l; ++m) {
        cplx am = m <= k ? std::conj(beta_[k - m]) : cplx(0.0);
        G += beta_[l - m] * (am - d[m]);
    }
    r.value = std::conj(G);
    return r;
}

std::vector<cplx> NeumannInverter::H_N() const {
    auto d = solve_d(0, nullptr, nullptr, nullptr, 0);
    for (auto &x : d)
        x /= beta_[0];
    return d;
}

cplx NeumannInverter::leading_term(long k, long l) const {
    cplx s = 0.0;
    for (long n = 0; n <= std::min(k, l); ++n)
        s += std::conj(beta_[k - n]) * beta_[l - n];
    return s;
}

NeumannResult neumann_entry(const FHSymbol &symbol, long N, long k, long l, int s_max, long cutoff) {
    NeumannOptions o;
    o.s_max = s_max;
    o.cutoff = cutoff;
    return NeumannInverter(symbol, N, o).entry(k, l);
}

cplx H_N_of_u(const FHSymbol &symbol, long N, long u, int p_max, long n_max) {
    if (u < 0 || u > N)
        throw DomainError("H_N_of_u: u must lie in [0, N]");
    NeumannOptions o;
    o.s_max = p_max;
    o.cutoff = n_max;
    return NeumannInverter(symbol, N, o).H_N()[u];
}

} // namespace szego
