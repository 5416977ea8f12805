#include "szego/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "szego/errors.hpp"
#include "tails.hpp"

namespace szego {

namespace detail {

std::vector<double> pair_sum_sequence(double a, double c, long s_lo, long s_hi) {
    std::vector<double> out(s_hi - s_lo + 1);
    double p0 = std::exp(std::lgamma(1.0 + a + c) - std::lgamma(1.0 + a) - std::lgamma(1.0 + c));
    double v = p0;
    for (long s = 0; s <= s_hi; ++s) {
        if (s >= s_lo)
            out[s - s_lo] = v;
        v *= -(c - s) / (1.0 + a + s);
    }
    v = p0;
    for (long s = 0; s >= s_lo; --s) {
        if (s <= s_hi)
            out[s - s_lo] = v;
        v *= -(a + s) / (1.0 + c - s);
    }
    return out;
}

std::complex<double> euler_tail(std::complex<double> w, double h0, double h1, double h2) {
    std::complex<double> r = 1.0 / (1.0 - w);
    double d1 = h1 - h0, d2 = h2 - 2.0 * h1 + h0;
    return h0 * r + w * d1 * r * r + w * w * d2 * r * r * r;
}

std::complex<double> unit(double t) {
    return std::polar(1.0, std::remainder(t, 2.0 * std::numbers::pi));
}

void parallel_chunks(long n, unsigned threads, const std::function<void(long, long)> &fn) {
    if (threads <= 1 || n < 64) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    long chunk = (n + threads - 1) / threads;
    for (long lo = 0; lo < n; lo += chunk)
        pool.emplace_back(fn, lo, std::min(n, lo + chunk));
    for (auto &t : pool)
        t.join();
}

} // namespace detail

using detail::unit;

namespace {

using cpoly = std::vector<cplx>;

cpoly pmul(const cpoly &a, const cpoly &b) {
    cpoly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

cpoly padd(cpoly a, const cpoly &b) {
    if (b.size() > a.size())
        a.resize(b.size(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] += b[i];
    return a;
}

cpoly pscale(cpoly a, cplx s) {
    for (auto &x : a)
        x *= s;
    return a;
}

cpoly pderiv(const cpoly &a) {
    if (a.size() <= 1)
        return {0.0};
    cpoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = a[i] * static_cast<double>(i);
    return r;
}

cpoly to_cpoly(const std::vector<double> &v) { return cpoly(v.begin(), v.end()); }

// Power series of prod_j (1 - c_j z)^{e_j} * N(z) / Den(z) from the first-order
// equation D y' = E y, D = prod (1 - c_j z) N Den, E = D y'/y.
std::vector<cplx> dfinite_series(const std::vector<cplx> &c, const std::vector<double> &e,
                                 const std::vector<double> &num, const std::vector<double> &den,
                                 long L) {
    cpoly nd = pmul(to_cpoly(num), to_cpoly(den));
    cpoly lin{1.0};
    for (cplx cj : c)
        lin = pmul(lin, {1.0, -cj});
    cpoly D = pmul(lin, nd);
    cpoly E = pmul(padd(pmul(pderiv(to_cpoly(num)), to_cpoly(den)),
                        pscale(pmul(to_cpoly(num), pderiv(to_cpoly(den))), -1.0)),
                   lin);
    for (std::size_t j = 0; j < c.size(); ++j) {
        cpoly others{1.0};
        for (std::size_t h = 0; h < c.size(); ++h)
            if (h != j)
                others = pmul(others, {1.0, -c[h]});
        E = padd(E, pscale(pmul(others, nd), -e[j] * c[j]));
    }
    std::vector<cplx> y(L, 0.0);
    y[0] = num[0] / den[0];
    const long dD = static_cast<long>(D.size()) - 1, dE = static_cast<long>(E.size()) - 1;
    for (long u = 0; u + 1 < L; ++u) {
        cplx s = 0.0;
        for (long i = 0; i <= std::min(dE, u); ++i)
            s += E[i] * y[u - i];
        for (long i = 1; i <= std::min(dD, u + 1); ++i)
            s -= D[i] * static_cast<double>(u + 1 - i) * y[u + 1 - i];
        y[u + 1] = s / (static_cast<double>(u + 1) * D[0]);
    }
    return y;
}

std::vector<cplx> rational_series(const std::vector<double> &num, const std::vector<double> &den,
                                  long L) {
    std::vector<cplx> out(L, 0.0);
    for (long u = 0; u < L; ++u) {
        double s = u < static_cast<long>(num.size()) ? num[u] : 0.0;
        for (long i = 1; i <= std::min<long>(u, static_cast<long>(den.size()) - 1); ++i)
            s -= den[i] * out[u - i].real();
        out[u] = s / den[0];
    }
    return out;
}

std::vector<cplx> g_coeffs(const FHSymbol &s, long L, bool inverse) {
    std::vector<cplx> c;
    std::vector<double> e;
    for (const auto &f : s.factors()) {
        c.push_back(std::conj(f.chi()));
        e.push_back(inverse ? -f.alpha : f.alpha);
    }
    const auto &r = s.regular();
    return inverse ? dfinite_series(c, e, r.q, r.p, L) : dfinite_series(c, e, r.p, r.q, L);
}

double g_tail_exponent(const FHSymbol &s, bool inverse) {
    if (s.M() == 0)
        return -std::numeric_limits<double>::infinity();
    double t = -std::numeric_limits<double>::infinity();
    for (const auto &f : s.factors())
        t = std::max(t, (inverse ? f.alpha : -f.alpha) - 1.0);
    return t;
}

} // namespace

long default_series_length(long N) { return std::max<long>(4096, 32 * N); }

void check_truncation_budget(const FHSymbol &symbol, long L) {
    if (L < 1)
        throw TruncationError("series length must be at least 1");
    if (symbol.M() == 0 || symbol.regular_decay_rate() == 0.0)
        return;
    // regular-part transient L r^L against the smallest admissible power-law
    // envelope L^{-3/2} at the truncation point
    double r = symbol.regular_decay_rate();
    double lhs = std::log(static_cast<double>(L)) + L * std::log(r);
    double rhs = std::log(0.5) - 1.5 * std::log(static_cast<double>(L));
    if (lhs > rhs)
        throw TruncationError("series length " + std::to_string(L) +
                              " too short: regular-part transient exceeds half the power-law tail");
}

std::vector<double> binomial_coefficients(double a, long L) {
    std::vector<double> b(std::max<long>(L, 0));
    if (L <= 0)
        return b;
    b[0] = 1.0;
    for (long u = 0; u + 1 < L; ++u)
        b[u + 1] = b[u] * (static_cast<double>(u) - a) / static_cast<double>(u + 1);
    return b;
}

LaurentSeries binomial_series(double alpha, cplx chi, int sign, long L) {
    if (!(std::fabs(alpha) < 1.0))
        throw DomainError("binomial_series: |alpha| must be < 1");
    if (L < 1)
        throw DomainError("binomial_series: L must be >= 1");
    if (sign != 1 && sign != -1)
        throw DomainError("binomial_series: sign must be +1 or -1");
    const double a = -sign * alpha;
    double theta = std::arg(chi);
    std::vector<cplx> c(L);
    double b = 1.0;
    for (long u = 0; u < L; ++u) {
        c[u] = b * unit(-theta * static_cast<double>(u));
        b *= (static_cast<double>(u) + a) / static_cast<double>(u + 1);
    }
    return LaurentSeries(0, std::move(c), a - 1.0);
}

LaurentSeries c1_series(const RationalRegularPart &regular, long L) {
    for (cplx r : polynomial_roots(regular.q))
        if (std::abs(r) <= 1.0 + 1e-12)
            throw DomainError("regular part: Q has a zero in the closed unit disk");
    return LaurentSeries(0, rational_series(regular.p, regular.q, L),
                         -std::numeric_limits<double>::infinity());
}

LaurentSeries c1_inverse_series(const RationalRegularPart &regular, long L) {
    for (cplx r : polynomial_roots(regular.p))
        if (std::abs(r) <= 1.0 + 1e-12)
            throw DomainError("regular part: P has a zero in the closed unit disk");
    return LaurentSeries(0, rational_series(regular.q, regular.p, L),
                         -std::numeric_limits<double>::infinity());
}

LaurentSeries g_series(const FHSymbol &symbol, long L) {
    check_truncation_budget(symbol, L);
    return LaurentSeries(0, g_coeffs(symbol, L, false), g_tail_exponent(symbol, false));
}

LaurentSeries g_inv_series(const FHSymbol &symbol, long L) {
    check_truncation_budget(symbol, L);
    return LaurentSeries(0, g_coeffs(symbol, L, true), g_tail_exponent(symbol, true));
}

LaurentSeries phase_coefficients(const FHSymbol &symbol, long lo, long hi, long W) {
    if (hi < lo)
        throw DomainError("phase_coefficients: empty index range");
    check_truncation_budget(symbol, W);
    const long glen = std::max(hi, 0L) + W + 3;
    const long blen = W + std::max(-lo, 0L) + 3;
    const auto g = g_coeffs(symbol, glen, false);
    const auto beta = g_coeffs(symbol, blen, true);
    const auto &fs = symbol.factors();
    const auto &A = symbol.amplitudes();
    const std::size_t M = fs.size();

    std::vector<std::vector<double>> bp(M), bm(M), Pd(M);
    for (std::size_t j = 0; j < M; ++j) {
        bp[j] = binomial_coefficients(fs[j].alpha, glen);
        bm[j] = binomial_coefficients(-fs[j].alpha, blen);
        Pd[j] = detail::pair_sum_sequence(fs[j].alpha, -fs[j].alpha, -hi, -lo);
    }

    std::vector<cplx> out(hi - lo + 1);
    for (long u = lo; u <= hi; ++u) {
        const long v0 = std::max(0L, u), V = v0 + W;
        cplx s = 0.0;
        for (long v = v0; v < V; ++v)
            s += g[v] * std::conj(beta[v - u]);
        for (std::size_t j = 0; j < M; ++j) {
            double partial = 0.0;
            for (long v = v0; v < V; ++v)
                partial += bp[j][v] * bm[j][v - u];
            double total = Pd[j][-u - (-hi)];
            s += A[j] / std::conj(A[j]) * unit(-fs[j].theta * static_cast<double>(u)) *
                 (total - partial);
            for (std::size_t jp = 0; jp < M; ++jp) {
                if (jp == j)
                    continue;
                const auto &bq = bm[jp];
                cplx w = unit(fs[jp].theta - fs[j].theta);
                cplx tail = detail::euler_tail(w, bp[j][V] * bq[V - u], bp[j][V + 1] * bq[V + 1 - u],
                                               bp[j][V + 2] * bq[V + 2 - u]);
                s += A[j] / std::conj(A[jp]) * unit(-fs[jp].theta * static_cast<double>(u)) *
                     unit((fs[jp].theta - fs[j].theta) * static_cast<double>(V)) * tail;
            }
        }
        out[u - lo] = s;
    }
    double tail_exp = symbol.M() == 0 ? -std::numeric_limits<double>::infinity() : -1.0;
    return LaurentSeries(lo, std::move(out), tail_exp);
}

LaurentSeries phase_series(const FHSymbol &symbol, long L) {
    return phase_coefficients(symbol, -L, L, L);
}

namespace {

// fhat(k) for k in [k_lo, N]
std::vector<cplx> fhat_range(const FHSymbol &symbol, long k_lo, long N, long L, unsigned threads) {
    if (k_lo < 0 || N < k_lo || 2 * N > L)
        throw DomainError("fhat: requires 0 <= k <= L/2");
    check_truncation_budget(symbol, L);
    const auto g = g_coeffs(symbol, L + 3, false);
    const auto &fs = symbol.factors();
    const auto &A = symbol.amplitudes();
    const std::size_t M = fs.size();
    std::vector<std::vector<double>> b(M), Pd(M);
    for (std::size_t j = 0; j < M; ++j) {
        b[j] = binomial_coefficients(fs[j].alpha, L + 3);
        Pd[j] = detail::pair_sum_sequence(fs[j].alpha, fs[j].alpha, -N, 0);
    }
    std::vector<cplx> out(N - k_lo + 1);
    detail::parallel_chunks(N - k_lo + 1, threads, [&](long i0, long i1) {
        for (long k = k_lo + i0; k < k_lo + i1; ++k) {
            cplx s = 0.0;
            for (long v = k; v < L; ++v)
                s += g[v] * std::conj(g[v - k]);
            for (std::size_t j = 0; j < M; ++j) {
                double partial = 0.0;
                for (long v = k; v < L; ++v)
                    partial += b[j][v] * b[j][v - k];
                s += std::norm(A[j]) * unit(-fs[j].theta * static_cast<double>(k)) *
                     (Pd[j][N - k] - partial);
                for (std::size_t jp = 0; jp < M; ++jp) {
                    if (jp == j)
                        continue;
                    const auto &bq = b[jp];
                    cplx w = unit(fs[jp].theta - fs[j].theta);
                    cplx tail = detail::euler_tail(w, b[j][L] * bq[L - k], b[j][L + 1] * bq[L + 1 - k],
                                                   b[j][L + 2] * bq[L + 2 - k]);
                    s += A[j] * std::conj(A[jp]) * unit(-fs[jp].theta * static_cast<double>(k)) *
                         unit((fs[jp].theta - fs[j].theta) * static_cast<double>(L)) * tail;
                }
            }
            out[k - k_lo] = s;
        }
    });
    if (symbol.is_conjugate_symmetric())
        for (auto &v : out)
            v = v.real();
    else if (k_lo == 0)
        out[0] = out[0].real();
    return out;
}

} // namespace

std::vector<cplx> fhat_row(const FHSymbol &symbol, long N, long L, unsigned threads) {
    return fhat_range(symbol, 0, N, L, threads);
}

cplx fhat(const FHSymbol &symbol, long k, long L) {
    long ak = std::labs(k);
    if (2 * ak > L)
        throw DomainError("fhat: requires |k| <= L/2");
    cplx v = fhat_range(symbol, ak, ak, L, 1)[0];
    return k >= 0 ? v : std::conj(v);
}

} // namespace szego
