#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "szego/series.hpp"
#include "szego/toeplitz.hpp"
#include "szego/wiener_hopf.hpp"

using namespace szego;
using oracle::pi;

namespace {

LaurentSeries random_series(std::mt19937 &rng, long lo, long hi) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<cplx> c;
    for (long u = lo; u <= hi; ++u)
        c.emplace_back(n(rng), n(rng));
    return LaurentSeries(lo, c);
}

cplx inner(const LaurentSeries &a, const LaurentSeries &b) {
    cplx s = 0.0;
    for (long u = std::min(a.min_index(), b.min_index()); u <= std::max(a.max_index(), b.max_index()); ++u)
        s += a[u] * std::conj(b[u]);
    return s;
}

FHSymbol gegenbauer() { return FHSymbol::gegenbauer(0.25, pi / 2); }

} // namespace

TEST_CASE("projections") {
    auto d = LaurentSeries::delta(0);
    CHECK(project_plus(d)[0] == cplx(1.0));
    CHECK(project_minus(d)[0] == cplx(0.0));
    std::mt19937 rng(3);
    auto s = random_series(rng, -7, 9);
    auto p = project_plus(s);
    CHECK(max_abs_diff(project_plus(p), p) == 0.0);
    CHECK(max_abs_diff(project_minus(project_minus(s)), project_minus(s)) == 0.0);
    auto sum = convolve(LaurentSeries::delta(0), project_plus(s), -7, 9);
    auto m = project_minus(s);
    for (long u = -7; u <= 9; ++u)
        CHECK(project_plus(s)[u] + m[u] == s[u]);
    CHECK(project_plus(s).is_analytic());
    CHECK(m.is_anti_analytic());
    (void)sum;
}

TEST_CASE("Hankel operator of the identity symbol vanishes") {
    auto op = make_hankel_operator(FHSymbol::unit(), 4, 64);
    for (long k = 0; k <= 64; ++k) {
        auto out = hankel_apply(op, LaurentSeries::delta(k), false);
        for (long u = -64; u <= -1; ++u)
            CHECK(out[u] == cplx(0.0));
    }
}

TEST_CASE("Hankel adjoint pairing") {
    for (auto s : {gegenbauer(), FHSymbol({{pi / 3, 0.4}, {pi, -0.25}}, {{1.0, 0.5}, {1.0, -0.3}})}) {
        auto op = make_hankel_operator(s, 8, 128);
        std::mt19937 rng(5);
        auto psi = random_series(rng, 0, 128);
        auto phi = random_series(rng, -128, -1);
        cplx lhs = inner(hankel_apply(op, psi, false), phi);
        cplx rhs = inner(psi, hankel_apply(op, phi, true));
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
        CHECK(op.norm_estimate < 1.0);
        CHECK_THROWS(hankel_apply(op, phi, false));
        CHECK_THROWS(hankel_apply(op, psi, true));
    }
}

TEST_CASE("Neumann entries of the identity symbol") {
    NeumannInverter inv(FHSymbol::unit(), 6, {4, 256, 0});
    for (long k = 0; k <= 6; ++k)
        for (long l = 0; l <= 6; ++l)
            CHECK(std::abs(inv.entry(k, l).value - (k == l ? 1.0 : 0.0)) < 1e-14);
    for (cplx h : inv.H_N())
        CHECK(h == cplx(0.0));
}

TEST_CASE("Neumann entry against Levinson") {
    auto pred = levinson_first_column(build_system(gegenbauer(), 16));
    auto r = neumann_entry(gegenbauer(), 16, 3, 0, 12, 2048);
    CHECK(std::abs(r.value - std::conj(pred.first_column[3])) < 1e-6);
    CHECK(r.contraction_ratio < 1.0);
}

TEST_CASE("Neumann column gives the full inverse on a complex symbol") {
    FHSymbol s({{pi / 3, 0.3}, {pi, -0.2}}, {{1.0, 0.5}, {1.0, -0.3}});
    const long N = 12;
    auto sys = build_system(s, N);
    auto inv = dense_inverse_oracle(sys);
    NeumannInverter nv(s, N, {16, 4096, 0});
    for (long k : {0L, 5L, 12L}) {
        auto col = nv.column(k);
        for (long l = 0; l <= N; ++l)
            CHECK(std::abs(col[l].value - inv(l, k)) < 1e-6);
    }
}

TEST_CASE("leading term is the projected inner product") {
    FHSymbol s({{pi / 3, 0.3}, {pi, -0.2}}, {{1.0, 0.5}, {1.0, -0.3}});
    NeumannInverter nv(s, 10, {4, 256, 0});
    auto beta = g_inv_series(s, 64);
    // chi^k / conj(g) has coefficients conj(beta_b) at index k - b
    auto shifted = [&](long k) {
        std::vector<cplx> c(64);
        for (long b = 0; b < 64; ++b)
            c[63 - b] = std::conj(beta[b]);
        return LaurentSeries(k - 63, c);
    };
    for (long k : {0L, 3L, 7L})
        for (long l : {0L, 2L, 9L}) {
            cplx direct = 0.0;
            auto a = project_plus(shifted(k)), b = shifted(l);
            for (long u = 0; u <= a.max_index(); ++u)
                direct += a[u] * std::conj(b[u]);
            CHECK(std::abs(nv.leading_term(k, l) - direct) < 1e-10);
        }
}

TEST_CASE("H_N reconstruction of the first column") {
    const long N = 16;
    NeumannInverter nv(gegenbauer(), N, {16, 2048, 0});
    auto H = nv.H_N();
    for (long k = 0; k <= N; ++k) {
        cplx s = nv.beta(k);
        for (long u = 0; u <= k; ++u)
            s -= nv.beta(k - u) * H[u];
        CHECK(std::abs(s - nv.entry(k, 0).value) < 1e-8);
    }
}

TEST_CASE("H_N(0) N against the F kernel") {
    const double alpha = 0.25;
    const long N = 64;
    FHSymbol s({{pi, alpha}}, {});
    double h = (H_N_of_u(s, N, 0) * static_cast<double>(N)).real();
    auto F = F_kernel(N, alpha, 0.0);
    CHECK(std::fabs(h / F.weighted - 1.0) < 0.10);
}
