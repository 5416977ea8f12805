#include <doctest.h>

#include <limits>

#include "oracles.hpp"
#include "szego/asymptotics.hpp"
#include "szego/errors.hpp"
#include "szego/series.hpp"

using namespace szego;
using oracle::pi;

namespace {

// g^{-1} as the direct product of its factor series
LaurentSeries g_inv_by_convolution(const FHSymbol &s, long L) {
    LaurentSeries acc = c1_inverse_series(s.regular(), L);
    for (const auto &f : s.factors())
        acc = convolve(acc, binomial_series(f.alpha, f.chi(), -1, L), 0, L - 1);
    return acc;
}

LaurentSeries g_by_convolution(const FHSymbol &s, long L) {
    LaurentSeries acc = c1_series(s.regular(), L);
    for (const auto &f : s.factors())
        acc = convolve(acc, binomial_series(f.alpha, f.chi(), 1, L), 0, L - 1);
    return acc;
}

} // namespace

TEST_CASE("binomial series examples") {
    auto b = binomial_series(0.0, std::polar(1.0, 0.7), 1, 4);
    CHECK(b[0] == cplx(1.0));
    CHECK(b[1] == cplx(0.0));
    CHECK(b[2] == cplx(0.0));
    CHECK(b[3] == cplx(0.0));
    auto m = binomial_series(0.25, 1.0, -1, 201);
    CHECK(std::abs(m[1] - 0.25) < 1e-15);
    double r = m[200].real() * std::tgamma(0.25) * std::pow(200.0, 0.75);
    CHECK(std::fabs(r - 1.0) < 0.01);
}

TEST_CASE("binomial coefficients against the log-gamma ratio") {
    for (double alpha : {0.25, -0.25, 0.4, -0.1}) {
        auto b = binomial_series(alpha, 1.0, -1, 4001);
        for (long u = 1; u <= 4000; ++u) {
            double o = oracle::gamma_ratio(alpha, u);
            // the oracle loses eps * |lgamma| to cancellation
            double tol = 64 * std::numeric_limits<double>::epsilon() * (1.0 + std::lgamma(u + 1.0));
            CHECK(std::fabs(b[u].real() / o - 1.0) < tol);
        }
    }
}

TEST_CASE("binomial series rotates with chi") {
    cplx chi = std::polar(1.0, 1.1);
    auto a = binomial_series(0.3, 1.0, 1, 50);
    auto b = binomial_series(0.3, chi, 1, 50);
    for (long u = 0; u < 50; ++u)
        CHECK(std::abs(b[u] - a[u] * std::pow(std::conj(chi), u)) < 1e-14);
    CHECK_THROWS_AS(binomial_series(1.0, chi, 1, 4), DomainError);
}

TEST_CASE("regular part series") {
    auto one = c1_series(RationalRegularPart::unit(), 5);
    CHECK(one[0] == cplx(1.0));
    CHECK(one[1] == cplx(0.0));
    auto lin = c1_series({{1.0, 1.0}, {1.0}}, 5);
    CHECK(lin[0] == cplx(1.0));
    CHECK(lin[1] == cplx(1.0));
    CHECK(lin[2] == cplx(0.0));
    auto geo = c1_series({{1.0}, {1.0, -0.5}}, 40);
    for (long u = 0; u < 40; ++u)
        CHECK(std::abs(geo[u] - std::pow(0.5, u)) < 1e-15);
    // synthetic long division of (1 + 0.5 z) / (1 - 0.3 z)
    auto rat = c1_series({{1.0, 0.5}, {1.0, -0.3}}, 30);
    CHECK(std::abs(rat[0] - 1.0) < 1e-15);
    for (long u = 1; u < 30; ++u)
        CHECK(std::abs(rat[u] - 0.8 * std::pow(0.3, u - 1)) < 1e-15);
}

TEST_CASE("g and its inverse for the identity symbol") {
    auto g = g_series(FHSymbol::unit(), 8);
    auto gi = g_inv_series(FHSymbol::unit(), 8);
    for (long u = 0; u < 8; ++u) {
        CHECK(g[u] == cplx(u == 0 ? 1.0 : 0.0));
        CHECK(gi[u] == cplx(u == 0 ? 1.0 : 0.0));
    }
}

TEST_CASE("beta_1 of the single factor at pi") {
    FHSymbol s({{pi, 0.25}}, {});
    auto gi = g_inv_series(s, 16);
    auto b = binomial_series(0.25, std::polar(1.0, pi), -1, 16);
    CHECK(std::abs(gi[1] - b[1]) < 1e-15);
    CHECK(std::abs(gi[1] - (-0.25)) < 1e-15);
}

TEST_CASE("recurrence matches direct convolution of the factor series") {
    FHSymbol s({{pi / 3, 0.4}, {pi, -0.25}, {1.5 * pi, 0.1}}, {{1.0, 0.5}, {1.0, -0.3}});
    const long L = 1024;
    auto gi = g_inv_series(s, L), gic = g_inv_by_convolution(s, L);
    auto g = g_series(s, L), gc = g_by_convolution(s, L);
    double d1 = 0.0, d2 = 0.0;
    for (long u = 0; u < L; ++u) {
        d1 = std::max(d1, std::abs(gi[u] - gic[u]));
        d2 = std::max(d2, std::abs(g[u] - gc[u]));
    }
    CHECK(d1 < 1e-12);
    CHECK(d2 < 1e-12);
}

TEST_CASE("convolution identity g * g^{-1} = delta") {
    for (auto s : {FHSymbol({{pi, 0.25}}, {}), FHSymbol({{pi / 3, 0.4}, {pi, -0.25}}, {{1.0, 0.5}, {1.0, -0.3}})}) {
        const long L = 4096;
        auto prod = convolve(g_series(s, L), g_inv_series(s, L), 0, L / 2);
        double d = 0.0;
        for (long k = 0; k <= L / 2; ++k)
            d = std::max(d, std::abs(prod[k] - (k == 0 ? 1.0 : 0.0)));
        CHECK(d < 1e-8);
    }
}

TEST_CASE("truncation budget rejects a short series for a slow pole") {
    FHSymbol s({{pi, 0.25}}, {{1.0}, {1.0, -0.99}});
    CHECK_THROWS_AS(g_inv_series(s, 100), TruncationError);
    CHECK_NOTHROW(g_inv_series(s, 8192));
}

TEST_CASE("phase series of the identity is delta") {
    auto p = phase_series(FHSymbol::unit(), 16);
    for (long u = -16; u <= 16; ++u)
        CHECK(p[u] == cplx(u == 0 ? 1.0 : 0.0));
}

TEST_CASE("phase coefficients against the closed form at pi") {
    for (double alpha : {0.25, -0.25, 0.4}) {
        FHSymbol s({{pi, alpha}}, {});
        auto p = phase_coefficients(s, -3000, 50, 4096);
        double d = 0.0;
        for (long u = -3000; u <= 50; ++u)
            d = std::max(d, std::abs(p[u] - oracle::phase_at_pi(alpha, u)));
        CHECK(d < 1e-8);
    }
}

TEST_CASE("phase Parseval from below") {
    for (double alpha : {0.3, 0.25, -0.25}) {
        FHSymbol s({{pi / 2, alpha}, {1.4 * pi, alpha - 0.1}}, {{1.0, 0.5}, {1.0, -0.3}});
        const long L = 8192;
        auto p = phase_series(s, L);
        double e = p.energy(L);
        CHECK(e <= 1.0 + 1e-12);
        CHECK(e > 1.0 - 1e-4);
    }
}

TEST_CASE("k gamma_{-k} for one factor at pi/2") {
    const double alpha = 0.25;
    FHSymbol s({{pi / 2, alpha}}, {});
    for (long k : {500L, 501L}) {
        auto p = phase_coefficients(s, -k, -k, 8192);
        cplx v = static_cast<double>(k) * p[-k];
        cplx expected = std::sin(pi * alpha) / pi * std::polar(1.0, -k * pi / 2);
        if (k % 4 == 0)
            CHECK(std::abs(v / expected - 1.0) < 0.02);
        auto pred = gamma_asymptotic(s, k);
        CHECK(std::abs(v / (static_cast<double>(k) * pred.value) - 1.0) < 0.02);
    }
}

TEST_CASE("fhat of constant and identity symbols") {
    auto one = fhat_row(FHSymbol::unit(), 4, 64);
    CHECK(one[0] == cplx(1.0));
    for (long k = 1; k <= 4; ++k)
        CHECK(one[k] == cplx(0.0));
    auto four = fhat_row(FHSymbol({}, {{2.0}, {1.0}}), 2, 64);
    CHECK(std::abs(four[0] - 4.0) < 1e-15);
    CHECK(four[1] == cplx(0.0));
}

TEST_CASE("fhat against the closed form at pi") {
    const double alpha = 0.25;
    FHSymbol s({{pi, alpha}}, {});
    const long N = 512;
    auto row = fhat_row(s, N, default_series_length(N), 4);
    CHECK(row[0].imag() == 0.0);
    CHECK(row[0].real() > 0.0);
    double d = 0.0;
    for (long k = 0; k <= N; ++k)
        d = std::max(d, std::abs(row[k] - oracle::fhat_at_pi(alpha, k)));
    CHECK(d < 1e-9);
}

TEST_CASE("fhat against adaptive quadrature") {
    FHSymbol s1({{pi, 0.25}}, {});
    CHECK(std::abs(fhat(s1, 0, 4096) - oracle::fourier(s1, 0)) < 1e-6);
    FHSymbol s3({{pi / 3, 0.4}, {pi, -0.25}, {1.5 * pi, 0.1}}, {{1.0, 0.5}, {1.0, -0.3}});
    for (long k : {0L, 1L, 5L}) {
        cplx q = oracle::fourier(s3, k);
        CHECK(std::abs(fhat(s3, k, 4096) - q) < 1e-6);
    }
}

TEST_CASE("fhat row is independent of the thread count") {
    FHSymbol s({{pi / 3, 0.4}, {pi, -0.25}}, {{1.0, 0.5}, {1.0, -0.3}});
    auto a = fhat_row(s, 300, 4096, 1);
    auto b = fhat_row(s, 300, 4096, 5);
    for (long k = 0; k <= 300; ++k)
        CHECK(a[k] == b[k]);
}
