#include <doctest.h>

#include "oracles.hpp"
#include "szego/errors.hpp"
#include "szego/harness.hpp"
#include "szego/symbol_io.hpp"
#include "szego/toeplitz.hpp"

using namespace szego;
using oracle::pi;

namespace {

FHSymbol gegenbauer() { return FHSymbol::gegenbauer(0.25, pi / 2); }

FHSymbol complex_symbol() {
    return FHSymbol({{pi / 3, 0.4}, {pi, -0.25}, {1.5 * pi, 0.1}}, {{1.0, 0.5}, {1.0, -0.3}});
}

double max_diff(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace

TEST_CASE("system construction") {
    auto id = build_system(FHSymbol::unit(), 3);
    CHECK(id.first_row == std::vector<cplx>{1.0, 0.0, 0.0, 0.0});
    auto four = build_system(FHSymbol({}, {{2.0}, {1.0}}), 2);
    CHECK(std::abs(four.first_row[0] - 4.0) < 1e-15);
    CHECK(four.first_row[1] == cplx(0.0));
    CHECK(four.first_row[2] == cplx(0.0));
    auto g = build_system(gegenbauer(), 4);
    CHECK(std::abs(g.first_row[1] - oracle::fourier(gegenbauer(), 1)) < 1e-6);
}

TEST_CASE("entries are Hermitian by construction") {
    auto sys = build_system(complex_symbol(), 12);
    for (long i = 0; i <= 12; ++i)
        for (long j = 0; j <= 12; ++j)
            CHECK(sys.entry(i, j) == std::conj(sys.entry(j, i)));
}

TEST_CASE("Levinson first column") {
    auto id = levinson_first_column(build_system(FHSymbol::unit(), 6));
    for (long k = 0; k <= 6; ++k)
        CHECK(id.first_column[k] == cplx(k == 0 ? 1.0 : 0.0));

    auto sys = build_system(gegenbauer(), 16);
    auto pred = levinson_first_column(sys);
    auto inv = dense_inverse_oracle(sys);
    double d = 0.0;
    for (long k = 0; k <= 16; ++k)
        d = std::max(d, std::abs(inv(k, 0) - pred.first_column[k]));
    CHECK(d < 1e-10);
    CHECK(pred.prediction_error == doctest::Approx(1.0 / pred.first_column[0].real()));
}

TEST_CASE("two by two closed form") {
    const double a = 2.0;
    const cplx b(0.3, -0.7);
    auto pred = levinson_first_column(system_from_row({a, b}));
    double det = a * a - std::norm(b);
    CHECK(std::abs(pred.first_column[0] - a / det) < 1e-15);
    CHECK(std::abs(pred.first_column[1] - (-std::conj(b)) / det) < 1e-15);
}

TEST_CASE("indefinite data is rejected") {
    CHECK_THROWS_AS(levinson_first_column(system_from_row({1.0, 2.0})), NotPositiveDefinite);
}

TEST_CASE("dense oracle structure") {
    auto id = dense_inverse_oracle(build_system(FHSymbol::unit(), 5));
    CHECK((id - Eigen::MatrixXcd::Identity(6, 6)).norm() == 0.0);

    auto sys = build_system(complex_symbol(), 32);
    Eigen::MatrixXcd inv = dense_inverse_oracle(sys);
    const long n = 33;
    double persym = 0.0, herm = 0.0;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            persym = std::max(persym, std::abs(inv(n - 1 - i, n - 1 - j) - inv(j, i)));
            herm = std::max(herm, std::abs(inv(i, j) - std::conj(inv(j, i))));
        }
    CHECK(persym < 1e-10);
    CHECK(herm < 1e-10);
}

TEST_CASE("last column") {
    auto id = last_column_from_first(levinson_first_column(build_system(FHSymbol::unit(), 4)));
    CHECK(id == std::vector<cplx>{0.0, 0.0, 0.0, 0.0, 1.0});

    for (auto s : {gegenbauer(), complex_symbol()}) {
        auto sys = build_system(s, 16);
        auto pred = levinson_first_column(sys);
        auto last = last_column_from_first(pred);
        auto inv = dense_inverse_oracle(sys);
        double d = 0.0;
        for (long k = 0; k <= 16; ++k)
            d = std::max(d, std::abs(inv(k, 16) - last[k]));
        CHECK(d < 1e-10);
    }
    auto pred = levinson_first_column(build_system(gegenbauer(), 16));
    auto last = last_column_from_first(pred);
    for (long k = 0; k <= 16; ++k)
        CHECK(last[k] == pred.first_column[16 - k]);
}

TEST_CASE("Szego polynomial") {
    auto id = szego_polynomial(levinson_first_column(build_system(FHSymbol::unit(), 5)));
    for (long k = 0; k <= 5; ++k)
        CHECK(id[k] == cplx(k == 5 ? 1.0 : 0.0));

    std::vector<cplx> c{cplx(1, 2), cplx(-0.5, 0.1), cplx(0.3, -4)};
    CHECK(reverse_conjugate(reverse_conjugate(c)) == c);

    // the reversal of the normalized last column reproduces Phi_N
    auto pred = levinson_first_column(build_system(complex_symbol(), 10));
    auto via_last = predictor_from_last_column(last_column_from_first(pred));
    CHECK(max_diff(via_last, szego_polynomial(pred)) < 1e-12);
}

TEST_CASE("Szego polynomial orthogonality by quadrature") {
    // real-symmetric weight: orthogonal with respect to f itself
    FHSymbol sym({{pi, 0.25}}, {});
    auto phi = szego_polynomial(levinson_first_column(build_system(sym, 8)));
    auto inner = [&](const FHSymbol &w, bool reflect, long j) {
        return oracle::circle_integral(w, [&](double t) {
            cplx z = std::polar(1.0, t), p = 0.0;
            for (long n = 8; n >= 0; --n)
                p = p * z + phi[n];
            double wt = eval_symbol(w, reflect ? 2 * pi - t : t);
            return p * std::polar(1.0, -static_cast<double>(j) * t) * wt;
        });
    };
    for (long j = 0; j < 8; ++j)
        CHECK(std::abs(inner(sym, false, j)) < 1e-8);

    // general symbol: orthogonality holds for the reflected weight f(-theta)
    FHSymbol one({{pi / 2, 0.25}}, {{1.0, 0.5}, {1.0, -0.3}});
    phi = szego_polynomial(levinson_first_column(build_system(one, 8)));
    FHSymbol reflected({{1.5 * pi, 0.25}}, {{1.0, 0.5}, {1.0, -0.3}});
    for (long j = 0; j < 8; ++j)
        CHECK(std::abs(inner(reflected, false, j)) < 1e-8);
}

TEST_CASE("reflection coefficients and zeros on every fixture") {
    for (const auto &[name, j] : fixture_symbols()) {
        CAPTURE(name);
        std::vector<std::string> errors;
        auto s = parse_symbol(j, errors);
        REQUIRE(s.has_value());
        auto sys = build_system(*s, 64);
        auto pred = levinson_first_column(sys);
        for (cplx r : pred.reflection)
            CHECK(std::abs(r) < 1.0);
        for (cplx z : szego_zeros(pred))
            CHECK(std::abs(z) < 1.0);
        for (std::size_t n = 1; n < pred.error_sequence.size(); ++n)
            CHECK(pred.error_sequence[n] <= pred.error_sequence[n - 1]);
    }
}

TEST_CASE("builds are deterministic across thread counts") {
    auto a = build_system(complex_symbol(), 200, 8192, 1);
    auto b = build_system(complex_symbol(), 200, 8192, 3);
    CHECK(a.first_row == b.first_row);
}
