#include <doctest.h>

#include "szego/laurent_series.hpp"

using namespace szego;

TEST_CASE("laurent series window and access") {
    LaurentSeries s(-2, {1.0, 2.0, 3.0});
    CHECK(s.min_index() == -2);
    CHECK(s.max_index() == 0);
    CHECK(s[-2] == cplx(1.0));
    CHECK(s[0] == cplx(3.0));
    CHECK(s[5] == cplx(0.0));
    CHECK(s[-3] == cplx(0.0));
    CHECK_FALSE(s.is_analytic());
    CHECK_FALSE(s.is_anti_analytic());
    CHECK(LaurentSeries(-3, {1.0, 1.0}).is_anti_analytic());
    CHECK(LaurentSeries::delta(0).is_analytic());
    CHECK(s.energy(1) == doctest::Approx(9.0 + 4.0));
}

TEST_CASE("zeros and delta") {
    auto z = LaurentSeries::zeros(-3, 3);
    CHECK(z.size() == 7);
    for (long u = -3; u <= 3; ++u)
        CHECK(z[u] == cplx(0.0));
    auto d = LaurentSeries::delta(4);
    CHECK(d[4] == cplx(1.0));
    CHECK(d.size() == 1);
}

TEST_CASE("convolution of polynomials") {
    // (1 + z)(1 - 1/z) = z - 1/z
    LaurentSeries a(0, {1.0, 1.0});
    LaurentSeries b(-1, {-1.0, 1.0});
    auto c = convolve(a, b, -2, 2);
    CHECK(c[-2] == cplx(0.0));
    CHECK(c[-1] == cplx(-1.0));
    CHECK(c[0] == cplx(0.0));
    CHECK(c[1] == cplx(1.0));
    CHECK(c[2] == cplx(0.0));
    CHECK(max_abs_diff(c, LaurentSeries(-1, {-1.0, 0.0, 1.0})) == 0.0);
}

TEST_CASE("max_abs_diff spans both windows") {
    LaurentSeries a(0, {1.0});
    LaurentSeries b(3, {cplx(0.0, 2.0)});
    CHECK(max_abs_diff(a, b) == doctest::Approx(2.0));
}
