#include "szego/asymptotics.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>

#include "szego/errors.hpp"
#include "szego/series.hpp"

namespace szego {

namespace {

constexpr double pi = std::numbers::pi;

cplx unit_power(cplx chi, long k) {
    return std::polar(1.0, std::remainder(std::arg(chi) * static_cast<double>(k), 2.0 * pi));
}

double tau1(double alpha1) { return alpha1 > 0.0 ? alpha1 : alpha1 - 0.5; }

} // namespace

std::string to_string(Regime r) {
    switch (r) {
    case Regime::interior_x:
        return "interior_x";
    case Regime::small_k_over_N:
        return "small_k_over_N";
    case Regime::special_predizero:
        return "special_predizero";
    case Regime::large_k:
        return "large_k";
    case Regime::regular_symbol:
        return "regular_symbol";
    }
    return "unknown";
}

cplx normalized_c1(const RationalRegularPart &regular, cplx z) {
    return regular.c1(z) / regular.c1(0.0);
}

LeadingConstants LeadingConstants::of(const FHSymbol &symbol) {
    LeadingConstants lc;
    const auto &fs = symbol.factors();
    for (std::size_t j = 0; j < fs.size(); ++j) {
        cplx chi = fs[j].chi();
        cplx H = 1.0;
        for (std::size_t h = 0; h < fs.size(); ++h)
            if (h != j) {
                cplx num = std::conj(fs[h].chi()) * chi - 1.0;
                cplx den = fs[h].chi() * std::conj(chi) - 1.0;
                H *= std::pow(num / den, fs[h].alpha);
            }
        cplx c1 = symbol.regular().c1(chi);
        lc.H.push_back(H);
        lc.phase_ratio.push_back(c1 / std::conj(c1));
        if (j < symbol.m()) {
            cplx K = 1.0;
            for (std::size_t h = 0; h < fs.size(); ++h)
                if (h != j)
                    K *= pair_power(fs[h].chi(), chi, -fs[h].alpha);
            lc.K.push_back(K);
            lc.c1_inverse.push_back(1.0 / normalized_c1(symbol.regular(), chi));
        }
    }
    return lc;
}

AsymptoticPrediction beta_asymptotic(const FHSymbol &symbol, long k) {
    if (k < 1)
        throw DomainError("beta_asymptotic: k must be >= 1");
    AsymptoticPrediction p;
    p.k = k;
    if (symbol.M() == 0) {
        p.value = 0.0;
        p.regime = Regime::regular_symbol;
        return p;
    }
    const double a1 = symbol.alpha1();
    const auto lc = LeadingConstants::of(symbol);
    cplx sum = 0.0;
    double env = 0.0;
    for (std::size_t j = 0; j < symbol.m(); ++j) {
        cplx c = lc.K[j] * lc.c1_inverse[j];
        sum += c * std::conj(unit_power(symbol.factors()[j].chi(), k));
        env += std::abs(c);
    }
    const double scale = std::pow(static_cast<double>(k), a1 - 1.0) / std::tgamma(a1);
    p.value = scale * sum;
    if (symbol.is_conjugate_symmetric())
        p.value = p.value.real();
    p.envelope = std::fabs(scale) * env;
    p.leading_exponent = a1 - 1.0;
    p.claimed_error_order = tau1(a1) - 1.0;
    p.regime = Regime::large_k;
    return p;
}

AsymptoticPrediction gamma_asymptotic(const FHSymbol &symbol, long k) {
    if (k < 1)
        throw DomainError("gamma_asymptotic: k must be >= 1");
    AsymptoticPrediction p;
    p.k = k;
    if (symbol.M() == 0) {
        p.value = 0.0;
        p.regime = Regime::regular_symbol;
        return p;
    }
    const auto lc = LeadingConstants::of(symbol);
    cplx sum = 0.0;
    double env = 0.0;
    for (std::size_t j = 0; j < symbol.M(); ++j) {
        const auto &f = symbol.factors()[j];
        cplx c = std::sin(pi * f.alpha) / pi * lc.H[j] * lc.phase_ratio[j];
        sum += c * unit_power(f.chi(), k);
        env += std::abs(c);
    }
    p.value = sum / static_cast<double>(k);
    if (symbol.is_conjugate_symmetric())
        p.value = p.value.real();
    p.envelope = env / static_cast<double>(k);
    p.leading_exponent = -1.0;
    p.claimed_error_order = std::min(symbol.alpha1() - 1.0, -1.0);
    p.regime = Regime::large_k;
    return p;
}

AsymptoticPrediction entry_asymptotic(const FHSymbol &symbol, long N, long k) {
    if (k < 1 || k > N - 1)
        throw DomainError("entry_asymptotic: k must lie in [1, N-1]");
    AsymptoticPrediction p = beta_asymptotic(symbol, k);
    const double x = static_cast<double>(k) / static_cast<double>(N);
    const double boundary = std::pow(1.0 - x, symbol.alpha1());
    p.value *= boundary;
    p.envelope *= boundary;
    p.N = N;
    p.claimed_error_order = symbol.alpha1() - 1.0;
    if (p.regime != Regime::regular_symbol)
        p.regime = Regime::interior_x;
    return p;
}

GegenbauerPrediction gegenbauer_asymptotic(double alpha, double theta0,
                                           const RationalRegularPart &regular, long N, long k) {
    if (!(theta0 > 0.0 && theta0 < pi))
        throw DomainError("gegenbauer_asymptotic: theta0 must lie in (0, pi)");
    FHSymbol symbol = FHSymbol::gegenbauer(alpha, theta0, regular);
    GegenbauerPrediction g;
    g.specialized = entry_asymptotic(symbol, N, k);
    cplx chi0 = std::polar(1.0, theta0);
    cplx c1 = normalized_c1(regular, chi0);
    g.omega = alpha * pi / 2.0 - alpha * theta0 - std::arg(c1);
    g.K = std::pow(2.0, 1.0 - alpha) * std::pow(std::sin(theta0), -alpha) * std::sqrt(1.0 / c1);
    const double x = static_cast<double>(k) / static_cast<double>(N);
    const double scale = std::pow(static_cast<double>(k), alpha - 1.0) *
                         std::pow(1.0 - x, alpha) / std::tgamma(alpha);
    AsymptoticPrediction &p = g.closed_form;
    p = g.specialized;
    p.value = g.K * scale * std::cos(static_cast<double>(k) * theta0 + g.omega);
    p.envelope = std::abs(g.K) * std::fabs(scale);
    return g;
}

AsymptoticPrediction small_k_entry(const FHSymbol &symbol, long N, long k) {
    if (k < 0 || k > N)
        throw DomainError("small_k_entry: k must lie in [0, N]");
    auto beta = g_inv_series(symbol, std::max<long>(k + 1, 4096));
    AsymptoticPrediction p;
    p.value = beta[k] / beta[0];
    p.envelope = std::abs(p.value);
    p.N = N;
    p.k = k;
    p.leading_exponent = symbol.M() == 0 ? 0.0 : symbol.alpha1() - 1.0;
    p.claimed_error_order = -1.0;
    p.regime = Regime::small_k_over_N;
    return p;
}

FHSymbol predizero_symbol(double alpha, const RationalRegularPart &regular) {
    if (!(alpha > -0.5 && alpha <= 0.5) || alpha == 0.0)
        throw DomainError("predizero: alpha must lie in (-1/2, 1/2] without 0");
    SymbolOptions o;
    o.allow_origin = true;
    return FHSymbol({{0.0, alpha}}, regular, o);
}

AsymptoticPrediction predizero_special(double alpha, const RationalRegularPart &regular, long N,
                                       double x) {
    if (!(alpha > -0.5 && alpha <= 0.5) || alpha == 0.0)
        throw DomainError("predizero: alpha must lie in (-1/2, 1/2] without 0");
    if (!(x > 0.0 && x < 1.0))
        throw DomainError("predizero: x must lie in (0, 1)");
    if (auto errs = check_regular_part(regular); !errs.empty())
        throw DomainError(errs.front());
    const double Nd = static_cast<double>(N);
    double f = std::pow(Nd, alpha - 1.0) * std::pow(x, alpha - 1.0) * std::pow(1.0 - x, alpha) /
               std::tgamma(alpha);
    // c(1) for constant c; c1(0) c1(1) in general
    double c = (regular.c1(0.0) * regular.c1(1.0)).real();
    AsymptoticPrediction p;
    p.value = f / c;
    p.envelope = std::fabs(f / c);
    p.N = N;
    p.k = static_cast<long>(std::floor(Nd * x));
    p.leading_exponent = alpha - 1.0;
    p.claimed_error_order = alpha - 1.0;
    p.regime = Regime::special_predizero;
    return p;
}

cplx normalized_entry(const std::vector<cplx> &first_column, long k, double beta0) {
    return std::conj(first_column[k]) / (beta0 * beta0);
}

ComparisonRecord compare(cplx exact, const AsymptoticPrediction &pred) {
    ComparisonRecord r;
    r.regime = pred.regime;
    r.N = pred.N;
    r.k = pred.k;
    r.x = pred.N > 0 ? static_cast<double>(pred.k) / static_cast<double>(pred.N) : 0.0;
    r.exact = exact;
    r.predicted = pred.value;
    if (exact != cplx(0.0) && pred.value != cplx(0.0))
        r.ratio = exact / pred.value;
    r.abs_err = std::abs(exact - pred.value);
    switch (pred.regime) {
    case Regime::interior_x:
    case Regime::large_k:
        r.normalized_err = pred.k > 0 ? r.abs_err / std::pow(static_cast<double>(pred.k),
                                                             pred.claimed_error_order)
                                      : r.abs_err;
        break;
    case Regime::small_k_over_N:
    case Regime::special_predizero:
        r.normalized_err = pred.N > 0 ? r.abs_err / std::pow(static_cast<double>(pred.N),
                                                             pred.claimed_error_order)
                                      : r.abs_err;
        break;
    case Regime::regular_symbol:
        r.normalized_err = r.abs_err;
        break;
    }
    return r;
}

void write_comparison_csv(const std::string &path, const std::vector<ComparisonRecord> &rows) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write " + path);
    os << "regime,N,k,x,exact_re,exact_im,pred_re,pred_im,ratio,abs_err,normalized_err\n"
       << std::setprecision(17);
    for (const auto &r : rows) {
        os << to_string(r.regime) << ',' << r.N << ',' << r.k << ',' << r.x << ','
           << r.exact.real() << ',' << r.exact.imag() << ',' << r.predicted.real() << ','
           << r.predicted.imag() << ',';
        if (r.ratio)
            os << r.ratio->real();
        else
            os << "nan";
        os << ',' << r.abs_err << ',' << r.normalized_err << '\n';
    }
}

} // namespace szego
