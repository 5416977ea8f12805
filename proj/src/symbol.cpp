#include "szego/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "szego/errors.hpp"

namespace szego {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::vector<double> trimmed(const std::vector<double> &c) {
    std::vector<double> out = c;
    while (out.size() > 1 && out.back() == 0.0)
        out.pop_back();
    return out;
}

double angular_distance(double a, double b) {
    double d = std::fabs(std::remainder(a - b, two_pi));
    return d;
}

} // namespace

cplx SingularFactor::chi() const { return std::polar(1.0, theta); }

cplx polyval(const std::vector<double> &coeffs, cplx z) {
    cplx s = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        s = s * z + *it;
    return s;
}

cplx RationalRegularPart::c1(cplx z) const { return polyval(p, z) / polyval(q, z); }

double RationalRegularPart::c(double theta) const { return std::norm(c1(std::polar(1.0, theta))); }

bool RationalRegularPart::is_constant() const {
    return trimmed(p).size() == 1 && trimmed(q).size() == 1;
}

std::vector<cplx> polynomial_roots(const std::vector<double> &coeffs) {
    std::vector<double> c = trimmed(coeffs);
    long d = static_cast<long>(c.size()) - 1;
    if (d <= 0)
        return {};
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
    for (long i = 1; i < d; ++i)
        C(i, i - 1) = 1.0;
    for (long i = 0; i < d; ++i)
        C(i, d - 1) = -c[i] / c[d];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    std::vector<cplx> roots(d);
    for (long i = 0; i < d; ++i)
        roots[i] = es.eigenvalues()[i];
    return roots;
}

std::vector<std::string> check_regular_part(const RationalRegularPart &r) {
    std::vector<std::string> errs;
    auto finite = [](const std::vector<double> &v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
    };
    if (r.p.empty() || r.q.empty()) {
        errs.push_back("regular part: p and q must be nonempty");
        return errs;
    }
    if (!finite(r.p) || !finite(r.q)) {
        errs.push_back("regular part: coefficients must be finite");
        return errs;
    }
    if (r.q[0] == 0.0)
        errs.push_back("regular part: Q(0) must be nonzero");
    if (trimmed(r.p).size() == 1 && r.p[0] == 0.0)
        errs.push_back("regular part: P must not vanish identically");
    if (!errs.empty())
        return errs;

    const int grid = 4096;
    double pmin = INFINITY, qmin = INFINITY;
    for (int i = 0; i < grid; ++i) {
        cplx z = std::polar(1.0, two_pi * i / grid);
        pmin = std::min(pmin, std::abs(polyval(r.p, z)));
        qmin = std::min(qmin, std::abs(polyval(r.q, z)));
    }
    if (pmin <= 1e-9)
        errs.push_back("regular part: P has a zero on the unit circle");
    if (qmin <= 1e-9)
        errs.push_back("regular part: Q has a zero on the unit circle");
    for (cplx z : polynomial_roots(r.q))
        if (std::abs(z) <= 1.0) {
            std::ostringstream os;
            os << "regular part: Q has a root " << z << " in the closed unit disk";
            errs.push_back(os.str());
        }
    for (cplx z : polynomial_roots(r.p))
        if (std::abs(z) <= 1.0) {
            std::ostringstream os;
            os << "regular part: P has a root " << z
               << " in the closed unit disk (1/c1 must be analytic)";
            errs.push_back(os.str());
        }
    return errs;
}

cplx pair_power(cplx chi_h, cplx chi_j, double e) {
    cplx w = 1.0 - std::conj(chi_h) * chi_j;
    if (w.imag() == 0.0 && w.real() <= 0.0)
        throw DomainError("pair_power: 1 - conj(chi_h) chi_j is a nonpositive real");
    return std::pow(w, e);
}

FHSymbol::FHSymbol(std::vector<SingularFactor> factors, RationalRegularPart regular,
                   SymbolOptions opts)
    : regular_(std::move(regular)) {
    std::vector<std::string> errs;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto &f = factors[i];
        if (!std::isfinite(f.theta) || !std::isfinite(f.alpha)) {
            errs.push_back("factor " + std::to_string(i) + ": non-finite value");
            continue;
        }
        if (f.alpha == 0.0)
            continue;
        bool alpha_ok = opts.allow_origin ? (f.alpha > -0.5 && f.alpha <= 0.5)
                                          : (f.alpha > -0.5 && f.alpha < 0.5);
        if (!alpha_ok)
            errs.push_back("factor " + std::to_string(i) + ": alpha must lie in (-1/2, 1/2)");
        bool theta_ok = opts.allow_origin ? (f.theta >= 0.0 && f.theta < two_pi)
                                          : (f.theta > 0.0 && f.theta < two_pi);
        if (!theta_ok)
            errs.push_back("factor " + std::to_string(i) + ": theta must lie in (0, 2 pi)");
        factors_.push_back(f);
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i].alpha != 0.0 && factors[j].alpha != 0.0 &&
                angular_distance(factors[i].theta, factors[j].theta) <= 1e-9)
                errs.push_back("factors " + std::to_string(i) + " and " + std::to_string(j) +
                               ": duplicate theta");
    for (auto &e : check_regular_part(regular_))
        errs.push_back(e);
    if (!errs.empty()) {
        std::string msg;
        for (auto &e : errs)
            msg += (msg.empty() ? "" : "; ") + e;
        throw DomainError(msg);
    }
    regular_.p = trimmed(regular_.p);
    regular_.q = trimmed(regular_.q);

    std::stable_sort(factors_.begin(), factors_.end(),
                     [](const SingularFactor &a, const SingularFactor &b) { return a.alpha > b.alpha; });
    if (!factors_.empty()) {
        double a1 = factors_.front().alpha;
        for (const auto &f : factors_) {
            double gap = a1 - f.alpha;
            if (gap <= 1e-12)
                ++m_;
            else if (gap <= 1e-6)
                near_tie_ = true;
        }
        if (near_tie_)
            warnings_.push_back("near tie in alpha_1: leading set is ill-separated");
    }

    for (const auto &v : {regular_.p, regular_.q})
        for (cplx z : polynomial_roots(v))
            decay_rate_ = std::max(decay_rate_, 1.0 / std::abs(z));

    for (std::size_t j = 0; j < factors_.size(); ++j) {
        cplx chi = factors_[j].chi();
        cplx a = regular_.c1(chi);
        for (std::size_t h = 0; h < factors_.size(); ++h)
            if (h != j)
                a *= pair_power(factors_[h].chi(), chi, factors_[h].alpha);
        amplitudes_.push_back(a);
    }
}

FHSymbol FHSymbol::gegenbauer(double alpha, double theta0, RationalRegularPart regular) {
    return FHSymbol({{theta0, alpha}, {two_pi - theta0, alpha}}, std::move(regular));
}

double FHSymbol::max_abs_alpha() const {
    double a = 0.0;
    for (const auto &f : factors_)
        a = std::max(a, std::fabs(f.alpha));
    return a;
}

double eval_symbol(const FHSymbol &symbol, double theta) {
    if (!std::isfinite(theta))
        throw DomainError("eval_symbol: theta must be finite");
    double v = symbol.regular().c(theta);
    for (const auto &f : symbol.factors()) {
        double d = std::remainder(theta - f.theta, two_pi);
        double dist = std::fabs(2.0 * std::sin(0.5 * d));
        if (d == 0.0) {
            if (f.alpha < 0.0)
                throw SingularPointError("eval_symbol: singular point at theta_j with alpha_j < 0");
            return 0.0;
        }
        v *= std::pow(dist, 2.0 * f.alpha);
    }
    return v;
}

double trig_power_sum(double beta, double theta, long M0, long M1) {
    cplx s = 0.0;
    for (long u = M0; u <= M1; ++u)
        s += std::pow(static_cast<double>(u), beta) *
             std::polar(1.0, std::remainder(theta * static_cast<double>(u), two_pi));
    return std::abs(s);
}

double abel_bound_constant(double theta) {
    return 4.0 / std::abs(1.0 - std::polar(1.0, theta));
}

bool FHSymbol::is_conjugate_symmetric() const {
    for (const auto &f : factors_) {
        bool found = false;
        for (const auto &g : factors_)
            if (g.alpha == f.alpha && std::fabs(std::remainder(f.theta + g.theta, 2.0 * std::numbers::pi)) <= 1e-12)
                found = true;
        if (!found)
            return false;
    }
    return true;
}

} // namespace szego
