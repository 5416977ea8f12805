#pragma once

#include <string>
#include <vector>

#include "szego/laurent_series.hpp"

namespace szego {

struct SingularFactor {
    double theta = 0.0; // radians
    double alpha = 0.0;

    cplx chi() const;
};

// c = |P/Q|^2 with real polynomials, coefficients ascending.
struct RationalRegularPart {
    std::vector<double> p{1.0};
    std::vector<double> q{1.0};

    static RationalRegularPart unit() { return {}; }
    static RationalRegularPart constant(double c1) { return {{c1}, {1.0}}; }

    cplx c1(cplx z) const;     // P(z)/Q(z)
    double c(double theta) const;
    bool is_constant() const;
};

struct SymbolOptions {
    // singularity at theta = 0, alpha = 1/2 admitted
    bool allow_origin = false;
};

// f(theta) = prod |1 - e^{i(theta - theta_j)}|^{2 alpha_j} * c(theta)
class FHSymbol {
public:
    FHSymbol() = default;
    FHSymbol(std::vector<SingularFactor> factors, RationalRegularPart regular,
             SymbolOptions opts = {});

    static FHSymbol unit() { return {}; }
    static FHSymbol gegenbauer(double alpha, double theta0,
                               RationalRegularPart regular = RationalRegularPart::unit());

    // sorted by alpha descending
    const std::vector<SingularFactor> &factors() const { return factors_; }
    const RationalRegularPart &regular() const { return regular_; }

    std::size_t M() const { return factors_.size(); }
    std::size_t m() const { return m_; }
    double alpha1() const { return factors_.empty() ? 0.0 : factors_.front().alpha; }
    double max_abs_alpha() const;

    // each factor has a partner at -theta with the same alpha, so f is even
    bool is_conjugate_symmetric() const;

    bool has_near_tie() const { return near_tie_; }
    const std::vector<std::string> &warnings() const { return warnings_; }

    // largest 1/|root| over roots of P and Q; 0 when both are constant
    double regular_decay_rate() const { return decay_rate_; }

    // Darboux amplitudes A_j = c1(chi_j) prod_{h != j} (1 - conj(chi_h) chi_j)^{alpha_h}
    const std::vector<cplx> &amplitudes() const { return amplitudes_; }

private:
    std::vector<SingularFactor> factors_;
    RationalRegularPart regular_;
    std::size_t m_ = 0;
    bool near_tie_ = false;
    std::vector<std::string> warnings_;
    double decay_rate_ = 0.0;
    std::vector<cplx> amplitudes_;
};

// Validation of the regular part; returns error messages (empty if valid).
std::vector<std::string> check_regular_part(const RationalRegularPart &r);

// Roots of an ascending-coefficient real polynomial (trailing zeros ignored).
std::vector<cplx> polynomial_roots(const std::vector<double> &coeffs);

cplx polyval(const std::vector<double> &coeffs, cplx z);

// (1 - conj(chi_h) chi_j)^{e}, principal branch; chi_h != chi_j
cplx pair_power(cplx chi_h, cplx chi_j, double e);

double eval_symbol(const FHSymbol &symbol, double theta);

// |sum_{u=M0}^{M1} u^beta chi^u|, summed in ascending u
double trig_power_sum(double beta, double theta, long M0, long M1);

// Abel summation constant: |sum| <= C(theta) * max(M0^beta, M1^beta)
double abel_bound_constant(double theta);

} // namespace szego
