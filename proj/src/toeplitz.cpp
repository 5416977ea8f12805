#include "szego/toeplitz.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>

#include "szego/errors.hpp"
#include "szego/series.hpp"

namespace szego {

cplx ToeplitzSystem::entry(long i, long j) const {
    long d = j - i;
    return d >= 0 ? first_row[d] : std::conj(first_row[-d]);
}

Eigen::MatrixXcd ToeplitzSystem::dense() const {
    Eigen::MatrixXcd T(N + 1, N + 1);
    for (long i = 0; i <= N; ++i)
        for (long j = 0; j <= N; ++j)
            T(i, j) = entry(i, j);
    return T;
}

ToeplitzSystem build_system(const FHSymbol &symbol, long N, long L, unsigned threads) {
    if (N < 0)
        throw DomainError("build_system: N must be >= 0");
    if (L < 2 * N)
        throw DomainError("build_system: L must be >= 2N");
    ToeplitzSystem sys;
    sys.N = N;
    sys.first_row = fhat_row(symbol, N, L, threads);
    sys.symbol = symbol;
    sys.L = L;
    return sys;
}

ToeplitzSystem build_system(const FHSymbol &symbol, long N) {
    return build_system(symbol, N, default_series_length(N));
}

ToeplitzSystem system_from_row(std::vector<cplx> first_row) {
    if (first_row.empty())
        throw DomainError("system_from_row: empty row");
    ToeplitzSystem sys;
    sys.N = static_cast<long>(first_row.size()) - 1;
    first_row[0] = first_row[0].real();
    sys.first_row = std::move(first_row);
    return sys;
}

std::vector<cplx> PredictorPolynomial::normalized() const {
    std::vector<cplx> out(first_column.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = first_column[k] / first_column[0];
    return out;
}

PredictorPolynomial levinson_first_column(const ToeplitzSystem &sys) {
    const long N = sys.N;
    const auto &r = sys.first_row;
    PredictorPolynomial pred;
    pred.N = N;
    // T_n a = (sigma_n, 0, .., 0)^T with a_0 = 1
    std::vector<cplx> a{1.0}, next;
    double sigma = r[0].real();
    if (!(sigma > 0.0))
        throw NotPositiveDefinite("levinson: fhat(0) must be positive");
    pred.error_sequence.push_back(sigma);
    a.reserve(N + 1);
    next.reserve(N + 1);
    for (long n = 0; n < N; ++n) {
        cplx delta = 0.0;
        for (long i = 0; i <= n; ++i)
            delta += std::conj(r[n + 1 - i]) * a[i];
        cplx rho = delta / sigma;
        next.assign(n + 2, 0.0);
        for (long i = 0; i <= n; ++i)
            next[i] = a[i];
        for (long i = 1; i <= n + 1; ++i)
            next[i] -= rho * std::conj(a[n + 1 - i]);
        double shrink = 1.0 - std::norm(rho);
        sigma *= shrink;
        if (!(sigma > 0.0) || !(shrink > 0.0))
            throw NotPositiveDefinite("levinson: prediction-error variance <= 0 at order " +
                                      std::to_string(n + 1));
        if (std::abs(rho) > 1.0 - 1e-12)
            pred.ill_conditioned = true;
        pred.reflection.push_back(rho);
        pred.error_sequence.push_back(sigma);
        a.swap(next);
    }
    pred.first_column.resize(N + 1);
    for (long k = 0; k <= N; ++k)
        pred.first_column[k] = a[k] / sigma;
    pred.first_column[0] = pred.first_column[0].real();
    pred.prediction_error = sigma;
    return pred;
}

Eigen::MatrixXcd dense_inverse_oracle(const ToeplitzSystem &sys) {
    if (sys.N > 512)
        throw DomainError("dense_inverse_oracle: N must be <= 512");
    Eigen::MatrixXcd T = sys.dense();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(T);
    if (!lu.isInvertible())
        throw NotPositiveDefinite("dense_inverse_oracle: singular matrix");
    return lu.inverse();
}

std::vector<cplx> last_column_from_first(const PredictorPolynomial &pred) {
    const long N = pred.N;
    std::vector<cplx> out(N + 1);
    for (long k = 0; k <= N; ++k)
        out[N - k] = std::conj(pred.first_column[k]);
    return out;
}

std::vector<cplx> reverse_conjugate(const std::vector<cplx> &c) {
    std::vector<cplx> out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        out[k] = std::conj(c[c.size() - 1 - k]);
    return out;
}

std::vector<cplx> szego_polynomial(const PredictorPolynomial &pred) {
    return reverse_conjugate(pred.normalized());
}

std::vector<cplx> predictor_from_last_column(const std::vector<cplx> &last) {
    std::vector<cplx> out(last.size());
    for (std::size_t k = 0; k < last.size(); ++k)
        out[k] = last[k] / last.back();
    return out;
}

std::vector<cplx> szego_zeros(const PredictorPolynomial &pred) {
    auto phi = szego_polynomial(pred); // monic
    const long N = pred.N;
    if (N == 0)
        return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(N, N);
    for (long i = 1; i < N; ++i)
        C(i, i - 1) = 1.0;
    for (long i = 0; i < N; ++i)
        C(i, N - 1) = -phi[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> z(N);
    for (long i = 0; i < N; ++i)
        z[i] = es.eigenvalues()[i];
    return z;
}

void write_first_column_csv(const std::string &path, const PredictorPolynomial &pred) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write " + path);
    os << "k,re,im\n" << std::setprecision(17);
    for (long k = 0; k <= pred.N; ++k)
        os << k << ',' << pred.first_column[k].real() << ',' << pred.first_column[k].imag() << '\n';
}

} // namespace szego
