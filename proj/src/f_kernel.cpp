#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "hankel_fft.hpp"
#include "quadrature.hpp"
#include "szego/errors.hpp"
#include "szego/wiener_hopf.hpp"

namespace szego {

std::vector<FKernelResult> F_kernel_grid(long N, double alpha, const std::vector<double> &zs,
                                         int p_max, long n_max) {
    if (N < 1)
        throw DomainError("F_kernel: N must be >= 1");
    if (!(std::fabs(alpha) < 0.5))
        throw DomainError("F_kernel: alpha must lie in (-1/2, 1/2)");
    if (p_max < 0)
        throw DomainError("F_kernel: p_max must be >= 0");
    for (double z : zs)
        if (!(z >= 0.0 && z < 1.0))
            throw DomainError("F_kernel: z must lie in [0, 1)");
    if (n_max <= 0)
        n_max = std::max<long>(4 * N, 2048);

    const double Nd = static_cast<double>(N);
    std::vector<cplx> h(2 * n_max - 1);
    for (long t = 0; t < 2 * n_max - 1; ++t)
        h[t] = 1.0 / (Nd + 1.0 + t);
    detail::HankelFft knn(h, n_max, n_max);

    // indices beyond n_max on a logarithmic grid, X = N + 1 + x
    const auto grid = detail::log_grid(Nd + 1.0 + n_max - 0.5);
    const long Q = static_cast<long>(grid.X.size());
    Eigen::VectorXd X = Eigen::Map<const Eigen::VectorXd>(grid.X.data(), Q);
    Eigen::VectorXd wq = Eigen::Map<const Eigen::VectorXd>(grid.w.data(), Q);
    Eigen::MatrixXd Knf(n_max, Q), Kff(Q, Q);
    for (long i = 0; i < Q; ++i) {
        for (long n = 0; n < n_max; ++n)
            Knf(n, i) = 1.0 / (X[i] + n);
        for (long l = 0; l < Q; ++l)
            Kff(l, i) = 1.0 / (X[l] + X[i] - (Nd + 1.0));
    }
    Eigen::VectorXd wn(n_max);
    for (long n = 0; n < n_max; ++n)
        wn[n] = 1.0 / (Nd + 1.0 + n);
    Eigen::VectorXd wf = X.cwiseInverse();

    const double s2 = std::pow(std::sin(std::numbers::pi * alpha) / std::numbers::pi, 2);
    std::vector<cplx> in(n_max), out(n_max);
    auto apply = [&](Eigen::VectorXd &vn, Eigen::VectorXd &vf) {
        for (long n = 0; n < n_max; ++n)
            in[n] = vn[n];
        knn.apply(in.data(), out.data());
        Eigen::VectorXd wvf = wq.cwiseProduct(vf);
        Eigen::VectorXd rn = Knf * wvf;
        for (long n = 0; n < n_max; ++n)
            rn[n] += out[n].real();
        Eigen::VectorXd rf = Knf.transpose() * vn + Kff * wvf;
        vn = std::move(rn);
        vf = std::move(rf);
    };

    std::vector<FKernelResult> results;
    for (double z : zs) {
        Eigen::VectorXd vn(n_max), vf(Q);
        for (long n = 0; n < n_max; ++n)
            vn[n] = Nd / (Nd + 1.0 + n - Nd * z);
        for (long i = 0; i < Q; ++i)
            vf[i] = Nd / (X[i] - Nd * z);
        FKernelResult r;
        double weight = 1.0;
        for (int p = 0; p <= p_max; ++p) {
            if (p > 0) {
                apply(vn, vf);
                apply(vn, vf);
            }
            double near = wn.dot(vn);
            double far = (wq.cwiseProduct(wf)).dot(vf);
            r.terms.push_back(near + far);
            r.value += weight * (near + far);
            r.far_field += weight * far;
            weight *= s2;
        }
        if (s2 == 0.0) {
            r.truncation_error = 0.0;
        } else {
            // term ratios increase towards pi^2, the squared norm of the Hilbert matrix
            const double pi2 = std::numbers::pi * std::numbers::pi;
            double ratio = p_max >= 1 ? r.terms[p_max] / r.terms[p_max - 1] : pi2;
            double q = s2 * std::max(pi2, ratio);
            double last = std::pow(s2, p_max) * r.terms[p_max];
            r.truncation_error = q < 1.0 ? std::fabs(last) * q / (1.0 - q) : INFINITY;
        }
        r.weighted = s2 * r.value;
        results.push_back(std::move(r));
    }
    return results;
}

FKernelResult F_kernel(long N, double alpha, double z, int p_max, long n_max) {
    return F_kernel_grid(N, alpha, {z}, p_max, n_max).front();
}

} // namespace szego
