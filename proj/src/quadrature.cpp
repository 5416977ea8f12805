#include "quadrature.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace szego::detail {

void gauss_legendre(int n, std::vector<double> &x, std::vector<double> &w) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        double b = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        x[i] = es.eigenvalues()[i];
        double v = es.eigenvectors()(0, i);
        w[i] = 2.0 * v * v;
    }
}

LogGrid log_grid(double X0, int panels, int per, double width) {
    std::vector<double> gx, gw;
    gauss_legendre(per, gx, gw);
    LogGrid g;
    for (int p = 0; p < panels; ++p)
        for (int i = 0; i < per; ++i) {
            double t = width * (p + 0.5 + 0.5 * gx[i]);
            double X = X0 * std::exp(t);
            g.X.push_back(X);
            g.w.push_back(0.5 * width * gw[i] * X);
        }
    return g;
}

} // namespace szego::detail
