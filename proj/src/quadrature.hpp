#pragma once

#include <vector>

namespace szego::detail {

struct LogGrid {
    std::vector<double> X; // nodes X0 e^t
    std::vector<double> w; // dX weights
};

// Gauss-Legendre nodes on [-1, 1] (Golub-Welsch)
void gauss_legendre(int n, std::vector<double> &x, std::vector<double> &w);

// [X0, X0 e^{panels * width}) with `per` nodes per panel, uniform in t = log(X / X0)
LogGrid log_grid(double X0, int panels = 80, int per = 8, double width = 1.0);

} // namespace szego::detail
