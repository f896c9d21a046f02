#include "superosc/linalg.hpp"

#include <algorithm>
#include <limits>

namespace superosc {

std::vector<double> lu_solve_transposed(const LuFactorization<double>& f, std::vector<double> b) {
    // A = P^T L U  =>  A^T = U^T L^T P, solve U^T y = b, L^T z = y, x = P^T z
    const int n = f.n;
    for (int i = 0; i < n; ++i) {
        double acc = b[i];
        for (int j = 0; j < i; ++j) acc -= f.lu[j * n + i] * b[j];
        b[i] = acc / f.lu[i * n + i];
    }
    for (int i = n - 2; i >= 0; --i) {
        double acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= f.lu[j * n + i] * b[j];
        b[i] = acc;
    }
    for (int k = n - 1; k >= 0; --k)
        if (f.pivots[k] != k) std::swap(b[k], b[f.pivots[k]]);
    return b;
}

double condest_one_norm(const LuFactorization<double>& f, const std::vector<double>& a) {
    const int n = f.n;
    if (f.singular) return std::numeric_limits<double>::infinity();

    double norm_a = 0.0;
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += std::abs(a[i * n + j]);
        norm_a = std::max(norm_a, col);
    }

    // Hager iteration for ||A^{-1}||_1
    std::vector<double> x(n, 1.0 / n);
    double est = 0.0;
    for (int iter = 0; iter < 6; ++iter) {
        std::vector<double> y = lu_solve(f, x);
        double y1 = 0.0;
        for (double v : y) y1 += std::abs(v);
        est = std::max(est, y1);
        std::vector<double> xi(n);
        for (int i = 0; i < n; ++i) xi[i] = (y[i] >= 0.0) ? 1.0 : -1.0;
        std::vector<double> z = lu_solve_transposed(f, std::move(xi));
        int jmax = 0;
        double zmax = 0.0, zdotx = 0.0;
        for (int i = 0; i < n; ++i) {
            if (std::abs(z[i]) > zmax) {
                zmax = std::abs(z[i]);
                jmax = i;
            }
            zdotx += z[i] * x[i];
        }
        if (zmax <= zdotx) break;
        std::fill(x.begin(), x.end(), 0.0);
        x[jmax] = 1.0;
    }
    return std::max(1.0, norm_a * est);
}

}  // namespace superosc
