#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "superosc/bigfloat.hpp"

namespace superosc {

// Dense row-major LU with partial pivoting, templated so the escalation
// ladder can run the identical algorithm at any precision.
template <class T>
struct LuFactorization {
    int n = 0;
    std::vector<T> lu;       // L below the diagonal (unit), U on and above
    std::vector<int> pivots; // row swapped into position k at step k
    bool singular = false;   // exact zero pivot
    int det_sign = 0;
    double log_abs_det = 0.0;
};

inline double to_double(double v) { return v; }
inline double to_double(const BigFloat& v) { return v.convert_to<double>(); }

template <class T>
LuFactorization<T> lu_factor(std::vector<T> a, int n) {
    using std::abs;
    using std::log;
    LuFactorization<T> f;
    f.n = n;
    f.lu = std::move(a);
    f.pivots.resize(n);
    f.det_sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        T best = abs(f.lu[k * n + k]);
        for (int i = k + 1; i < n; ++i) {
            T v = abs(f.lu[i * n + k]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        f.pivots[k] = piv;
        if (best == 0) {
            f.singular = true;
            f.det_sign = 0;
            f.log_abs_det = -std::numeric_limits<double>::infinity();
            return f;
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(f.lu[k * n + j], f.lu[piv * n + j]);
            f.det_sign = -f.det_sign;
        }
        const T& d = f.lu[k * n + k];
        if (d < 0) f.det_sign = -f.det_sign;
        T log_pivot = log(abs(d));
        f.log_abs_det += to_double(log_pivot);
        for (int i = k + 1; i < n; ++i) {
            T m = f.lu[i * n + k] / d;
            f.lu[i * n + k] = m;
            for (int j = k + 1; j < n; ++j) f.lu[i * n + j] -= m * f.lu[k * n + j];
        }
    }
    return f;
}

template <class T>
std::vector<T> lu_solve(const LuFactorization<T>& f, std::vector<T> b) {
    const int n = f.n;
    for (int k = 0; k < n; ++k)
        if (f.pivots[k] != k) std::swap(b[k], b[f.pivots[k]]);
    for (int i = 1; i < n; ++i) {
        T acc = b[i];
        for (int j = 0; j < i; ++j) acc -= f.lu[i * n + j] * b[j];
        b[i] = acc;
    }
    for (int i = n - 1; i >= 0; --i) {
        T acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= f.lu[i * n + j] * b[j];
        b[i] = acc / f.lu[i * n + i];
    }
    return b;
}

// Solve A^T x = b using the factorization of A (for the condition estimator).
std::vector<double> lu_solve_transposed(const LuFactorization<double>& f, std::vector<double> b);

// Hager/Higham style one-norm estimate of kappa_1(A) = ||A||_1 ||A^{-1}||_1.
double condest_one_norm(const LuFactorization<double>& f, const std::vector<double>& a);

}  // namespace superosc
