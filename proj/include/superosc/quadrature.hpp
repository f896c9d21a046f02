#pragma once

#include <complex>
#include <functional>

namespace superosc {

struct QuadratureOptions {
    double abs_tol = 1e-10;   // absolute tolerance on the integral
    int panel_budget = 1 << 16;
    double omega_max = 0.0;   // oscillation hint: panel width capped at pi/(4*omega_max)
};

// Adaptive composite 16-node Gauss-Legendre with bisection on failure.
// Throws QuadratureFailure when the tolerance is not met within the budget.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, const QuadratureOptions& opts = {});

}  // namespace superosc
