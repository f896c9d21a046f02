#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "superosc/quadrature.hpp"
#include "superosc/signal.hpp"

namespace superosc {

// Windowed Fourier data, a_w = integral over the window of f(t) e^{-i w t} dt.
struct Spectrum {
    std::vector<double> grid;                   // strictly increasing, >= 0
    std::vector<std::complex<double>> amps;
    std::optional<std::pair<double, double>> window;
};

// Single-frequency windowed transform. Harmonic sums use the exact closed
// form; everything else goes through adaptive quadrature.
std::complex<double> windowed_transform(const Signal& s, double t1, double t2, double omega,
                                        const QuadratureOptions& opts = {});

Spectrum numeric_spectrum(const Signal& s, std::pair<double, double> window,
                          std::span<const double> grid, const QuadratureOptions& opts = {});

// Max |f| over [a, b]: uniform scan at `oversampling` times the Nyquist
// density of the declared bandwidth, then golden-section ascent around the
// grid argmax. Deterministic. Requires oversampling >= 4.
double sup_norm_on(const Signal& s, double a, double b, int oversampling);

// sqrt of the integral of f^2 over [a, b], absolute tolerance `tol` on the
// squared integral.
double l2_norm_on(const Signal& s, double a, double b, double tol = 1e-10);

}  // namespace superosc
