#pragma once

#include <optional>
#include <vector>

#include "superosc/signal.hpp"

namespace superosc {

enum class FactorFamily { Sine, ShiftedSinc };

// Prescription for the multiplicative construction: N zero crossings and a
// total bandwidth split across N factors (equal split unless overridden).
struct ZeroSpec {
    std::vector<double> zeros;  // strictly increasing
    double total_bandwidth = 0.0;
    FactorFamily family = FactorFamily::Sine;
    // optional unequal split; must have one entry per zero, each > 0,
    // summing to <= total_bandwidth
    std::optional<std::vector<double>> factor_bandwidths;
};

// Product of N factors of bandwidth Omega/N, factor n vanishing at zeros[n]:
//   Sine:        g_n(t) = sin((Omega/N)(t - t_n))
//   ShiftedSinc: g_n(t) = sinc((Omega/N)(t - t_n) + pi)
// The result has declared bandwidth Omega and vanishes at every prescribed zero.
Signal generate_multiplicative(const ZeroSpec& spec);

// First-order amplitude model for the superoscillatory region:
// prod_n |g_n'(t_n)| * (s/2)^N, with s the uniform zero spacing. A diagnostic
// only; `spacing` overrides the inferred spacing (required for N = 1).
// Throws NotUniform when the zero spacing varies by more than 1e-9 relative.
double superoscillation_region_model(const ZeroSpec& spec,
                                     std::optional<double> spacing = std::nullopt);

// Spacing helpers shared by the experiments module.
double uniform_spacing(const std::vector<double>& zeros, double rel_tol = 1e-9);

}  // namespace superosc
