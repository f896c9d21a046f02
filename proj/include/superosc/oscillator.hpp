#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superosc/signal.hpp"

namespace superosc {

struct OscillatorConfig {
    double omega0 = 1.0;         // resonance, > 0
    double t_start = 0.0;
    double t_end = 1.0;
    double step = 1e-2;          // must satisfy step <= 2pi/(50 max(omega0, drive rate))
    double collision_rate = 0.0; // events per unit time, >= 0
    std::uint64_t seed = 0;
};

struct CollisionEvent {
    double time = 0.0;
    double banked_energy = 0.0;
};

struct OscillatorTrace {
    std::vector<double> times;
    std::vector<double> positions;
    std::vector<double> velocities;
    std::vector<double> energy;      // E = (v^2 + omega0^2 x^2)/2
    std::vector<double> dissipated;  // cumulative banked energy D
    std::vector<CollisionEvent> collisions;
    double drive_work = 0.0;  // integral of f(t) v(t) dt along the trajectory
};

// Integrates x'' + omega0^2 x = f(t) from rest with classic fixed-step RK4.
// With collision_rate > 0 the environment interrupts at exponential
// inter-arrival times (strong-collision model: energy banked into D, state
// reset to rest). Deterministic given the seed.
// max_drive_frequency_hint skips the local-frequency scan used to validate
// the step bound (sweeps pass the precomputed value).
OscillatorTrace simulate(const Signal& drive, const OscillatorConfig& cfg,
                         std::optional<double> max_drive_frequency_hint = std::nullopt);

// Largest local oscillation rate of the drive over the span, floored at the
// declared bandwidth. This is the rate entering the step-size invariant.
double max_drive_frequency(const Signal& drive, double t_start, double t_end);

struct AbsorptionRow {
    double collision_rate = 0.0;
    double mean_dissipated = 0.0;
    double std_dissipated = 0.0;
    int n_seeds = 0;
};

// Ensemble of simulate() runs per collision rate, seeds proto.seed + k.
// Requires >= 8 seeds per rung.
std::vector<AbsorptionRow> absorption_sweep(const Signal& drive, const OscillatorConfig& proto,
                                            std::span<const double> collision_rates, int n_seeds);

struct TimescaleEstimate {
    double length_m = 0.0;
    double speed_m_per_s = 0.0;
    double time_s = 0.0;  // = length / speed
    std::string label;
};

TimescaleEstimate timescale_estimate(double length_m, double speed_m_per_s, std::string label);

}  // namespace superosc
