#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superosc/signal.hpp"

namespace superosc {

enum class GenMethod { Mult, MinNorm };
std::string to_string(GenMethod m);

struct DynamicRangeMeasurement {
    GenMethod method = GenMethod::Mult;
    int n = 0;
    double compression = 0.0;  // zero spacing / signal Nyquist spacing pi/band
    double dynamic_range = 0.0;
    std::optional<double> kappa;  // min-norm only
    double stretch_lo = 0.0, stretch_hi = 0.0;
    double ref_lo = 0.0, ref_hi = 0.0;  // outer bounds of the two side intervals
    bool ok = false;
    std::string error;  // error kind when !ok
};

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int n_points = 0;
};

struct ScalingReport {
    std::vector<DynamicRangeMeasurement> rows;
    std::map<double, LineFit> fit_log_d_vs_n;          // per compression (fit A)
    std::map<int, LineFit> fit_log_d_vs_log_inv_c;     // per N (fit B)
};

// sup|f| over the reference interval divided by sup|f| over the stretch.
// Interval interiors must be disjoint; DegenerateStretch when the stretch sup
// underflows.
double dynamic_range(const Signal& s, std::pair<double, double> stretch,
                     std::pair<double, double> reference, int oversampling);

// Generates one signal per (N, compression) cell, packs N zeros (mult) or
// alternating +-1 constraints (min-norm) at spacing c * pi/band around 0,
// measures D against the two side intervals of width 2 pi N / band, and fits
// the scaling laws. Cells whose solver escalation fails are recorded as
// missing; fits need >= 4 surviving points.
ScalingReport scaling_experiment(GenMethod method, std::vector<int> ns, std::vector<double> cs,
                                 double band, int oversampling = 16);

// Single cell of the experiment, exposed for reuse.
DynamicRangeMeasurement measure_dynamic_range_cell(GenMethod method, int n, double compression,
                                                   double band, int oversampling);

// C = band_hz * log2(1 + snr), bits per unit time.
double shannon_hartley(double band_hz, double snr);

struct CapacityRow {
    int n = 0;
    double compression = 0.0;
    double stretch_duration = 0.0;  // tau = (N-1) s
    double total_duration = 0.0;    // tau_total, reference margins included
    double dynamic_range = 0.0;
    double bitrate = 0.0;           // N / tau_total
    double capacity_star = 0.0;     // band/(2pi) * log2(1 + D^2)
    double ratio = 0.0;             // bitrate / capacity_star
};

// Empirical datapoint for the generalized-capacity conjecture; nothing is
// asserted beyond the measurement.
CapacityRow capacity_consistency(int n, double compression, double band, int oversampling = 16);

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace superosc
