#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "superosc/quadrature.hpp"
#include "superosc/signal.hpp"

namespace superosc {

// Windowed-spectrum antisymmetry at a super-band frequency: the transform
// over the window and over the truncated complement should cancel.
struct AntisymmetryReport {
    double omega = 0.0;
    std::complex<double> inside;   // transform over [t1, t2]
    std::complex<double> outside;  // transform over [-T,t1] u [t2,T]
    double defect = 0.0;           // |inside + outside| / max(|inside|, 1e-30)
    double t_max = 0.0;
    bool truncation_dominated = false;  // signal not square integrable
};

// Requires omega above the declared bandwidth (BandViolation otherwise) and
// the window inside [-t_max, t_max].
AntisymmetryReport antisymmetry_report(const Signal& s, std::pair<double, double> window,
                                       double omega, double t_max,
                                       const QuadratureOptions& opts = {});

struct LocalFrequencySample {
    double t = 0.0;      // midpoint of a gap between consecutive zeros
    double omega = 0.0;  // pi / gap
};

// Zero-crossing based local frequency: sign changes on an oversampled grid,
// bisected to 1e-12 time accuracy. Empty when the signal does not change sign.
std::vector<LocalFrequencySample> local_frequency(const Signal& s, double a, double b,
                                                  int oversampling = 256);

}  // namespace superosc
