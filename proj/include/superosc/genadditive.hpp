#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superosc/basis.hpp"
#include "superosc/quadrature.hpp"
#include "superosc/signal.hpp"

namespace superosc {

struct ConstraintSet {
    std::vector<double> points;      // strictly increasing sample times t_m
    std::vector<double> amplitudes;  // prescribed a_m

    void validate() const;
};

// B_{mn} = b_n(t_m) plus conditioning diagnostics. The basis handle is kept
// so the solver can re-evaluate entries at extended precision.
struct ConstraintMatrix {
    int n = 0;
    std::vector<double> entries;  // row-major
    double condition = 1.0;       // one-norm estimate, >= 1
    int det_sign = 0;
    double log_abs_det = 0.0;
    BasisFamilyPtr basis;
    std::vector<double> points;

    double at(int row, int col) const { return entries[row * n + col]; }
};

enum class SolverPath { Plain, IterativelyRefined, ExtendedPrecision };
std::string to_string(SolverPath path);

struct SolveOptions {
    double residual_rel_tol = 1e-8;  // target: residual <= tol * max|a|
    int precision_cap_bits = 4096;
};

struct SolveReport {
    std::vector<double> coefficients;
    double residual = 0.0;  // max_m |sum_n B_{mn} f_n - a_m|, re-evaluated at the
                            // working precision of the path that produced f
    double condition = 1.0;
    SolverPath path = SolverPath::Plain;
    int precision_bits = 53;
};

ConstraintMatrix build_matrix(BasisFamilyPtr basis, std::span<const double> points);

// Escalation ladder: plain LU -> iterative refinement with long double
// residuals -> MPFR solve at ceil(log2(kappa)) + 64 bits, doubling up to the
// cap. Throws SingularMatrix on exact rank deficiency, ResidualNotMet when
// the cap is exhausted.
SolveReport solve_constraints(const ConstraintMatrix& m, std::span<const double> amplitudes,
                              const SolveOptions& opts = {});

// Minimum-L2-norm bandlimited interpolant: sinc basis centered at the
// constraint points.
std::pair<Signal, SolveReport> generate_minnorm(const ConstraintSet& cs, double band,
                                                const SolveOptions& opts = {});

std::pair<Signal, SolveReport> generate_generic(const BasisFamilyPtr& basis,
                                                const ConstraintSet& cs,
                                                const SolveOptions& opts = {});

// Normalized inner product of the min-norm interpolant with an admissible
// perturbation over [-t_max, t_max]; near zero certifies first-order
// minimality. h must vanish at the constraint points and share the bandlimit.
double orthogonality_check(const Signal& minnorm, const Signal& h, double t_max,
                           const QuadratureOptions& opts = {});

// Truncation radius T such that the 1/t envelope bound on the series tail is
// below rel_bound times the full-line norm, capped at 1e6 * pi/band.
// bound_met reports whether the bound held before the cap.
double suggest_l2_truncation(const SincSeries& series, double rel_bound = 1e-6,
                             bool* bound_met = nullptr);

}  // namespace superosc
