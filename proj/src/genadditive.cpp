#include "superosc/genadditive.hpp"

#include <algorithm>
#include <cmath>

#include "superosc/errors.hpp"
#include "superosc/linalg.hpp"
#include "superosc/spectrum.hpp"

namespace superosc {

void ConstraintSet::validate() const {
    if (points.empty()) throw InvalidSpec("constraint set needs at least one point");
    if (points.size() != amplitudes.size())
        throw InvalidSpec("constraint points and amplitudes must have equal length");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i] > points[i - 1]))
            throw InvalidSpec("constraint points must be strictly increasing");
    for (double a : amplitudes)
        if (!std::isfinite(a)) throw InvalidSpec("constraint amplitudes must be finite");
}

std::string to_string(SolverPath path) {
    switch (path) {
        case SolverPath::Plain: return "plain";
        case SolverPath::IterativelyRefined: return "iteratively-refined";
        case SolverPath::ExtendedPrecision: return "extended-precision";
    }
    return "unknown";
}

ConstraintMatrix build_matrix(BasisFamilyPtr basis, std::span<const double> points) {
    if (!basis) throw InvalidSpec("build_matrix requires a basis family");
    const int n = static_cast<int>(points.size());
    if (basis->count != n)
        throw InvalidSpec("basis count must equal the number of points");

    ConstraintMatrix m;
    m.n = n;
    m.basis = std::move(basis);
    m.points.assign(points.begin(), points.end());
    m.entries.resize(static_cast<std::size_t>(n) * n);
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col)
            m.entries[row * n + col] = m.basis->eval(col, m.points[row]);

    auto lu = lu_factor(m.entries, n);
    m.det_sign = lu.det_sign;
    m.log_abs_det = lu.log_abs_det;
    m.condition = lu.singular ? std::numeric_limits<double>::infinity()
                              : condest_one_norm(lu, m.entries);
    return m;
}

namespace {

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// residual max_m |B f - a| with the sum accumulated in long double
double residual_long_double(const ConstraintMatrix& m, std::span<const double> f,
                            std::span<const double> a) {
    long double worst = 0.0L;
    for (int row = 0; row < m.n; ++row) {
        long double acc = -static_cast<long double>(a[row]);
        for (int col = 0; col < m.n; ++col)
            acc += static_cast<long double>(m.at(row, col)) * static_cast<long double>(f[col]);
        worst = std::max(worst, std::abs(acc));
    }
    return static_cast<double>(worst);
}

double residual_double(const ConstraintMatrix& m, std::span<const double> f,
                       std::span<const double> a) {
    double worst = 0.0;
    for (int row = 0; row < m.n; ++row) {
        double acc = -a[row];
        for (int col = 0; col < m.n; ++col) acc += m.at(row, col) * f[col];
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

// Rebuild the matrix at the current BigFloat precision. Registered families
// re-evaluate entries exactly; ad-hoc families fall back to promoting the
// stored double entries.
std::vector<BigFloat> entries_big(const ConstraintMatrix& m) {
    std::vector<BigFloat> e(m.entries.size());
    if (m.basis && m.basis->eval_big) {
        for (int row = 0; row < m.n; ++row) {
            const BigFloat t(m.points[row]);
            for (int col = 0; col < m.n; ++col) e[row * m.n + col] = m.basis->eval_big(col, t);
        }
    } else {
        for (std::size_t i = 0; i < m.entries.size(); ++i) e[i] = BigFloat(m.entries[i]);
    }
    return e;
}

}  // namespace

SolveReport solve_constraints(const ConstraintMatrix& m, std::span<const double> amplitudes,
                              const SolveOptions& opts) {
    if (static_cast<int>(amplitudes.size()) != m.n)
        throw InvalidSpec("amplitude count must match matrix dimension");
    if (m.n == 0) throw InvalidSpec("empty constraint system");

    const double scale = max_abs(amplitudes);
    const double target = opts.residual_rel_tol * scale;

    SolveReport report;
    report.condition = m.condition;

    // plain double factorization
    auto lu = lu_factor(m.entries, m.n);
    if (lu.singular)
        throw SingularMatrix("constraint matrix is rank deficient at working precision");
    std::vector<double> f = lu_solve(lu, std::vector<double>(amplitudes.begin(), amplitudes.end()));
    report.coefficients = f;
    report.residual = residual_double(m, f, amplitudes);
    report.path = SolverPath::Plain;
    report.precision_bits = 53;
    if (report.residual <= target) return report;

    // iterative refinement, residuals in long double
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<double> r(m.n);
        for (int row = 0; row < m.n; ++row) {
            long double acc = static_cast<long double>(amplitudes[row]);
            for (int col = 0; col < m.n; ++col)
                acc -= static_cast<long double>(m.at(row, col)) * static_cast<long double>(f[col]);
            r[row] = static_cast<double>(acc);
        }
        std::vector<double> d = lu_solve(lu, std::move(r));
        for (int i = 0; i < m.n; ++i) f[i] += d[i];
        if (max_abs(d) <= 1e-18 * std::max(1.0, max_abs(f))) break;
    }
    {
        const double refined = residual_long_double(m, f, amplitudes);
        if (refined < report.residual || refined <= target) {
            report.coefficients = f;
            report.residual = refined;
            report.path = SolverPath::IterativelyRefined;
            report.precision_bits = 64;
        }
        if (report.residual <= target) return report;
    }

    // arbitrary precision: log2(kappa) + 64 bits, doubling on failure
    int bits = 128;
    if (std::isfinite(m.condition) && m.condition > 1.0)
        bits = std::max(bits, static_cast<int>(std::ceil(std::log2(m.condition))) + 64);
    bits = std::min(bits, opts.precision_cap_bits);

    while (true) {
        BigFloatPrecisionGuard guard(bits);
        std::vector<BigFloat> eb = entries_big(m);
        auto lub = lu_factor(eb, m.n);
        if (lub.singular)
            throw SingularMatrix("constraint matrix is rank deficient at extended precision");
        std::vector<BigFloat> ab(m.n);
        for (int i = 0; i < m.n; ++i) ab[i] = BigFloat(amplitudes[i]);
        std::vector<BigFloat> fb = lu_solve(lub, ab);

        BigFloat worst(0);
        for (int row = 0; row < m.n; ++row) {
            BigFloat acc = -ab[row];
            for (int col = 0; col < m.n; ++col) acc += eb[row * m.n + col] * fb[col];
            BigFloat mag = abs(acc);
            if (mag > worst) worst = mag;
        }
        const double res = to_double(worst);
        if (res <= target) {
            report.coefficients.resize(m.n);
            for (int i = 0; i < m.n; ++i) report.coefficients[i] = to_double(fb[i]);
            report.residual = res;
            report.path = SolverPath::ExtendedPrecision;
            report.precision_bits = bits;
            return report;
        }
        if (bits >= opts.precision_cap_bits)
            throw ResidualNotMet("residual target not met at the precision cap");
        bits = std::min(2 * bits, opts.precision_cap_bits);
    }
}

std::pair<Signal, SolveReport> generate_minnorm(const ConstraintSet& cs, double band,
                                                const SolveOptions& opts) {
    cs.validate();
    if (!(band > 0.0)) throw InvalidSpec("bandwidth must be positive");
    ConstraintMatrix m = build_matrix(make_sinc_basis(band, cs.points), cs.points);
    SolveReport report = solve_constraints(m, cs.amplitudes, opts);
    return {Signal(SincSeries(band, cs.points, report.coefficients)), std::move(report)};
}

std::pair<Signal, SolveReport> generate_generic(const BasisFamilyPtr& basis,
                                                const ConstraintSet& cs,
                                                const SolveOptions& opts) {
    cs.validate();
    if (!basis) throw UnknownBasis("no basis family given");
    ConstraintMatrix m = build_matrix(basis, cs.points);
    SolveReport report = solve_constraints(m, cs.amplitudes, opts);
    return {Signal(BasisSum(basis, report.coefficients)), std::move(report)};
}

double orthogonality_check(const Signal& minnorm, const Signal& h, double t_max,
                           const QuadratureOptions& opts) {
    if (!(t_max > 0.0)) throw InvalidSpec("truncation radius must be positive");
    QuadratureOptions o = opts;
    o.omega_max = std::max(o.omega_max,
                           2.0 * std::max(minnorm.declared_bandwidth(), h.declared_bandwidth()));

    const double ip = integrate(
        [&](double t) { return minnorm.evaluate(t) * h.evaluate(t); }, -t_max, t_max, o);
    const double nf = l2_norm_on(minnorm, -t_max, t_max, o.abs_tol);
    const double nh = l2_norm_on(h, -t_max, t_max, o.abs_tol);
    if (nf == 0.0 || nh == 0.0) return 0.0;
    return ip / (nf * nh);
}

double suggest_l2_truncation(const SincSeries& series, double rel_bound, bool* bound_met) {
    const double band = series.band();
    double coeff_sum = 0.0;
    double t_extent = 0.0;
    for (std::size_t k = 0; k < series.coeffs().size(); ++k) {
        coeff_sum += std::abs(series.coeffs()[k]);
        t_extent = std::max(t_extent, std::abs(series.centers()[k]));
    }

    // full-line norm^2 = (pi/band) c^T S c with S the sinc Gram matrix; bound
    // it below by evaluating the series at its own centers
    double norm_sq = 0.0;
    for (std::size_t k = 0; k < series.coeffs().size(); ++k)
        norm_sq += series.coeffs()[k] * series.evaluate(series.centers()[k]);
    norm_sq = std::abs(norm_sq) * M_PI / band;

    const double cap = 1e6 * M_PI / band;
    if (coeff_sum == 0.0 || norm_sq == 0.0) {
        if (bound_met) *bound_met = true;
        return std::min(cap, t_extent + 10.0 * M_PI / band);
    }

    // tail_norm^2 <= 2 * (coeff_sum/band)^2 / (T - t_extent)  (1/t envelope)
    const double target_sq = rel_bound * rel_bound * norm_sq;
    double t = t_extent + 2.0 * (coeff_sum / band) * (coeff_sum / band) / target_sq;
    const bool met = t <= cap;
    if (bound_met) *bound_met = met;
    return std::min(t, cap);
}

}  // namespace superosc
