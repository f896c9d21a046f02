#include "superosc/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "superosc/errors.hpp"
#include "superosc/genadditive.hpp"
#include "superosc/genmult.hpp"
#include "superosc/spectrum.hpp"

namespace superosc {

std::string to_string(GenMethod m) {
    return m == GenMethod::Mult ? "mult" : "minnorm";
}

double dynamic_range(const Signal& s, std::pair<double, double> stretch,
                     std::pair<double, double> reference, int oversampling) {
    if (!(stretch.first < stretch.second) || !(reference.first < reference.second))
        throw InvalidSpec("intervals must be nonempty");
    const bool disjoint =
        reference.second <= stretch.first || stretch.second <= reference.first;
    if (!disjoint) throw InvalidSpec("stretch and reference interiors must be disjoint");
    if (oversampling < 16) throw InvalidSpec("oversampling must be >= 16");

    const double sup_stretch = sup_norm_on(s, stretch.first, stretch.second, oversampling);
    if (sup_stretch < 1e-300)
        throw DegenerateStretch("signal vanishes on the superoscillatory stretch");
    return sup_norm_on(s, reference.first, reference.second, oversampling) / sup_stretch;
}

namespace {

std::vector<double> centered_points(int n, double spacing) {
    std::vector<double> pts(n);
    for (int k = 0; k < n; ++k)
        pts[k] = (k - 0.5 * (n - 1)) * spacing;
    return pts;
}

}  // namespace

DynamicRangeMeasurement measure_dynamic_range_cell(GenMethod method, int n, double compression,
                                                   double band, int oversampling) {
    DynamicRangeMeasurement row;
    row.method = method;
    row.n = n;
    row.compression = compression;
    if (n < 1 || !(compression > 0.0) || !(band > 0.0))
        throw InvalidSpec("cell needs n >= 1, compression > 0, band > 0");

    const double s = compression * M_PI / band;  // spacing vs the signal Nyquist grid
    const std::vector<double> pts = centered_points(n, s);
    const double margin = 2.0 * M_PI * n / band;

    // a compressed stretch oscillates at ~pi/s; scan densely enough to see it
    const int osf = std::max(oversampling, static_cast<int>(std::ceil(4.0 / compression)));

    try {
        Signal sig;
        if (method == GenMethod::Mult) {
            ZeroSpec spec;
            spec.zeros = pts;
            spec.total_bandwidth = band;
            spec.family = FactorFamily::Sine;
            sig = generate_multiplicative(spec);
        } else {
            ConstraintSet cs;
            cs.points = pts;
            cs.amplitudes.resize(n);
            for (int m = 0; m < n; ++m) cs.amplitudes[m] = (m % 2 == 0) ? 1.0 : -1.0;
            auto [g, report] = generate_minnorm(cs, band);
            sig = std::move(g);
            row.kappa = report.condition;
        }

        // N = 1 has no stretch between zeros; use half a spacing around the point
        double s_lo = pts.front(), s_hi = pts.back();
        if (n == 1) {
            s_lo -= 0.5 * s;
            s_hi += 0.5 * s;
        }
        row.stretch_lo = s_lo;
        row.stretch_hi = s_hi;
        row.ref_lo = s_lo - margin;
        row.ref_hi = s_hi + margin;

        const double sup_stretch = sup_norm_on(sig, s_lo, s_hi, osf);
        if (sup_stretch < 1e-300)
            throw DegenerateStretch("signal vanishes on the superoscillatory stretch");
        const double sup_ref = std::max(sup_norm_on(sig, row.ref_lo, s_lo, osf),
                                        sup_norm_on(sig, s_hi, row.ref_hi, osf));
        row.dynamic_range = sup_ref / sup_stretch;
        row.ok = true;
    } catch (const Error& e) {
        row.ok = false;
        row.error = e.kind();
    }
    return row;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    LineFit fit;
    fit.n_points = static_cast<int>(x.size());
    if (x.size() != y.size() || x.size() < 2) throw InvalidSpec("fit needs >= 2 paired points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double p = fit.intercept + fit.slope * x[i];
        ss_res += (y[i] - p) * (y[i] - p);
        ss_tot += (y[i] - my) * (y[i] - my);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

ScalingReport scaling_experiment(GenMethod method, std::vector<int> ns, std::vector<double> cs,
                                 double band, int oversampling) {
    if (ns.empty() || cs.empty()) throw InvalidSpec("scaling experiment needs N and c ladders");
    for (double c : cs)
        if (!(c > 0.0 && c < 1.0))
            throw InvalidSpec("compression ladder entries must lie in (0, 1)");

    ScalingReport report;
    for (int n : ns)
        for (double c : cs)
            report.rows.push_back(measure_dynamic_range_cell(method, n, c, band, oversampling));

    // fit A: log D vs N at fixed c (N = 1 rows are degenerate, excluded)
    for (double c : cs) {
        std::vector<double> xs, ys;
        for (const auto& row : report.rows)
            if (row.ok && row.compression == c && row.n >= 2) {
                xs.push_back(row.n);
                ys.push_back(std::log(row.dynamic_range));
            }
        if (xs.size() >= 4) report.fit_log_d_vs_n[c] = fit_line(xs, ys);
    }
    // fit B: log D vs log(1/c) at fixed N
    for (int n : ns) {
        if (n < 2) continue;
        std::vector<double> xs, ys;
        for (const auto& row : report.rows)
            if (row.ok && row.n == n) {
                xs.push_back(std::log(1.0 / row.compression));
                ys.push_back(std::log(row.dynamic_range));
            }
        if (xs.size() >= 4) report.fit_log_d_vs_log_inv_c[n] = fit_line(xs, ys);
    }
    return report;
}

double shannon_hartley(double band_hz, double snr) {
    if (!(band_hz >= 0.0) || !std::isfinite(band_hz) || !(snr >= 0.0) || !std::isfinite(snr))
        throw InvalidSpec("bandwidth and SNR must be finite and non-negative");
    return band_hz * std::log2(1.0 + snr);
}

CapacityRow capacity_consistency(int n, double compression, double band, int oversampling) {
    DynamicRangeMeasurement cell =
        measure_dynamic_range_cell(GenMethod::MinNorm, n, compression, band, oversampling);
    if (!cell.ok) throw ResidualNotMet("min-norm generation failed for this cell: " + cell.error);

    CapacityRow row;
    row.n = n;
    row.compression = compression;
    row.stretch_duration = cell.stretch_hi - cell.stretch_lo;
    row.total_duration = cell.ref_hi - cell.ref_lo;
    row.dynamic_range = cell.dynamic_range;
    row.bitrate = n / row.total_duration;
    const double d = cell.dynamic_range;
    row.capacity_star = band / (2.0 * M_PI) * std::log2(1.0 + d * d);
    row.ratio = row.capacity_star > 0.0 ? row.bitrate / row.capacity_star : 0.0;
    return row;
}

}  // namespace superosc
