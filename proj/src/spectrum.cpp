#include "superosc/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "superosc/errors.hpp"

namespace superosc {

namespace {

using cdouble = std::complex<double>;

// integral of e^{i alpha t} over [t1, t2]
cdouble phase_integral(double alpha, double t1, double t2) {
    if (alpha == 0.0) return {t2 - t1, 0.0};
    const cdouble i{0.0, 1.0};
    return (std::exp(i * (alpha * t2)) - std::exp(i * (alpha * t1))) / (i * alpha);
}

cdouble harmonic_transform(const HarmonicSum& hs, double t1, double t2, double omega) {
    // A cos(wt+p) e^{-i omega t} = A/2 [e^{ip} e^{i(w-omega)t} + e^{-ip} e^{-i(w+omega)t}]
    const cdouble i{0.0, 1.0};
    cdouble acc{};
    for (const auto& tm : hs.terms()) {
        acc += 0.5 * tm.amp *
               (std::exp(i * tm.phase) * phase_integral(tm.freq - omega, t1, t2) +
                std::exp(-i * tm.phase) * phase_integral(-(tm.freq + omega), t1, t2));
    }
    return acc;
}

}  // namespace

std::complex<double> windowed_transform(const Signal& s, double t1, double t2, double omega,
                                        const QuadratureOptions& opts) {
    if (!(t1 < t2)) throw InvalidSpec("window must satisfy t1 < t2");
    if (s.is<HarmonicSum>()) return harmonic_transform(s.as<HarmonicSum>(), t1, t2, omega);

    QuadratureOptions o = opts;
    o.omega_max = std::max({o.omega_max, std::abs(omega), s.declared_bandwidth()});
    return integrate_complex(
        [&s, omega](double t) {
            const double v = s.evaluate(t);
            return cdouble{v * std::cos(omega * t), -v * std::sin(omega * t)};
        },
        t1, t2, o);
}

Spectrum numeric_spectrum(const Signal& s, std::pair<double, double> window,
                          std::span<const double> grid, const QuadratureOptions& opts) {
    if (!(window.first < window.second)) throw InvalidSpec("window must satisfy t1 < t2");
    if (grid.empty()) throw InvalidSpec("frequency grid must be nonempty");
    if (!std::is_sorted(grid.begin(), grid.end(),
                        [](double a, double b) { return a <= b; }))
        throw InvalidSpec("frequency grid must be strictly increasing");

    Spectrum out;
    out.window = window;
    out.grid.assign(grid.begin(), grid.end());
    out.amps.reserve(grid.size());
    for (double w : grid)
        out.amps.push_back(windowed_transform(s, window.first, window.second, w, opts));
    return out;
}

double sup_norm_on(const Signal& s, double a, double b, int oversampling) {
    if (!(a < b)) throw InvalidSpec("interval must satisfy a < b");
    if (oversampling < 4) throw InvalidSpec("oversampling must be >= 4");

    const double span = b - a;
    const double density = oversampling * std::max(s.declared_bandwidth() / M_PI, 1.0 / span);
    const long n = std::max(2L, static_cast<long>(std::ceil(span * density)));

    double best = 0.0;
    long best_i = 0;
    for (long i = 0; i <= n; ++i) {
        const double t = a + span * static_cast<double>(i) / static_cast<double>(n);
        const double v = std::abs(s.evaluate(t));
        if (v > best) {
            best = v;
            best_i = i;
        }
    }

    // golden-section ascent on |f| around the grid argmax
    const double step = span / static_cast<double>(n);
    double lo = std::max(a, a + step * static_cast<double>(best_i - 1));
    double hi = std::min(b, a + step * static_cast<double>(best_i + 1));
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = std::abs(s.evaluate(x1));
    double f2 = std::abs(s.evaluate(x2));
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = std::abs(s.evaluate(x2));
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = std::abs(s.evaluate(x1));
        }
    }
    return std::max({best, f1, f2});
}

double l2_norm_on(const Signal& s, double a, double b, double tol) {
    if (!(a < b)) throw InvalidSpec("interval must satisfy a < b");
    QuadratureOptions opts;
    opts.abs_tol = tol;
    opts.omega_max = 2.0 * s.declared_bandwidth();
    const double sq = integrate([&s](double t) {
        const double v = s.evaluate(t);
        return v * v;
    }, a, b, opts);
    return std::sqrt(std::max(0.0, sq));
}

}  // namespace superosc
