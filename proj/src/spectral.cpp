#include "superosc/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "superosc/errors.hpp"
#include "superosc/spectrum.hpp"

namespace superosc {

AntisymmetryReport antisymmetry_report(const Signal& s, std::pair<double, double> window,
                                       double omega, double t_max,
                                       const QuadratureOptions& opts) {
    const auto [t1, t2] = window;
    if (!(t1 < t2)) throw InvalidSpec("window must satisfy t1 < t2");
    if (!(-t_max <= t1 && t2 <= t_max))
        throw InvalidSpec("window must lie inside [-t_max, t_max]");
    if (omega <= s.declared_bandwidth())
        throw BandViolation("antisymmetry is only claimed for frequencies above the bandlimit");

    AntisymmetryReport rep;
    rep.omega = omega;
    rep.t_max = t_max;
    rep.truncation_dominated = !is_square_integrable(s);
    rep.inside = windowed_transform(s, t1, t2, omega, opts);
    std::complex<double> outside{};
    if (-t_max < t1) outside += windowed_transform(s, -t_max, t1, omega, opts);
    if (t2 < t_max) outside += windowed_transform(s, t2, t_max, omega, opts);
    rep.outside = outside;
    rep.defect = std::abs(rep.inside + rep.outside) / std::max(std::abs(rep.inside), 1e-30);
    return rep;
}

namespace {

double bisect_zero(const Signal& s, double lo, double hi, double f_lo) {
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = s.evaluate(mid);
        if (fm == 0.0) return mid;
        if ((f_lo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<LocalFrequencySample> local_frequency(const Signal& s, double a, double b,
                                                  int oversampling) {
    if (!(a < b)) throw InvalidSpec("interval must satisfy a < b");
    if (oversampling < 4) throw InvalidSpec("oversampling must be >= 4");

    const double span = b - a;
    const double density = oversampling * std::max(s.declared_bandwidth() / M_PI, 1.0 / span);
    const long n = std::max(8L, static_cast<long>(std::ceil(span * density)));

    std::vector<double> zeros;
    double last_t = a;
    double last_v = s.evaluate(a);
    bool have_last = (last_v != 0.0);
    for (long i = 1; i <= n; ++i) {
        const double t = a + span * static_cast<double>(i) / static_cast<double>(n);
        const double v = s.evaluate(t);
        if (v == 0.0) continue;  // exact zero sample, bracket extends past it
        if (have_last && (last_v < 0.0) != (v < 0.0))
            zeros.push_back(bisect_zero(s, last_t, t, last_v));
        last_t = t;
        last_v = v;
        have_last = true;
    }

    std::vector<LocalFrequencySample> out;
    out.reserve(zeros.size() > 0 ? zeros.size() - 1 : 0);
    for (std::size_t i = 1; i < zeros.size(); ++i) {
        const double gap = zeros[i] - zeros[i - 1];
        if (gap > 0.0)
            out.push_back({0.5 * (zeros[i] + zeros[i - 1]), M_PI / gap});
    }
    return out;
}

}  // namespace superosc
