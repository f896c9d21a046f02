#include "superosc/genmult.hpp"

#include <algorithm>
#include <cmath>

#include "superosc/errors.hpp"

namespace superosc {

namespace {

void validate(const ZeroSpec& spec) {
    if (spec.zeros.empty()) throw InvalidSpec("zero spec needs at least one zero");
    if (!(spec.total_bandwidth > 0.0) || !std::isfinite(spec.total_bandwidth))
        throw InvalidSpec("total bandwidth must be positive and finite");
    for (std::size_t i = 1; i < spec.zeros.size(); ++i)
        if (!(spec.zeros[i] > spec.zeros[i - 1]))
            throw InvalidSpec("zeros must be strictly increasing (duplicates not allowed)");
    if (spec.factor_bandwidths) {
        const auto& bw = *spec.factor_bandwidths;
        if (bw.size() != spec.zeros.size())
            throw InvalidSpec("factor bandwidth list must have one entry per zero");
        double sum = 0.0;
        for (double w : bw) {
            if (!(w > 0.0)) throw InvalidSpec("factor bandwidths must be positive");
            sum += w;
        }
        if (sum > spec.total_bandwidth * (1.0 + 1e-12))
            throw InvalidSpec("factor bandwidths must sum to <= total bandwidth");
    }
}

double factor_bandwidth(const ZeroSpec& spec, std::size_t n) {
    if (spec.factor_bandwidths) return (*spec.factor_bandwidths)[n];
    return spec.total_bandwidth / static_cast<double>(spec.zeros.size());
}

// sinc(u + pi) has a simple zero at u = 0 with derivative sinc'(pi) = -1/pi.
Signal shifted_sinc_factor(double band, double zero_at) {
    return Signal(SincSeries(band, {zero_at - M_PI / band}, {1.0}));
}

}  // namespace

Signal generate_multiplicative(const ZeroSpec& spec) {
    validate(spec);
    std::vector<Signal> factors;
    factors.reserve(spec.zeros.size());
    for (std::size_t n = 0; n < spec.zeros.size(); ++n) {
        const double wf = factor_bandwidth(spec, n);
        if (spec.family == FactorFamily::Sine)
            factors.emplace_back(HarmonicSum::sine(wf, spec.zeros[n]));
        else
            factors.emplace_back(shifted_sinc_factor(wf, spec.zeros[n]));
    }
    return Signal(ProductSignal(std::move(factors)));
}

double uniform_spacing(const std::vector<double>& zeros, double rel_tol) {
    if (zeros.size() < 2) throw NotUniform("spacing undefined for fewer than two zeros");
    const double s = zeros[1] - zeros[0];
    for (std::size_t i = 1; i + 1 < zeros.size(); ++i) {
        const double gap = zeros[i + 1] - zeros[i];
        if (std::abs(gap - s) > rel_tol * std::abs(s))
            throw NotUniform("zeros are not uniformly spaced");
    }
    return s;
}

double superoscillation_region_model(const ZeroSpec& spec, std::optional<double> spacing) {
    validate(spec);
    const std::size_t n = spec.zeros.size();
    const double s = spacing ? *spacing : uniform_spacing(spec.zeros);
    if (!(s > 0.0)) throw InvalidSpec("spacing must be positive");

    double prod = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double wf = factor_bandwidth(spec, k);
        // |g_n'(t_n)|: sine factor slope wf, shifted sinc slope wf/pi
        const double slope = (spec.family == FactorFamily::Sine) ? wf : wf / M_PI;
        prod *= slope * (s / 2.0);
    }
    return std::abs(prod);
}

}  // namespace superosc
