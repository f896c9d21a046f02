#include "superosc/signal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "superosc/errors.hpp"

namespace superosc {

double sinc(double x) {
    if (std::abs(x) < 1e-8) {
        // Taylor: 1 - x^2/6, next term ~ x^4/120 < 1e-33
        return 1.0 - x * x / 6.0;
    }
    return std::sin(x) / x;
}

BigFloat sinc(const BigFloat& x) {
    if (x == 0) return BigFloat(1);
    return sin(x) / x;
}

// ---------------------------------------------------------------- HarmonicSum

HarmonicSum::HarmonicSum(std::vector<HarmonicTerm> terms) : terms_(std::move(terms)) {
    for (const auto& tm : terms_) {
        if (!std::isfinite(tm.freq) || tm.freq < 0.0)
            throw InvalidSpec("harmonic term frequency must be finite and >= 0");
        if (!std::isfinite(tm.amp) || !std::isfinite(tm.phase))
            throw InvalidSpec("harmonic term amplitude/phase must be finite");
    }
}

HarmonicSum HarmonicSum::sine(double freq, double zero_at) {
    // sin(freq*(t - t0)) = cos(freq*t - freq*t0 - pi/2)
    return HarmonicSum({{1.0, freq, -freq * zero_at - M_PI / 2.0}});
}

double HarmonicSum::evaluate(double t) const {
    double acc = 0.0;
    for (const auto& tm : terms_) acc += tm.amp * std::cos(tm.freq * t + tm.phase);
    return acc;
}

double HarmonicSum::bandwidth() const {
    double maxf = 0.0;
    for (const auto& tm : terms_) maxf = std::max(maxf, tm.freq);
    return maxf;
}

// ---------------------------------------------------------------- SincSeries

SincSeries::SincSeries(double band, std::vector<double> centers, std::vector<double> coeffs)
    : band_(band), centers_(std::move(centers)), coeffs_(std::move(coeffs)) {
    if (!(band_ > 0.0) || !std::isfinite(band_))
        throw InvalidSpec("sinc series bandwidth must be positive");
    if (centers_.size() != coeffs_.size())
        throw InvalidSpec("sinc series centers and coefficients must have equal length");
    if (!std::is_sorted(centers_.begin(), centers_.end(),
                        [](double a, double b) { return a <= b; }))
        throw InvalidSpec("sinc series centers must be strictly increasing");
}

double SincSeries::evaluate(double t) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < centers_.size(); ++k)
        acc += coeffs_[k] * sinc(band_ * (t - centers_[k]));
    return acc;
}

// ---------------------------------------------------------------- BasisSum

BasisSum::BasisSum(BasisFamilyPtr family, std::vector<double> coeffs)
    : family_(std::move(family)), coeffs_(std::move(coeffs)) {
    if (!family_) throw InvalidSpec("basis sum requires a family");
    if (static_cast<int>(coeffs_.size()) != family_->count)
        throw InvalidSpec("basis sum coefficient count must match family count");
}

double BasisSum::evaluate(double t) const {
    double acc = 0.0;
    for (int n = 0; n < family_->count; ++n) acc += coeffs_[n] * family_->eval(n, t);
    return acc;
}

double BasisSum::bandwidth() const { return family_->bandwidth.value_or(0.0); }

// ---------------------------------------------------------------- ProductSignal

ProductSignal::ProductSignal(std::vector<Signal> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw InvalidSpec("product signal requires at least one factor");
}

double ProductSignal::evaluate(double t) const {
    double acc = 1.0;
    for (const auto& f : factors_) acc *= f.evaluate(t);
    return acc;
}

double ProductSignal::bandwidth() const {
    double sum = 0.0;
    for (const auto& f : factors_) sum += f.declared_bandwidth();
    return sum;
}

// ---------------------------------------------------------------- Signal

double Signal::evaluate(double t) const {
    return std::visit([t](const auto& s) { return s.evaluate(t); }, node_);
}

double Signal::declared_bandwidth() const {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SincSeries>)
                return s.band();
            else
                return s.bandwidth();
        },
        node_);
}

bool is_square_integrable(const Signal& s) {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SincSeries>) {
                return true;
            } else if constexpr (std::is_same_v<T, BasisSum>) {
                const std::string& n = v.family().name;
                return n == "gaussian" || n == "sinc";
            } else if constexpr (std::is_same_v<T, ProductSignal>) {
                for (const auto& f : v.factors())
                    if (is_square_integrable(f)) return true;
                return false;
            } else {
                return false;  // harmonic sums do not decay
            }
        },
        s.node());
}

// ---------------------------------------------------------------- expansion

namespace {

// Canonical form: phase in (-pi/2, pi/2], sign absorbed into the amplitude,
// so cos(wt + p + pi) and -cos(wt + p) merge.
HarmonicTerm canonical(HarmonicTerm tm) {
    if (tm.freq < 0.0) {  // cos(-x) = cos(x)
        tm.freq = -tm.freq;
        tm.phase = -tm.phase;
    }
    tm.phase = std::remainder(tm.phase, 2.0 * M_PI);
    while (tm.phase > M_PI / 2.0) {
        tm.phase -= M_PI;
        tm.amp = -tm.amp;
    }
    while (tm.phase <= -M_PI / 2.0) {
        tm.phase += M_PI;
        tm.amp = -tm.amp;
    }
    return tm;
}

std::vector<HarmonicTerm> merge_terms(std::vector<HarmonicTerm> terms, double tol) {
    std::sort(terms.begin(), terms.end(), [](const HarmonicTerm& a, const HarmonicTerm& b) {
        if (a.freq != b.freq) return a.freq < b.freq;
        return a.phase < b.phase;
    });
    std::vector<HarmonicTerm> out;
    for (const auto& tm : terms) {
        if (!out.empty() && std::abs(out.back().freq - tm.freq) <= tol &&
            std::abs(out.back().phase - tm.phase) <= tol) {
            out.back().amp += tm.amp;
        } else {
            out.push_back(tm);
        }
    }
    return out;
}

// cos(a t + p) * cos(b t + q) = 1/2 cos((a-b)t + p-q) + 1/2 cos((a+b)t + p+q)
std::vector<HarmonicTerm> multiply_sums(const std::vector<HarmonicTerm>& lhs,
                                        const std::vector<HarmonicTerm>& rhs) {
    std::vector<HarmonicTerm> out;
    out.reserve(2 * lhs.size() * rhs.size());
    for (const auto& a : lhs) {
        for (const auto& b : rhs) {
            double half = 0.5 * a.amp * b.amp;
            out.push_back(canonical({half, a.freq - b.freq, a.phase - b.phase}));
            out.push_back(canonical({half, a.freq + b.freq, a.phase + b.phase}));
        }
    }
    return merge_terms(std::move(out), 1e-12);
}

}  // namespace

HarmonicSum expand_product(const ProductSignal& p, std::size_t term_cap) {
    std::size_t projected = 2;
    std::vector<const HarmonicSum*> factors;
    factors.reserve(p.factors().size());
    for (const auto& f : p.factors()) {
        if (!f.is<HarmonicSum>())
            throw InvalidSpec("expand_product requires every factor to be a harmonic sum");
        const auto& hs = f.as<HarmonicSum>();
        if (hs.terms().empty()) return HarmonicSum{};  // zero factor, zero product
        if (projected > term_cap / hs.terms().size())
            throw CapExceeded("expanded term count would exceed cap");
        projected *= hs.terms().size();
        factors.push_back(&hs);
    }

    std::vector<HarmonicTerm> acc;
    for (const auto& tm : factors.front()->terms()) acc.push_back(canonical(tm));
    acc = merge_terms(std::move(acc), 1e-12);
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = multiply_sums(acc, factors[i]->terms());
    return HarmonicSum(std::move(acc));
}

}  // namespace superosc
