#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "superosc/basis.hpp"

namespace superosc {

// sin(x)/x with sinc(0) = 1 (unnormalized convention).
double sinc(double x);
BigFloat sinc(const BigFloat& x);

class Signal;

struct HarmonicTerm {
    double amp = 0.0;
    double freq = 0.0;   // angular frequency, rad per unit time, >= 0
    double phase = 0.0;  // rad
};

// Finite sum of cosines: sum_k amp_k * cos(freq_k * t + phase_k).
class HarmonicSum {
public:
    HarmonicSum() = default;
    explicit HarmonicSum(std::vector<HarmonicTerm> terms);

    static HarmonicSum sine(double freq, double zero_at);  // sin(freq*(t - zero_at))

    double evaluate(double t) const;
    double bandwidth() const;  // max term frequency, 0 for empty sum

    const std::vector<HarmonicTerm>& terms() const { return terms_; }

private:
    std::vector<HarmonicTerm> terms_;
};

// Bandlimited series f(t) = sum_k c_k * sinc(band * (t - t_k)).
class SincSeries {
public:
    SincSeries() = default;
    SincSeries(double band, std::vector<double> centers, std::vector<double> coeffs);

    double evaluate(double t) const;
    double band() const { return band_; }

    const std::vector<double>& centers() const { return centers_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

private:
    double band_ = 1.0;
    std::vector<double> centers_;
    std::vector<double> coeffs_;
};

// Linear combination over a registered basis family: sum_n f_n b_n(t).
class BasisSum {
public:
    BasisSum() = default;
    BasisSum(BasisFamilyPtr family, std::vector<double> coeffs);

    double evaluate(double t) const;
    double bandwidth() const;  // 0 when the family declares none

    const BasisFamily& family() const { return *family_; }
    BasisFamilyPtr family_ptr() const { return family_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

private:
    BasisFamilyPtr family_;
    std::vector<double> coeffs_;
};

// Product of signals; bandwidth is additive over factors.
class ProductSignal {
public:
    ProductSignal() = default;
    explicit ProductSignal(std::vector<Signal> factors);

    double evaluate(double t) const;
    double bandwidth() const;

    const std::vector<Signal>& factors() const { return factors_; }

private:
    std::vector<Signal> factors_;
};

class Signal {
public:
    using Node = std::variant<HarmonicSum, SincSeries, BasisSum, ProductSignal>;

    Signal() : node_(HarmonicSum{}) {}
    Signal(HarmonicSum s) : node_(std::move(s)) {}
    Signal(SincSeries s) : node_(std::move(s)) {}
    Signal(BasisSum s) : node_(std::move(s)) {}
    Signal(ProductSignal s) : node_(std::move(s)) {}

    double evaluate(double t) const;
    double declared_bandwidth() const;

    const Node& node() const { return node_; }

    template <class T> bool is() const { return std::holds_alternative<T>(node_); }
    template <class T> const T& as() const { return std::get<T>(node_); }

private:
    Node node_;
};

// True when the tails are square integrable on the line: sinc series and
// gaussian basis sums decay, harmonic sums do not, a product decays if at
// least one factor does (all variants are bounded).
bool is_square_integrable(const Signal& s);

inline constexpr std::size_t kDefaultExpandCap = std::size_t{1} << 22;

// Exact product-to-sum expansion of a product of harmonic sums. Terms with
// matching (frequency, canonical phase) merge; the result is pointwise equal
// to the product and certifies the bandlimit exactly.
// Throws CapExceeded when 2 * prod(term counts) exceeds the cap, InvalidSpec
// when a factor is not a HarmonicSum.
HarmonicSum expand_product(const ProductSignal& p, std::size_t term_cap = kDefaultExpandCap);

}  // namespace superosc
