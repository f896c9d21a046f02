#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "superosc/bigfloat.hpp"

namespace superosc {

// A finite family of interpolation basis functions b_n. Registered families
// carry a big-float evaluator so the solver can rebuild the constraint matrix
// at extended precision; ad-hoc families may leave it empty.
struct BasisFamily {
    std::string name;
    int count = 0;
    std::function<double(int, double)> eval;
    std::function<BigFloat(int, const BigFloat&)> eval_big;
    std::optional<double> bandwidth;
    nlohmann::json params;  // enough to reconstruct via basis_from_json
};

using BasisFamilyPtr = std::shared_ptr<const BasisFamily>;

// Registered families. Indexing conventions:
//   monomial: b_n(t) = t^n, n = 0..N-1
//   gaussian: b_n(t) = exp(-(t - c_n)^2 / (2 w^2))
//   fourier:  b_0 = cos(w0 t), b_1 = sin(w0 t), b_2 = cos(2 w0 t), ...
//   sinc:     b_n(t) = sinc(band * (t - c_n))
BasisFamilyPtr make_monomial_basis(int count);
BasisFamilyPtr make_gaussian_basis(std::vector<double> centers, double width);
BasisFamilyPtr make_fourier_basis(double omega0, int count);
BasisFamilyPtr make_sinc_basis(double band, std::vector<double> centers);

// Reconstruct a registered family from {"family": name, "params": {...}}.
// Throws UnknownBasis for unregistered names.
BasisFamilyPtr basis_from_json(const nlohmann::json& j);

}  // namespace superosc
