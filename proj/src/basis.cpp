#include "superosc/basis.hpp"

#include <cmath>

#include "superosc/errors.hpp"
#include "superosc/signal.hpp"

namespace superosc {

BasisFamilyPtr make_monomial_basis(int count) {
    if (count < 1) throw InvalidSpec("monomial basis needs count >= 1");
    auto f = std::make_shared<BasisFamily>();
    f->name = "monomial";
    f->count = count;
    f->eval = [](int n, double t) { return std::pow(t, n); };
    f->eval_big = [](int n, const BigFloat& t) -> BigFloat { return pow(t, n); };
    f->params = nlohmann::json{{"count", count}};
    return f;
}

BasisFamilyPtr make_gaussian_basis(std::vector<double> centers, double width) {
    if (centers.empty()) throw InvalidSpec("gaussian basis needs at least one center");
    if (!(width > 0.0)) throw InvalidSpec("gaussian basis width must be positive");
    auto f = std::make_shared<BasisFamily>();
    f->name = "gaussian";
    f->count = static_cast<int>(centers.size());
    f->params = nlohmann::json{{"centers", centers}, {"width", width}};
    auto cs = std::make_shared<std::vector<double>>(std::move(centers));
    f->eval = [cs, width](int n, double t) {
        const double u = (t - (*cs)[n]) / width;
        return std::exp(-0.5 * u * u);
    };
    f->eval_big = [cs, width](int n, const BigFloat& t) -> BigFloat {
        const BigFloat u = (t - BigFloat((*cs)[n])) / BigFloat(width);
        return exp(BigFloat(-0.5) * u * u);
    };
    return f;
}

BasisFamilyPtr make_fourier_basis(double omega0, int count) {
    if (!(omega0 > 0.0)) throw InvalidSpec("fourier basis needs omega0 > 0");
    if (count < 1) throw InvalidSpec("fourier basis needs count >= 1");
    auto f = std::make_shared<BasisFamily>();
    f->name = "fourier";
    f->count = count;
    // b_{2j} = cos((j+1) w0 t), b_{2j+1} = sin((j+1) w0 t)
    f->bandwidth = omega0 * ((count + 1) / 2);
    f->eval = [omega0](int n, double t) {
        const double w = omega0 * (n / 2 + 1);
        return (n % 2 == 0) ? std::cos(w * t) : std::sin(w * t);
    };
    f->eval_big = [omega0](int n, const BigFloat& t) -> BigFloat {
        const BigFloat w = BigFloat(omega0) * (n / 2 + 1);
        if (n % 2 == 0) return cos(w * t);
        return sin(w * t);
    };
    f->params = nlohmann::json{{"omega0", omega0}, {"count", count}};
    return f;
}

BasisFamilyPtr make_sinc_basis(double band, std::vector<double> centers) {
    if (!(band > 0.0)) throw InvalidSpec("sinc basis needs band > 0");
    if (centers.empty()) throw InvalidSpec("sinc basis needs at least one center");
    auto f = std::make_shared<BasisFamily>();
    f->name = "sinc";
    f->count = static_cast<int>(centers.size());
    f->bandwidth = band;
    f->params = nlohmann::json{{"band", band}, {"centers", centers}};
    auto cs = std::make_shared<std::vector<double>>(std::move(centers));
    f->eval = [cs, band](int n, double t) { return sinc(band * (t - (*cs)[n])); };
    f->eval_big = [cs, band](int n, const BigFloat& t) -> BigFloat {
        return sinc(BigFloat(band) * (t - BigFloat((*cs)[n])));
    };
    return f;
}

BasisFamilyPtr basis_from_json(const nlohmann::json& j) {
    const std::string name = j.at("family").get<std::string>();
    const nlohmann::json& p = j.at("params");
    if (name == "monomial") return make_monomial_basis(p.at("count").get<int>());
    if (name == "gaussian")
        return make_gaussian_basis(p.at("centers").get<std::vector<double>>(),
                                   p.at("width").get<double>());
    if (name == "fourier")
        return make_fourier_basis(p.at("omega0").get<double>(), p.at("count").get<int>());
    if (name == "sinc")
        return make_sinc_basis(p.at("band").get<double>(),
                               p.at("centers").get<std::vector<double>>());
    throw UnknownBasis("no registered basis family named '" + name + "'");
}

}  // namespace superosc
