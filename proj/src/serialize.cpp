#include "superosc/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "superosc/errors.hpp"

namespace superosc {

ordered_json signal_to_json(const Signal& s) {
    return std::visit(
        [](const auto& v) -> ordered_json {
            using T = std::decay_t<decltype(v)>;
            ordered_json j;
            if constexpr (std::is_same_v<T, HarmonicSum>) {
                j["type"] = "harmonic_sum";
                auto terms = ordered_json::array();
                for (const auto& tm : v.terms())
                    terms.push_back(ordered_json{{"amp", tm.amp}, {"freq", tm.freq},
                                                 {"phase", tm.phase}});
                j["terms"] = std::move(terms);
            } else if constexpr (std::is_same_v<T, SincSeries>) {
                j["type"] = "sinc_series";
                j["band"] = v.band();
                j["centers"] = v.centers();
                j["coeffs"] = v.coeffs();
            } else if constexpr (std::is_same_v<T, BasisSum>) {
                j["type"] = "basis_sum";
                j["family"] = v.family().name;
                j["params"] = v.family().params;
                j["coeffs"] = v.coeffs();
            } else {
                j["type"] = "product";
                auto factors = ordered_json::array();
                for (const auto& f : v.factors()) factors.push_back(signal_to_json(f));
                j["factors"] = std::move(factors);
            }
            return j;
        },
        s.node());
}

Signal signal_from_json(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "harmonic_sum") {
        std::vector<HarmonicTerm> terms;
        for (const auto& tj : j.at("terms"))
            terms.push_back({tj.at("amp").get<double>(), tj.at("freq").get<double>(),
                             tj.at("phase").get<double>()});
        return Signal(HarmonicSum(std::move(terms)));
    }
    if (type == "sinc_series") {
        return Signal(SincSeries(j.at("band").get<double>(),
                                 j.at("centers").get<std::vector<double>>(),
                                 j.at("coeffs").get<std::vector<double>>()));
    }
    if (type == "basis_sum") {
        return Signal(BasisSum(basis_from_json(j), j.at("coeffs").get<std::vector<double>>()));
    }
    if (type == "product") {
        std::vector<Signal> factors;
        for (const auto& fj : j.at("factors")) factors.push_back(signal_from_json(fj));
        return Signal(ProductSignal(std::move(factors)));
    }
    throw InvalidSpec("unknown signal type '" + type + "'");
}

ConstraintSet constraints_from_json(const nlohmann::json& j) {
    ConstraintSet cs;
    cs.points = j.at("points").get<std::vector<double>>();
    cs.amplitudes = j.at("amps").get<std::vector<double>>();
    cs.validate();
    return cs;
}

ordered_json constraints_to_json(const ConstraintSet& cs) {
    return ordered_json{{"points", cs.points}, {"amps", cs.amplitudes}};
}

ordered_json solve_report_to_json(const SolveReport& report) {
    return ordered_json{
        {"coefficients", report.coefficients},
        {"residual", report.residual},
        {"kappa", report.condition},
        {"solver_path", to_string(report.path)},
        {"precision_bits", report.precision_bits},
    };
}

std::string format_17g(double v) {
    char buf[40];
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

void dump_rec(const ordered_json& j, std::string& out, int indent, int depth) {
    const bool compact = indent < 0;
    const std::string pad(compact ? 0 : static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(compact ? 0 : static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += compact ? "{" : "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += compact ? "," : ",\n";
                first = false;
                out += pad_in;
                append_escaped(out, it.key());
                out += compact ? ":" : ": ";
                dump_rec(it.value(), out, indent, depth + 1);
            }
            out += compact ? "}" : "\n" + pad + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[";
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ", ";
                first = false;
                dump_rec(el, out, indent, depth + 1);
            }
            out += "]";
            return;
        }
        case nlohmann::json::value_t::string:
            append_escaped(out, j.get<std::string>());
            return;
        case nlohmann::json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case nlohmann::json::value_t::number_integer:
            out += std::to_string(j.get<long long>());
            return;
        case nlohmann::json::value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            return;
        case nlohmann::json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
            } else {
                out += format_17g(v);
            }
            return;
        }
        default:
            out += "null";
            return;
    }
}

}  // namespace

std::string dump_json_17g(const ordered_json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    out += "\n";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidSpec("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidSpec("cannot write file '" + path + "'");
    out << content;
}

}  // namespace superosc
