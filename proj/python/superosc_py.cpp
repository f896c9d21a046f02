#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superosc/experiments.hpp"
#include "superosc/genadditive.hpp"
#include "superosc/genmult.hpp"
#include "superosc/oscillator.hpp"
#include "superosc/serialize.hpp"
#include "superosc/spectral.hpp"
#include "superosc/spectrum.hpp"
#include "superosc/version.hpp"

namespace py = pybind11;
using namespace superosc;

namespace {

FactorFamily family_from_string(const std::string& name) {
    if (name == "sine") return FactorFamily::Sine;
    if (name == "sinc") return FactorFamily::ShiftedSinc;
    throw InvalidSpec("factor family must be 'sine' or 'sinc'");
}

py::dict report_dict(const SolveReport& r) {
    py::dict d;
    d["coefficients"] = r.coefficients;
    d["residual"] = r.residual;
    d["kappa"] = r.condition;
    d["solver_path"] = to_string(r.path);
    d["precision_bits"] = r.precision_bits;
    return d;
}

py::dict trace_dict(const OscillatorTrace& tr) {
    py::dict d;
    d["t"] = tr.times;
    d["x"] = tr.positions;
    d["v"] = tr.velocities;
    d["E"] = tr.energy;
    d["D"] = tr.dissipated;
    d["drive_work"] = tr.drive_work;
    std::vector<double> ct;
    for (const auto& c : tr.collisions) ct.push_back(c.time);
    d["collision_times"] = ct;
    return d;
}

}  // namespace

PYBIND11_MODULE(_superosc, m) {
    m.doc() = "superoscillatory bandlimited signal synthesis and analysis";
    m.attr("__version__") = kVersion;

    py::class_<Signal>(m, "Signal")
        .def("evaluate", &Signal::evaluate, py::arg("t"))
        .def("evaluate",
             [](const Signal& s, const std::vector<double>& ts) {
                 std::vector<double> out;
                 out.reserve(ts.size());
                 for (double t : ts) out.push_back(s.evaluate(t));
                 return out;
             },
             py::arg("ts"))
        .def("declared_bandwidth", &Signal::declared_bandwidth)
        .def("to_json", [](const Signal& s) { return dump_json_17g(signal_to_json(s), -1); })
        .def_static("from_json",
                    [](const std::string& text) {
                        return signal_from_json(nlohmann::json::parse(text));
                    })
        .def("__repr__", [](const Signal& s) {
            return "<superosc.Signal band=" + format_17g(s.declared_bandwidth()) + ">";
        });

    m.def(
        "generate_multiplicative",
        [](const std::vector<double>& zeros, double band, const std::string& family) {
            ZeroSpec spec;
            spec.zeros = zeros;
            spec.total_bandwidth = band;
            spec.family = family_from_string(family);
            return generate_multiplicative(spec);
        },
        py::arg("zeros"), py::arg("band"), py::arg("family") = "sine");

    m.def(
        "generate_minnorm",
        [](const std::vector<double>& points, const std::vector<double>& amps, double band) {
            auto [sig, rep] = generate_minnorm(ConstraintSet{points, amps}, band);
            return py::make_tuple(sig, report_dict(rep));
        },
        py::arg("points"), py::arg("amps"), py::arg("band"));

    m.def(
        "generate_basis",
        [](const std::string& family_json, const std::vector<double>& points,
           const std::vector<double>& amps) {
            auto family = basis_from_json(nlohmann::json::parse(family_json));
            auto [sig, rep] = generate_generic(family, ConstraintSet{points, amps});
            return py::make_tuple(sig, report_dict(rep));
        },
        py::arg("family_json"), py::arg("points"), py::arg("amps"),
        "family_json: {\"family\": name, \"params\": {...}}");

    m.def("expand_product",
          [](const Signal& s) {
              if (!s.is<ProductSignal>())
                  throw InvalidSpec("expand_product expects a product signal");
              return Signal(expand_product(s.as<ProductSignal>()));
          },
          py::arg("signal"));

    m.def("sup_norm_on", &sup_norm_on, py::arg("signal"), py::arg("a"), py::arg("b"),
          py::arg("oversampling") = 32);
    m.def("l2_norm_on", &l2_norm_on, py::arg("signal"), py::arg("a"), py::arg("b"),
          py::arg("tol") = 1e-10);
    m.def(
        "windowed_transform",
        [](const Signal& s, double t1, double t2, double omega) {
            return windowed_transform(s, t1, t2, omega);
        },
        py::arg("signal"), py::arg("t1"), py::arg("t2"), py::arg("omega"));

    m.def(
        "antisymmetry_report",
        [](const Signal& s, double t1, double t2, double omega, double t_max) {
            const AntisymmetryReport r = antisymmetry_report(s, {t1, t2}, omega, t_max);
            py::dict d;
            d["omega"] = r.omega;
            d["a_in"] = r.inside;
            d["a_out"] = r.outside;
            d["defect"] = r.defect;
            d["t_max"] = r.t_max;
            d["truncation_dominated"] = r.truncation_dominated;
            return d;
        },
        py::arg("signal"), py::arg("t1"), py::arg("t2"), py::arg("omega"), py::arg("t_max"));

    m.def(
        "local_frequency",
        [](const Signal& s, double a, double b, int oversampling) {
            std::vector<std::pair<double, double>> out;
            for (const auto& smp : local_frequency(s, a, b, oversampling))
                out.emplace_back(smp.t, smp.omega);
            return out;
        },
        py::arg("signal"), py::arg("a"), py::arg("b"), py::arg("oversampling") = 256);

    m.def(
        "simulate",
        [](const Signal& drive, double omega0, double t_start, double t_end, double step,
           double collision_rate, std::uint64_t seed) {
            OscillatorConfig cfg{omega0, t_start, t_end, step, collision_rate, seed};
            return trace_dict(simulate(drive, cfg));
        },
        py::arg("drive"), py::arg("omega0"), py::arg("t_start"), py::arg("t_end"),
        py::arg("step"), py::arg("collision_rate") = 0.0, py::arg("seed") = 0);

    m.def(
        "absorption_sweep",
        [](const Signal& drive, double omega0, double t_start, double t_end, double step,
           const std::vector<double>& rates, int n_seeds, std::uint64_t seed) {
            OscillatorConfig proto{omega0, t_start, t_end, step, 0.0, seed};
            py::list rows;
            for (const auto& r : absorption_sweep(drive, proto, rates, n_seeds)) {
                py::dict d;
                d["collision_rate"] = r.collision_rate;
                d["mean_D"] = r.mean_dissipated;
                d["std_D"] = r.std_dissipated;
                d["n_seeds"] = r.n_seeds;
                rows.append(d);
            }
            return rows;
        },
        py::arg("drive"), py::arg("omega0"), py::arg("t_start"), py::arg("t_end"),
        py::arg("step"), py::arg("rates"), py::arg("n_seeds") = 8, py::arg("seed") = 0);

    m.def(
        "timescale_estimate",
        [](double length_m, double speed, const std::string& label) {
            const TimescaleEstimate e = timescale_estimate(length_m, speed, label);
            py::dict d;
            d["label"] = e.label;
            d["length_m"] = e.length_m;
            d["speed_m_per_s"] = e.speed_m_per_s;
            d["time_s"] = e.time_s;
            return d;
        },
        py::arg("length_m"), py::arg("speed_m_per_s"), py::arg("label") = "");

    m.def("shannon_hartley", &shannon_hartley, py::arg("band_hz"), py::arg("snr"));

    m.def(
        "dynamic_range",
        [](const Signal& s, std::pair<double, double> stretch,
           std::pair<double, double> reference, int oversampling) {
            return dynamic_range(s, stretch, reference, oversampling);
        },
        py::arg("signal"), py::arg("stretch"), py::arg("reference"),
        py::arg("oversampling") = 32);

    m.def(
        "scaling_experiment",
        [](const std::string& method, const std::vector<int>& ns, const std::vector<double>& cs,
           double band, int oversampling) {
            const GenMethod gm = method == "minnorm" ? GenMethod::MinNorm : GenMethod::Mult;
            const ScalingReport rep = scaling_experiment(gm, ns, cs, band, oversampling);
            py::list rows;
            for (const auto& r : rep.rows) {
                py::dict d;
                d["method"] = to_string(r.method);
                d["n"] = r.n;
                d["c"] = r.compression;
                d["ok"] = r.ok;
                if (r.ok) d["D"] = r.dynamic_range;
                if (r.kappa) d["kappa"] = *r.kappa;
                rows.append(d);
            }
            py::dict fits_a, fits_b;
            for (const auto& [c, f] : rep.fit_log_d_vs_n)
                fits_a[py::float_(c)] = py::make_tuple(f.slope, f.intercept, f.r_squared);
            for (const auto& [n, f] : rep.fit_log_d_vs_log_inv_c)
                fits_b[py::int_(n)] = py::make_tuple(f.slope, f.intercept, f.r_squared);
            py::dict out;
            out["rows"] = rows;
            out["fit_log_D_vs_N"] = fits_a;
            out["fit_log_D_vs_log_inv_c"] = fits_b;
            return out;
        },
        py::arg("method"), py::arg("ns"), py::arg("cs"), py::arg("band"),
        py::arg("oversampling") = 16);

    m.def(
        "capacity_consistency",
        [](int n, double compression, double band) {
            const CapacityRow r = capacity_consistency(n, compression, band);
            py::dict d;
            d["n"] = r.n;
            d["c"] = r.compression;
            d["D"] = r.dynamic_range;
            d["tau"] = r.stretch_duration;
            d["tau_total"] = r.total_duration;
            d["bitrate"] = r.bitrate;
            d["c_star"] = r.capacity_star;
            d["ratio"] = r.ratio;
            return d;
        },
        py::arg("n"), py::arg("compression"), py::arg("band"));
}
