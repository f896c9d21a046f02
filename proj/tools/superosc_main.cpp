#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "superosc/errors.hpp"
#include "superosc/experiments.hpp"
#include "superosc/genadditive.hpp"
#include "superosc/genmult.hpp"
#include "superosc/oscillator.hpp"
#include "superosc/serialize.hpp"
#include "superosc/spectral.hpp"
#include "superosc/spectrum.hpp"
#include "superosc/version.hpp"

namespace {

using superosc::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Binds CLI flags so that a JSON config file can fill any flag not given on
// the command line, and the fully resolved values can be echoed into outputs.
class ConfigBinder {
public:
    template <class T>
    CLI::Option* bind(CLI::App* cmd, const std::string& flag, T& target,
                      const std::string& desc) {
        CLI::Option* opt = cmd->add_option(flag, target, desc);
        record(cmd, key_of(flag), opt, target);
        return opt;
    }

    template <class T>
    CLI::Option* bind_flag(CLI::App* cmd, const std::string& flag, T& target,
                           const std::string& desc) {
        CLI::Option* opt = cmd->add_flag(flag, target, desc);
        record(cmd, key_of(flag), opt, target);
        return opt;
    }

    // Fill unset options of `cmd` (and globals) from a flat JSON object;
    // unknown keys are usage errors.
    void apply_config(const nlohmann::json& config, const std::string& subcommand) {
        if (!config.is_object()) throw UsageError("config file must hold a JSON object");
        for (auto it = config.begin(); it != config.end(); ++it) {
            const Entry* entry = find(subcommand, it.key());
            if (!entry) entry = find("", it.key());
            if (!entry)
                throw UsageError("unknown config key '" + it.key() + "' for subcommand '" +
                                 subcommand + "'");
            if (entry->option->count() == 0) entry->setter(it.value());
        }
    }

    // Resolved values for the echo, restricted to globals + one subcommand.
    ordered_json echo(const std::string& subcommand) const {
        ordered_json out;
        for (const std::string& owner : {std::string(), subcommand}) {
            auto scope = entries_.find(owner);
            if (scope == entries_.end()) continue;
            for (const auto& [key, entry] : scope->second) out[key] = entry.getter();
        }
        return out;
    }

private:
    struct Entry {
        CLI::Option* option;
        std::function<void(const nlohmann::json&)> setter;
        std::function<ordered_json()> getter;
    };

    const Entry* find(const std::string& owner, const std::string& key) const {
        auto scope = entries_.find(owner);
        if (scope == entries_.end()) return nullptr;
        auto it = scope->second.find(key);
        return it == scope->second.end() ? nullptr : &it->second;
    }

    static std::string key_of(const std::string& flag) {
        std::string k = flag;
        // take the last comma-separated long name
        auto pos = k.rfind(',');
        if (pos != std::string::npos) k = k.substr(pos + 1);
        while (!k.empty() && k.front() == '-') k.erase(k.begin());
        return k;
    }

    template <class T>
    void record(CLI::App* cmd, const std::string& key, CLI::Option* opt, T& target) {
        Entry e;
        e.option = opt;
        e.setter = [&target](const nlohmann::json& v) { target = v.get<T>(); };
        e.getter = [&target]() { return ordered_json(target); };
        const std::string owner = cmd->get_parent() ? cmd->get_name() : "";
        entries_[owner][key] = std::move(e);
    }

    std::map<std::string, std::map<std::string, Entry>> entries_;
};

std::string out_dir_prefixed(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("SUPEROSC_OUT_DIR");
    if (!dir || !*dir) return path;
    return std::string(dir) + "/" + path;
}

ordered_json run_config_echo(const ConfigBinder& binder, const std::string& subcommand) {
    ordered_json cfg;
    cfg["tool"] = superosc::kToolName;
    cfg["version"] = superosc::kVersion;
    cfg["command"] = subcommand;
    cfg["parameters"] = binder.echo(subcommand);
    return cfg;
}

void write_json_output(const std::string& path, const ordered_json& config,
                       const ordered_json& payload) {
    ordered_json doc;
    doc["config"] = config;
    for (auto it = payload.begin(); it != payload.end(); ++it) doc[it.key()] = it.value();
    superosc::write_text_file(out_dir_prefixed(path), superosc::dump_json_17g(doc));
}

void write_csv_output(const std::string& path, const ordered_json& config,
                      const std::string& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string text = header + "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) text.push_back(',');
            text += row[i];
        }
        text.push_back('\n');
    }
    const std::string full = out_dir_prefixed(path);
    superosc::write_text_file(full, text);
    superosc::write_text_file(full + ".meta.json",
                              superosc::dump_json_17g(ordered_json{{"config", config}}));
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    if (out.empty()) throw UsageError("expected a comma-separated list of numbers");
    return out;
}

// "2..8" (inclusive range) or "2,4,8"
std::vector<int> parse_int_list(const std::string& text) {
    auto dots = text.find("..");
    std::vector<int> out;
    if (dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        for (int n = lo; n <= hi; ++n) out.push_back(n);
    } else {
        for (double v : parse_double_list(text)) out.push_back(static_cast<int>(v));
    }
    if (out.empty()) throw UsageError("expected an integer list or lo..hi range");
    return out;
}

std::vector<double> load_zeros(const std::string& spec) {
    std::ifstream probe(spec);
    if (probe.good()) {
        const nlohmann::json j = nlohmann::json::parse(superosc::read_text_file(spec));
        if (j.is_array()) return j.get<std::vector<double>>();
        return j.at("zeros").get<std::vector<double>>();
    }
    return parse_double_list(spec);
}

superosc::Signal load_signal(const std::string& path) {
    return superosc::signal_from_json(nlohmann::json::parse(superosc::read_text_file(path)));
}

// uniform sample grid at `oversampling` times the Nyquist density
std::vector<std::vector<std::string>> sample_rows(const superosc::Signal& sig, double lo,
                                                  double hi, int oversampling) {
    if (!(lo < hi)) throw UsageError("--range must satisfy a < b");
    const double span = hi - lo;
    const double density =
        oversampling * std::max(sig.declared_bandwidth() / M_PI, 1.0 / span);
    const long n = std::max(2L, static_cast<long>(std::ceil(span * density)));
    std::vector<std::vector<std::string>> rows;
    rows.reserve(n + 1);
    for (long i = 0; i <= n; ++i) {
        const double t = lo + span * static_cast<double>(i) / static_cast<double>(n);
        rows.push_back({superosc::format_17g(t), superosc::format_17g(sig.evaluate(t))});
    }
    return rows;
}

struct Options {
    // globals
    std::string config_path;
    int oversample = 32;
    double quad_tol = 1e-10;
    int precision_cap = 4096;

    // generate
    std::string method = "mult";
    double band = 0.0;
    double band_hz = 0.0;
    std::string zeros;
    std::string family = "sine";
    std::string constraints_path;
    std::string basis_name;
    std::string basis_centers;
    double basis_width = 1.0;
    double basis_omega0 = 1.0;
    double basis_band = 0.0;
    std::string out;
    std::string report_path;
    std::string samples_path;
    std::vector<double> range;

    // analyze
    std::string signal_path;
    std::vector<double> window;
    double freq = 0.0;
    double tmax = 0.0;
    std::vector<double> local_freq;

    // oscillate
    double omega0 = 1.0;
    std::vector<double> span;
    double step = 1e-2;
    double collision_rate = 0.0;
    std::string collision_ladder;
    int seeds = 1;
    std::uint64_t seed = 0;

    // estimate
    double length = 0.0;
    double speed = 0.0;
    std::string label;

    // scaling / capacity
    std::string n_list;
    std::string compression_list;
    double snr = 0.0;
    double tau = 0.0;
    std::string fits_path;
};

double resolve_band(const Options& opt) {
    if (opt.band_hz > 0.0) return 2.0 * M_PI * opt.band_hz;
    if (opt.band > 0.0) return opt.band;
    throw UsageError("a positive --band (rad/unit-time) or --band-hz is required");
}

int cmd_generate(const Options& opt, const ordered_json& echo) {
    using namespace superosc;
    if (opt.out.empty()) throw UsageError("generate requires --out");
    const SolveOptions solve_opts{1e-8, opt.precision_cap};

    Signal sig;
    std::optional<SolveReport> report;
    if (opt.method == "mult") {
        ZeroSpec spec;
        spec.zeros = load_zeros(opt.zeros);
        spec.total_bandwidth = resolve_band(opt);
        if (opt.family == "sine")
            spec.family = FactorFamily::Sine;
        else if (opt.family == "sinc")
            spec.family = FactorFamily::ShiftedSinc;
        else
            throw UsageError("--family must be sine or sinc");
        sig = generate_multiplicative(spec);
    } else if (opt.method == "minnorm") {
        if (opt.constraints_path.empty()) throw UsageError("minnorm requires --constraints");
        const ConstraintSet cs = constraints_from_json(
            nlohmann::json::parse(read_text_file(opt.constraints_path)));
        auto [s, r] = generate_minnorm(cs, resolve_band(opt), solve_opts);
        sig = std::move(s);
        report = std::move(r);
    } else if (opt.method == "basis") {
        if (opt.constraints_path.empty()) throw UsageError("basis requires --constraints");
        const ConstraintSet cs = constraints_from_json(
            nlohmann::json::parse(read_text_file(opt.constraints_path)));
        const int n = static_cast<int>(cs.points.size());
        BasisFamilyPtr family;
        if (opt.basis_name == "monomial") {
            family = make_monomial_basis(n);
        } else if (opt.basis_name == "gaussian") {
            if (opt.basis_centers.empty()) throw UsageError("gaussian basis needs --basis-centers");
            family = make_gaussian_basis(parse_double_list(opt.basis_centers), opt.basis_width);
        } else if (opt.basis_name == "fourier") {
            family = make_fourier_basis(opt.basis_omega0, n);
        } else if (opt.basis_name == "sinc") {
            if (opt.basis_centers.empty()) throw UsageError("sinc basis needs --basis-centers");
            const double b = opt.basis_band > 0.0 ? opt.basis_band : resolve_band(opt);
            family = make_sinc_basis(b, parse_double_list(opt.basis_centers));
        } else {
            throw UnknownBasis("no registered basis family named '" + opt.basis_name + "'");
        }
        auto [s, r] = generate_generic(family, cs, solve_opts);
        sig = std::move(s);
        report = std::move(r);
    } else {
        throw UsageError("--method must be mult, minnorm or basis");
    }

    ordered_json payload = signal_to_json(sig);
    write_json_output(opt.out, echo, payload);
    if (!opt.report_path.empty() && report)
        write_json_output(opt.report_path, echo,
                          ordered_json{{"solve", solve_report_to_json(*report)}});
    if (!opt.samples_path.empty()) {
        if (opt.range.size() != 2) throw UsageError("--samples requires --range a b");
        write_csv_output(opt.samples_path, echo, "t,f",
                         sample_rows(sig, opt.range[0], opt.range[1], opt.oversample));
    }
    return 0;
}

int cmd_analyze(const Options& opt, const ordered_json& echo) {
    using namespace superosc;
    if (opt.signal_path.empty()) throw UsageError("analyze requires --signal");
    const Signal sig = load_signal(opt.signal_path);
    QuadratureOptions qopts;
    qopts.abs_tol = opt.quad_tol;

    if (opt.local_freq.size() == 2) {
        const auto samples =
            local_frequency(sig, opt.local_freq[0], opt.local_freq[1], opt.oversample);
        std::vector<std::vector<std::string>> rows;
        rows.reserve(samples.size());
        for (const auto& s : samples)
            rows.push_back({format_17g(s.t), format_17g(s.omega)});
        if (opt.out.empty()) {
            std::cout << "t,omega_local\n";
            for (const auto& r : rows) std::cout << r[0] << "," << r[1] << "\n";
        } else {
            write_csv_output(opt.out, echo, "t,omega_local", rows);
        }
        return 0;
    }

    if (opt.window.size() != 2) throw UsageError("analyze requires --window t1 t2 or --local-freq a b");
    if (!(opt.tmax > 0.0)) throw UsageError("analyze requires --tmax");
    const AntisymmetryReport rep = antisymmetry_report(
        sig, {opt.window[0], opt.window[1]}, opt.freq, opt.tmax, qopts);
    ordered_json payload{
        {"omega", rep.omega},
        {"a_in", ordered_json{{"re", rep.inside.real()}, {"im", rep.inside.imag()}}},
        {"a_out", ordered_json{{"re", rep.outside.real()}, {"im", rep.outside.imag()}}},
        {"defect", rep.defect},
        {"t_max", rep.t_max},
        {"truncation_dominated", rep.truncation_dominated},
    };
    if (opt.out.empty())
        std::cout << dump_json_17g(payload);
    else
        write_json_output(opt.out, echo, ordered_json{{"antisymmetry", payload}});
    return 0;
}

int cmd_oscillate(const Options& opt, const ordered_json& echo) {
    using namespace superosc;
    if (opt.signal_path.empty()) throw UsageError("oscillate requires --signal");
    if (opt.span.size() != 2) throw UsageError("oscillate requires --span a b");
    if (opt.out.empty()) throw UsageError("oscillate requires --out");
    const Signal sig = load_signal(opt.signal_path);

    OscillatorConfig cfg;
    cfg.omega0 = opt.omega0;
    cfg.t_start = opt.span[0];
    cfg.t_end = opt.span[1];
    cfg.step = opt.step;
    cfg.collision_rate = opt.collision_rate;
    cfg.seed = opt.seed;

    if (!opt.collision_ladder.empty()) {
        const std::vector<double> ladder = parse_double_list(opt.collision_ladder);
        const auto rows = absorption_sweep(sig, cfg, ladder, opt.seeds);
        std::vector<std::vector<std::string>> cells;
        cells.reserve(rows.size());
        for (const auto& r : rows)
            cells.push_back({format_17g(r.collision_rate), format_17g(r.mean_dissipated),
                             format_17g(r.std_dissipated), std::to_string(r.n_seeds)});
        write_csv_output(opt.out, echo, "lambda,mean_D,std_D,n_seeds", cells);
        return 0;
    }

    const OscillatorTrace trace = simulate(sig, cfg);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(trace.times.size());
    for (std::size_t i = 0; i < trace.times.size(); ++i)
        rows.push_back({format_17g(trace.times[i]), format_17g(trace.positions[i]),
                        format_17g(trace.velocities[i]), format_17g(trace.energy[i]),
                        format_17g(trace.dissipated[i])});
    write_csv_output(opt.out, echo, "t,x,v,E,D", rows);
    return 0;
}

int cmd_estimate(const Options& opt, const ordered_json& echo) {
    using namespace superosc;
    const TimescaleEstimate est = timescale_estimate(opt.length, opt.speed, opt.label);
    const ordered_json payload{
        {"label", est.label},
        {"length_m", est.length_m},
        {"speed_m_per_s", est.speed_m_per_s},
        {"time_s", est.time_s},
    };
    if (opt.out.empty())
        std::cout << dump_json_17g(payload);
    else
        write_json_output(opt.out, echo, ordered_json{{"estimate", payload}});
    return 0;
}

int cmd_scaling(const Options& opt, const ordered_json& echo) {
    using namespace superosc;
    if (opt.out.empty()) throw UsageError("scaling requires --out");
    const GenMethod method = opt.method == "minnorm" ? GenMethod::MinNorm : GenMethod::Mult;
    if (opt.method != "mult" && opt.method != "minnorm")
        throw UsageError("--method must be mult or minnorm");
    const ScalingReport report =
        scaling_experiment(method, parse_int_list(opt.n_list),
                           parse_double_list(opt.compression_list), resolve_band(opt),
                           std::max(16, opt.oversample));

    std::vector<std::vector<std::string>> rows;
    rows.reserve(report.rows.size());
    for (const auto& r : report.rows) {
        rows.push_back({to_string(r.method), std::to_string(r.n), format_17g(r.compression),
                        r.ok ? format_17g(r.dynamic_range) : "",
                        r.kappa ? format_17g(*r.kappa) : "", format_17g(r.ref_lo),
                        format_17g(r.ref_hi)});
    }
    write_csv_output(opt.out, echo, "method,N,c,D,kappa,ref_lo,ref_hi", rows);

    ordered_json fits;
    auto fit_json = [](const LineFit& f) {
        return ordered_json{{"slope", f.slope},
                            {"intercept", f.intercept},
                            {"r_squared", f.r_squared},
                            {"n_points", f.n_points}};
    };
    auto fit_a = ordered_json::array();
    for (const auto& [c, f] : report.fit_log_d_vs_n) {
        ordered_json row = fit_json(f);
        row["compression"] = c;
        fit_a.push_back(row);
    }
    auto fit_b = ordered_json::array();
    for (const auto& [n, f] : report.fit_log_d_vs_log_inv_c) {
        ordered_json row = fit_json(f);
        row["n"] = n;
        fit_b.push_back(row);
    }
    fits["fit_log_D_vs_N"] = fit_a;
    fits["fit_log_D_vs_log_inv_c"] = fit_b;
    const std::string fits_path =
        opt.fits_path.empty() ? opt.out + ".fits.json" : opt.fits_path;
    write_json_output(fits_path, echo, ordered_json{{"fits", fits}});
    return 0;
}

int cmd_capacity(const Options& opt, const ordered_json& echo) {
    using namespace superosc;
    const double c = shannon_hartley(opt.band_hz, opt.snr);
    const ordered_json payload{{"capacity_bits_per_s", c}};
    if (opt.out.empty())
        std::cout << dump_json_17g(payload, -1);
    else
        write_json_output(opt.out, echo, payload);
    return 0;
}

int cmd_capacity_consistency(const Options& opt, const ordered_json& echo) {
    using namespace superosc;
    if (opt.out.empty()) throw UsageError("capacity-consistency requires --out");
    const double band = resolve_band(opt);
    const std::vector<int> ns = parse_int_list(opt.n_list);

    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        double compression;
        if (opt.tau > 0.0) {
            if (ns[i] < 2) throw UsageError("--tau requires every N >= 2");
            compression = (opt.tau / (ns[i] - 1)) * band / M_PI;
        } else if (!opt.compression_list.empty()) {
            const auto cs = parse_double_list(opt.compression_list);
            if (cs.size() != 1 && cs.size() != ns.size())
                throw UsageError("--compression needs one value or one per N");
            compression = cs.size() == 1 ? cs[0] : cs[i];
        } else {
            throw UsageError("capacity-consistency needs --compression or --tau");
        }
        const CapacityRow row =
            capacity_consistency(ns[i], compression, band, std::max(16, opt.oversample));
        rows.push_back({std::to_string(row.n), format_17g(row.compression),
                        format_17g(row.dynamic_range), format_17g(row.stretch_duration),
                        format_17g(row.total_duration), format_17g(row.bitrate),
                        format_17g(row.capacity_star), format_17g(row.ratio)});
    }
    write_csv_output(opt.out, echo, "N,c,D,tau,tau_total,bitrate,c_star,ratio", rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superoscillation synthesis and analysis"};
    app.require_subcommand(0, 1);

    Options opt;
    ConfigBinder binder;

    binder.bind(&app, "--config", opt.config_path, "JSON config supplying any flag");
    binder.bind(&app, "--oversample", opt.oversample, "sup-norm / sampling oversampling");
    binder.bind(&app, "--quad-tol", opt.quad_tol, "quadrature absolute tolerance");
    binder.bind(&app, "--precision-cap", opt.precision_cap, "solver precision cap in bits");

    CLI::App* generate = app.add_subcommand("generate", "synthesize a signal");
    binder.bind(generate, "--method", opt.method, "mult | minnorm | basis");
    binder.bind(generate, "--band", opt.band, "bandwidth in rad/unit-time");
    binder.bind(generate, "--band-hz", opt.band_hz, "bandwidth in Hz (times 2pi)");
    binder.bind(generate, "--zeros", opt.zeros, "zeros file or inline list (mult)");
    binder.bind(generate, "--family", opt.family, "factor family: sine | sinc");
    binder.bind(generate, "--constraints", opt.constraints_path, "constraints JSON file");
    binder.bind(generate, "--basis", opt.basis_name, "monomial | gaussian | fourier | sinc");
    binder.bind(generate, "--basis-centers", opt.basis_centers, "basis centers list");
    binder.bind(generate, "--basis-width", opt.basis_width, "gaussian basis width");
    binder.bind(generate, "--basis-omega0", opt.basis_omega0, "fourier basis fundamental");
    binder.bind(generate, "--basis-band", opt.basis_band, "sinc basis bandwidth");
    binder.bind(generate, "--out", opt.out, "output signal JSON");
    binder.bind(generate, "--report", opt.report_path, "solve report JSON (minnorm/basis)");
    binder.bind(generate, "--samples", opt.samples_path, "samples CSV path");
    binder.bind(generate, "--range", opt.range, "sampling range a b")->expected(2);

    CLI::App* analyze = app.add_subcommand("analyze", "windowed spectra and local frequency");
    binder.bind(analyze, "--signal", opt.signal_path, "signal JSON file");
    binder.bind(analyze, "--window", opt.window, "window t1 t2")->expected(2);
    binder.bind(analyze, "--freq", opt.freq, "probe frequency (rad/unit-time)");
    binder.bind(analyze, "--tmax", opt.tmax, "complement truncation radius");
    binder.bind(analyze, "--local-freq", opt.local_freq, "local-frequency interval a b")
        ->expected(2);
    binder.bind(analyze, "--out", opt.out, "output path (stdout when omitted)");

    CLI::App* oscillate = app.add_subcommand("oscillate", "driven oscillator simulation");
    binder.bind(oscillate, "--signal", opt.signal_path, "drive signal JSON file");
    binder.bind(oscillate, "--omega0", opt.omega0, "oscillator resonance");
    binder.bind(oscillate, "--span", opt.span, "time span a b")->expected(2);
    binder.bind(oscillate, "--step", opt.step, "RK4 step");
    binder.bind(oscillate, "--collision-rate", opt.collision_rate, "collision rate lambda");
    binder.bind(oscillate, "--collision-ladder", opt.collision_ladder,
                "lambda ladder for an ensemble sweep");
    binder.bind(oscillate, "--seeds", opt.seeds, "seeds per rung (sweep mode)");
    binder.bind(oscillate, "--seed", opt.seed, "base RNG seed");
    binder.bind(oscillate, "--out", opt.out, "trace or sweep CSV path");

    CLI::App* estimate = app.add_subcommand("estimate", "order-of-magnitude timescale");
    binder.bind(estimate, "--length", opt.length, "length scale in meters");
    binder.bind(estimate, "--speed", opt.speed, "speed in m/s");
    binder.bind(estimate, "--label", opt.label, "estimate label");
    binder.bind(estimate, "--out", opt.out, "output path (stdout when omitted)");

    CLI::App* scaling = app.add_subcommand("scaling", "dynamic-range scaling laws");
    binder.bind(scaling, "--method", opt.method, "mult | minnorm");
    binder.bind(scaling, "--band", opt.band, "bandwidth in rad/unit-time");
    binder.bind(scaling, "--band-hz", opt.band_hz, "bandwidth in Hz");
    binder.bind(scaling, "--n", opt.n_list, "N ladder, e.g. 2..8 or 2,4,8");
    binder.bind(scaling, "--compression", opt.compression_list, "compression ladder");
    binder.bind(scaling, "--out", opt.out, "report CSV path");
    binder.bind(scaling, "--fits", opt.fits_path, "fit summary JSON path");

    CLI::App* capacity = app.add_subcommand("capacity", "Shannon-Hartley capacity");
    binder.bind(capacity, "--band-hz", opt.band_hz, "channel bandwidth in Hz");
    binder.bind(capacity, "--snr", opt.snr, "signal-to-noise ratio");
    binder.bind(capacity, "--out", opt.out, "output path (stdout when omitted)");

    CLI::App* capcons = app.add_subcommand("capacity-consistency",
                                           "superoscillatory bit rate vs capacity form");
    binder.bind(capcons, "--n", opt.n_list, "N ladder");
    binder.bind(capcons, "--compression", opt.compression_list, "compression per N (or one)");
    binder.bind(capcons, "--tau", opt.tau, "fixed stretch duration (derives compression)");
    binder.bind(capcons, "--band", opt.band, "bandwidth in rad/unit-time");
    binder.bind(capcons, "--band-hz", opt.band_hz, "bandwidth in Hz");
    binder.bind(capcons, "--out", opt.out, "report CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* active = nullptr;
        for (CLI::App* sub : {generate, analyze, oscillate, estimate, scaling, capacity, capcons})
            if (sub->parsed()) active = sub;
        if (!active) {
            std::cerr << app.help() << std::flush;
            return 2;
        }
        if (!opt.config_path.empty()) {
            const nlohmann::json cfg =
                nlohmann::json::parse(superosc::read_text_file(opt.config_path));
            binder.apply_config(cfg, active->get_name());
        }
        const ordered_json echo = run_config_echo(binder, active->get_name());

        if (active == generate) return cmd_generate(opt, echo);
        if (active == analyze) return cmd_analyze(opt, echo);
        if (active == oscillate) return cmd_oscillate(opt, echo);
        if (active == estimate) return cmd_estimate(opt, echo);
        if (active == scaling) return cmd_scaling(opt, echo);
        if (active == capacity) return cmd_capacity(opt, echo);
        if (active == capcons) return cmd_capacity_consistency(opt, echo);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const superosc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
