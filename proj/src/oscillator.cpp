#include "superosc/oscillator.hpp"

#include <cmath>
#include <random>

#include "superosc/errors.hpp"
#include "superosc/spectral.hpp"

namespace superosc {

namespace {

struct State {
    double x = 0.0;
    double v = 0.0;
    double w = 0.0;  // accumulated drive work
};

// one RK4 step of x' = v, v' = f(t) - w0^2 x, w' = f(t) v
State rk4_step(const Signal& drive, double omega0, double t, double h, State s) {
    auto deriv = [&](double tt, const State& u) {
        const double f = drive.evaluate(tt);
        return State{u.v, f - omega0 * omega0 * u.x, f * u.v};
    };
    auto add = [](const State& a, double c, const State& b) {
        return State{a.x + c * b.x, a.v + c * b.v, a.w + c * b.w};
    };
    const State k1 = deriv(t, s);
    const State k2 = deriv(t + 0.5 * h, add(s, 0.5 * h, k1));
    const State k3 = deriv(t + 0.5 * h, add(s, 0.5 * h, k2));
    const State k4 = deriv(t + h, add(s, h, k3));
    s.x += h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
    s.v += h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
    s.w += h / 6.0 * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w);
    return s;
}

double energy_of(const State& s, double omega0) {
    return 0.5 * (s.v * s.v + omega0 * omega0 * s.x * s.x);
}

// exponential inter-arrival times from a portable canonical-uniform draw
std::vector<double> draw_collisions(double rate, double t0, double t1, std::uint64_t seed) {
    std::vector<double> times;
    if (rate <= 0.0) return times;
    std::mt19937_64 rng(seed);
    double t = t0;
    while (true) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        t += -std::log1p(-u) / rate;
        if (t >= t1) break;
        times.push_back(t);
    }
    return times;
}

}  // namespace

double max_drive_frequency(const Signal& drive, double t_start, double t_end) {
    double rate = drive.declared_bandwidth();
    for (const auto& sample : local_frequency(drive, t_start, t_end))
        rate = std::max(rate, sample.omega);
    return rate;
}

OscillatorTrace simulate(const Signal& drive, const OscillatorConfig& cfg,
                         std::optional<double> max_drive_frequency_hint) {
    if (!(cfg.omega0 > 0.0)) throw InvalidSpec("resonance frequency must be positive");
    if (!(cfg.t_start < cfg.t_end)) throw InvalidSpec("time span must satisfy start < end");
    if (!(cfg.step > 0.0)) throw InvalidSpec("step must be positive");
    if (cfg.collision_rate < 0.0) throw InvalidSpec("collision rate must be >= 0");

    const double drive_rate = max_drive_frequency_hint
                                  ? *max_drive_frequency_hint
                                  : max_drive_frequency(drive, cfg.t_start, cfg.t_end);
    const double h_max = 2.0 * M_PI / (50.0 * std::max(cfg.omega0, drive_rate));
    if (cfg.step > h_max * (1.0 + 1e-12))
        throw StepTooLarge("step exceeds 2pi/(50 max(omega0, drive local rate))");

    const double span = cfg.t_end - cfg.t_start;
    const long n = std::max(1L, static_cast<long>(std::ceil(span / cfg.step - 1e-12)));
    const double h = span / static_cast<double>(n);

    std::vector<double> collisions =
        draw_collisions(cfg.collision_rate, cfg.t_start, cfg.t_end, cfg.seed);

    OscillatorTrace trace;
    trace.times.reserve(n + 1);
    trace.positions.reserve(n + 1);
    trace.velocities.reserve(n + 1);
    trace.energy.reserve(n + 1);
    trace.dissipated.reserve(n + 1);

    State s;
    double dissipated = 0.0;
    std::size_t next_collision = 0;

    auto record = [&](double t) {
        trace.times.push_back(t);
        trace.positions.push_back(s.x);
        trace.velocities.push_back(s.v);
        trace.energy.push_back(energy_of(s, cfg.omega0));
        trace.dissipated.push_back(dissipated);
    };
    record(cfg.t_start);

    for (long i = 0; i < n; ++i) {
        double t = cfg.t_start + h * static_cast<double>(i);
        const double t_next = cfg.t_start + h * static_cast<double>(i + 1);
        // split the step at collision times: bank the energy, reset to rest
        while (next_collision < collisions.size() && collisions[next_collision] <= t_next) {
            const double tc = collisions[next_collision];
            if (tc > t) s = rk4_step(drive, cfg.omega0, t, tc - t, s);
            const double banked = energy_of(s, cfg.omega0);
            dissipated += banked;
            trace.collisions.push_back({tc, banked});
            s.x = 0.0;
            s.v = 0.0;
            t = tc;
            ++next_collision;
        }
        if (t_next > t) s = rk4_step(drive, cfg.omega0, t, t_next - t, s);
        record(t_next);
    }
    trace.drive_work = s.w;
    return trace;
}

std::vector<AbsorptionRow> absorption_sweep(const Signal& drive, const OscillatorConfig& proto,
                                            std::span<const double> collision_rates,
                                            int n_seeds) {
    if (collision_rates.empty()) throw InvalidSpec("collision rate ladder must be nonempty");
    if (n_seeds < 8) throw InvalidSpec("absorption sweep needs at least 8 seeds per rung");

    const double drive_rate = max_drive_frequency(drive, proto.t_start, proto.t_end);

    std::vector<AbsorptionRow> rows;
    rows.reserve(collision_rates.size());
    for (double rate : collision_rates) {
        OscillatorConfig cfg = proto;
        cfg.collision_rate = rate;
        double sum = 0.0, sum_sq = 0.0;
        for (int k = 0; k < n_seeds; ++k) {
            cfg.seed = proto.seed + static_cast<std::uint64_t>(k);
            const OscillatorTrace tr = simulate(drive, cfg, drive_rate);
            const double d = tr.dissipated.back();
            sum += d;
            sum_sq += d * d;
        }
        const double mean = sum / n_seeds;
        const double var = std::max(0.0, (sum_sq - n_seeds * mean * mean) / (n_seeds - 1));
        rows.push_back({rate, mean, std::sqrt(var), n_seeds});
    }
    return rows;
}

TimescaleEstimate timescale_estimate(double length_m, double speed_m_per_s, std::string label) {
    if (!(length_m > 0.0) || !(speed_m_per_s > 0.0))
        throw InvalidSpec("length and speed must be positive");
    return {length_m, speed_m_per_s, length_m / speed_m_per_s, std::move(label)};
}

}  // namespace superosc
