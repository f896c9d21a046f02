#include "superosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "superosc/errors.hpp"

namespace superosc {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; symmetric).
constexpr double kNodes[8] = {
    0.0950125098376374402, 0.2816035507792589132, 0.4580167776572273863,
    0.6178762444026437484, 0.7554044083550030339, 0.8656312023878317439,
    0.9445750230732325761, 0.9894009349916499326,
};
constexpr double kWeights[8] = {
    0.1894506104550684963, 0.1826034150449235888, 0.1691565193950025382,
    0.1495959888165767320, 0.1246289712555338720, 0.0951585116824927848,
    0.0622535239386478929, 0.0271524594117540949,
};

template <class Value, class F>
Value gl16(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Value acc{};
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kNodes[i];
        acc += kWeights[i] * (f(mid - dx) + f(mid + dx));
    }
    return half * acc;
}

double magnitude(double v) { return std::abs(v); }
double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class Value, class F>
Value adaptive(const F& f, double a, double b, const QuadratureOptions& opts) {
    if (!(a < b)) throw InvalidSpec("integration interval must satisfy a < b");

    struct Panel {
        double a, b;
        Value coarse;
        Value refined;
        double err;
        bool operator<(const Panel& o) const { return err < o.err; }
    };

    const double span = b - a;
    double max_width = span;
    if (opts.omega_max > 0.0) max_width = std::min(max_width, M_PI / (4.0 * opts.omega_max));
    int initial = std::max(1, static_cast<int>(std::ceil(span / max_width)));
    if (initial > opts.panel_budget)
        throw QuadratureFailure("oscillation bound needs more panels than the budget allows");

    auto make_panel = [&](double lo, double hi) {
        Panel p;
        p.a = lo;
        p.b = hi;
        p.coarse = gl16<Value>(f, lo, hi);
        const double mid = 0.5 * (lo + hi);
        p.refined = gl16<Value>(f, lo, mid) + gl16<Value>(f, mid, hi);
        p.err = magnitude(p.coarse - p.refined);
        return p;
    };

    std::priority_queue<Panel> queue;
    Value total{};
    double total_err = 0.0;
    int panels = initial;
    for (int i = 0; i < initial; ++i) {
        Panel p = make_panel(a + span * i / initial, a + span * (i + 1) / initial);
        total += p.refined;
        total_err += p.err;
        queue.push(p);
    }

    while (total_err > opts.abs_tol && !queue.empty()) {
        Panel worst = queue.top();
        queue.pop();
        if (panels + 1 > opts.panel_budget)
            throw QuadratureFailure("tolerance not met within the panel budget");
        ++panels;
        total -= worst.refined;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        for (Panel half : {make_panel(worst.a, mid), make_panel(mid, worst.b)}) {
            total += half.refined;
            total_err += half.err;
            queue.push(half);
        }
    }
    if (total_err > opts.abs_tol)
        throw QuadratureFailure("tolerance not met within the panel budget");
    return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
    return adaptive<double>(f, a, b, opts);
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, const QuadratureOptions& opts) {
    return adaptive<std::complex<double>>(f, a, b, opts);
}

}  // namespace superosc
