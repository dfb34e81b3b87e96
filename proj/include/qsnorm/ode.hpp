#pragma once

// Radial initial-value problems  v'' + ((N−1)/r) v' + g(v) = 0,  v(0) = α,  v'(0) = 0,
// integrated with an adaptive Runge–Kutta–Fehlberg 7(8) pair and classified for shooting.

#include <array>
#include <cmath>
#include <deque>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "radial_field.hpp"

namespace qsnorm {

enum class Outcome {
    Decay,     ///< reached r_max small and monotonically decreasing
    Crossing,  ///< hit v = 0 with v' < 0
    Turning,   ///< v' returned to 0 while v > 0
    Truncated  ///< reached r_max otherwise, or the integration broke down
};

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Decay: return "Decay";
        case Outcome::Crossing: return "Crossing";
        case Outcome::Turning: return "Turning";
        case Outcome::Truncated: return "Truncated";
    }
    return "?";
}

struct IvpOptions {
    double r_max = 50.0;
    /// Natural length of the problem; 0 selects √(α/|g(α)|).
    double length_scale = 0.0;
    double rel_tol = 1e-12;
    double abs_tol = 1e-15;  ///< in units of α
    double start_offset = 1e-6;  ///< h₀ in units of the length scale
    double max_step = 0.5;       ///< in units of the length scale
    double event_tol = 1e-12;    ///< event location accuracy, in units of the length scale
    double decay_eps = 1e-10;    ///< relative to α
    int decay_window = 20;
    long max_steps = 5'000'000;
    /// Ascending radii at which to record v and v'. Only radii before the terminating event are kept.
    std::vector<double> samples;
};

struct Trajectory {
    RadialProfile profile;          ///< sampled values (r = 0 first, event point last)
    std::vector<double> slopes;     ///< v' at the profile nodes
    Outcome outcome = Outcome::Truncated;
    double event_r = 0.0;           ///< r_cross, r_turn, or the last radius reached
    double alpha = 0.0;
    double value_at_end = 0.0;
    double derivative_at_end = 0.0;
    double length_scale = 1.0;
    std::string diagnostic;

    [[nodiscard]] bool crossed() const { return outcome == Outcome::Crossing; }
};

/// Integrates from r = h₀ with the series start v(h₀) = α − g(α)h₀²/(2N), v'(h₀) = −g(α)h₀/N.
template <class G>
Trajectory integrate_radial_ivp(int N, const G& g, double alpha, const IvpOptions& opt) {
    namespace ode = boost::numeric::odeint;
    using State = std::array<double, 2>;
    if (N < 1) throw ConfigError("integrate_radial_ivp: N must be >= 1");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InputError("integrate_radial_ivp: alpha must be positive");

    const double g0 = g(alpha);
    double L = opt.length_scale;
    if (!(L > 0.0)) L = g0 != 0.0 ? std::sqrt(alpha / std::abs(g0)) : 1.0;
    const double coef = L * L / alpha;
    const double s_max = opt.r_max / L;
    const double nm1 = N - 1.0;

    // scaled variables: s = r/L, y = v/α
    auto sys = [&](const State& x, State& dx, double s) {
        dx[0] = x[1];
        dx[1] = -nm1 / s * x[1] - coef * g(alpha * x[0]);
    };

    Trajectory tr;
    tr.alpha = alpha;
    tr.length_scale = L;
    tr.profile.N = N;
    tr.profile.nodes.push_back(0.0);
    tr.profile.values.push_back(alpha);
    tr.slopes.push_back(0.0);

    std::size_t next_sample = 0;
    auto record = [&](double s, const State& x) {
        tr.profile.nodes.push_back(s * L);
        tr.profile.values.push_back(alpha * x[0]);
        tr.slopes.push_back(alpha * x[1] / L);
    };
    auto finish = [&](Outcome o, double s, const State& x) {
        tr.outcome = o;
        tr.event_r = s * L;
        tr.value_at_end = alpha * x[0];
        tr.derivative_at_end = alpha * x[1] / L;
        if (s * L > tr.profile.nodes.back()) record(s, x);
        return tr;
    };

    const double fs = coef * g0;
    double s = opt.start_offset;
    auto series = [&](double sv) { return State{1.0 - fs * sv * sv / (2.0 * N), -fs * sv / N}; };
    State x = series(s);
    // samples inside the start offset come from the series
    for (; next_sample < opt.samples.size() && opt.samples[next_sample] <= s * L; ++next_sample)
        if (opt.samples[next_sample] > 0.0)
            record(opt.samples[next_sample] / L, series(opt.samples[next_sample] / L));
    if (fs < 0.0) {
        tr.diagnostic = "g(alpha) < 0: v increases from the origin";
        return finish(Outcome::Turning, s, x);
    }

    auto controlled = ode::make_controlled<ode::runge_kutta_fehlberg78<State>>(opt.abs_tol, opt.rel_tol);
    ode::runge_kutta_fehlberg78<State> plain;
    double dt = s;
    std::deque<double> window;

    // first s in (s0, s0 + h] where pred(state) holds, by bisection on the step length
    auto locate = [&](const State& x0, double s0, double h, auto pred) {
        double lo = 0.0, hi = h;
        State out = x0;
        while (hi - lo > opt.event_tol * std::max(1.0, s0)) {
            const double mid = 0.5 * (lo + hi);
            plain.do_step(sys, x0, s0, out, mid);
            (pred(out) ? hi : lo) = mid;
        }
        plain.do_step(sys, x0, s0, out, hi);
        return std::pair{s0 + hi, out};
    };

    for (long steps = 0; steps < opt.max_steps; ++steps) {
        if (s >= s_max) break;
        double limit = std::min(opt.max_step, s_max - s);
        bool to_sample = false;
        if (next_sample < opt.samples.size()) {
            const double gap = opt.samples[next_sample] / L - s;
            if (gap <= limit) {
                limit = gap;
                to_sample = true;
            }
        }
        const bool clamped = limit <= dt;
        double h = clamped ? limit : dt;
        const State x_prev = x;
        const double s_prev = s;
        double s_try = s;
        const auto res = controlled.try_step(sys, x, s_try, h);
        if (res == ode::fail) {
            dt = h;
            if (dt < 1e-14 * std::max(1.0, s)) {
                tr.diagnostic = "step size underflow";
                return finish(Outcome::Truncated, s, x);
            }
            continue;
        }
        const double taken = s_try - s_prev;
        s = (clamped && to_sample) ? opt.samples[next_sample] / L : s_try;
        // a step shortened to hit a sample or the end must not shrink the controller's suggestion
        dt = clamped ? std::max(dt, h) : h;

        if (!std::isfinite(x[0]) || !std::isfinite(x[1]) || std::abs(x[0]) > 1e50) {
            tr.diagnostic = "value overflow";
            return finish(Outcome::Truncated, s_prev, x_prev);
        }
        const bool crossed = x[0] <= 0.0;
        const bool turned = x_prev[1] < 0.0 && x[1] >= 0.0;
        if (crossed || turned) {
            double s_c = kInf, s_t = kInf;
            State x_c{}, x_t{};
            if (crossed)
                std::tie(s_c, x_c) = locate(x_prev, s_prev, taken, [](const State& y) { return y[0] <= 0.0; });
            if (turned) {
                std::tie(s_t, x_t) = locate(x_prev, s_prev, taken, [](const State& y) { return y[1] >= 0.0; });
                // the step may have dipped below zero and come back up before turning
                if (!crossed && x_t[0] <= 0.0)
                    std::tie(s_c, x_c) = locate(x_prev, s_prev, s_t - s_prev,
                                                [](const State& y) { return y[0] <= 0.0; });
            }
            if (s_c <= s_t) {
                x_c[0] = 0.0;
                return finish(Outcome::Crossing, s_c, x_c);
            }
            x_t[1] = 0.0;
            return finish(Outcome::Turning, s_t, x_t);
        }
        if (to_sample && clamped) {
            record(s, x);
            ++next_sample;
            while (next_sample < opt.samples.size() && opt.samples[next_sample] / L <= s) ++next_sample;
        }
        window.push_back(x[0]);
        if (window.size() > static_cast<std::size_t>(opt.decay_window) + 1) window.pop_front();
    }

    bool monotone = window.size() > static_cast<std::size_t>(opt.decay_window);
    for (std::size_t i = 1; i < window.size(); ++i) monotone = monotone && window[i] < window[i - 1];
    if (s < s_max) tr.diagnostic = "step budget exhausted";
    const Outcome o = (s >= s_max && x[0] > 0.0 && x[0] < opt.decay_eps && monotone) ? Outcome::Decay
                                                                                      : Outcome::Truncated;
    return finish(o, s, x);
}

}  // namespace qsnorm
