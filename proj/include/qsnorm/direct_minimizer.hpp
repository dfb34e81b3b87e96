#pragma once

// Derivative-free minimization of the reduced energy u ↦ max_{t>0} I(t★u) over radial decreasing
// profiles of mass a, without ODE shooting.
//
// A candidate is described by its log-height decrements between log-spaced knots. The profile is
// the monotone cubic through (r_k, log u_k) with zero slope at r = 0 and an exponential tail past
// the last knot. Each candidate is rescaled to mass a and projected onto the Pohozaev set.

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "fiber_map.hpp"

namespace qsnorm {

struct MinimizeOptions {
    int knots = 12;             ///< knots after r = 0 (8 to 16)
    double inner = 0.1;         ///< first knot, in units of the half-height radius of the init
    double outer = 6.0;         ///< last knot, same units
    int max_evaluations = 4000; ///< objective evaluations over all runs
    int restarts = 3;           ///< simplex restarts from the best point
    double step = 0.3;          ///< initial simplex size in the log-decrement coordinates
    double size_tol = 1e-7;     ///< simplex size at which a run counts as converged
    double grid_growth = 1.01;
    int spacing_divisions = 1500;  ///< spacing cap is the profile extent over this
};

struct MinimizeResult {
    RadialProfile profile;  ///< best candidate, mass a, on the Pohozaev set
    double M_hat = kInf;
    int iterations = 0;
    bool converged = false;
    double mass = 0.0;
    bool init_was_best = false;
};

namespace detail {

/// Knot radii and the map from log-height decrements to a sampled profile.
class KnotProfile {
public:
    KnotProfile(int N, double r_half, const MinimizeOptions& opt) : N_(N), opt_(opt) {
        radii_.push_back(0.0);
        for (int k = 0; k < opt.knots; ++k)
            radii_.push_back(r_half * opt.inner *
                             std::pow(opt.outer / opt.inner, static_cast<double>(k) / (opt.knots - 1)));
    }

    [[nodiscard]] const std::vector<double>& radii() const { return radii_; }

    /// Decrements d_k > 0 with log u(r_k) = log u(r_{k−1}) − d_k, parametrized as d_k = e^{x_k}.
    [[nodiscard]] RadialProfile build(const std::vector<double>& x) const {
        std::vector<double> lu(radii_.size(), 0.0);
        for (std::size_t k = 1; k < radii_.size(); ++k)
            lu[k] = lu[k - 1] - std::exp(std::clamp(x[k - 1], -14.0, 4.0));
        const grid::MonotoneCubic spline(radii_, lu, true);
        const double r_last = radii_.back();
        // log-height slope of the tail, read from the spline's own extrapolation
        const double tail_slope = spline(r_last + 1.0) - spline(r_last);
        const double reach = tail_slope < 0.0 ? std::max(lu.back() + 30.0, 1.0) / -tail_slope : kInf;
        const double r_end = std::min(r_last + reach, 100.0 * r_last);
        auto r = grid::graded(r_end, radii_[1] / 50.0, opt_.grid_growth, r_end / opt_.spacing_divisions);
        std::vector<double> u(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) u[i] = std::exp(spline(r[i]));
        return {N_, std::move(r), std::move(u)};
    }

    /// Decrement coordinates of a given decreasing profile.
    [[nodiscard]] std::vector<double> encode(const RadialProfile& u) const {
        const grid::MonotoneCubic interp(u.nodes, u.values, true);
        std::vector<double> x(radii_.size() - 1);
        double prev = std::log(u.values.front());
        for (std::size_t k = 1; k < radii_.size(); ++k) {
            const double cur = std::log(std::max(interp(radii_[k]), 1e-300));
            x[k - 1] = std::log(std::max(prev - cur, 1e-6));
            prev = std::min(cur, prev - 1e-6);
        }
        return x;
    }

private:
    int N_;
    MinimizeOptions opt_;
    std::vector<double> radii_;
};

inline RadialProfile with_mass(const RadialProfile& u, double a, const Params& prm) {
    const double m = functionals(u, prm).mass;
    if (!(m > 0.0)) throw InputError("with_mass: zero profile");
    const double s = std::sqrt(a / m);
    return map_values(u, [s](double v) { return s * v; });
}

/// Reduced energy of the mass-a rescaling s·u, or +∞ if the candidate is degenerate. The
/// functionals of s·u follow from those of u: mass and kinetic scale by s², V by s⁴, L^p by s^p.
inline double reduced_at_mass(const RadialProfile& u, double a, const Params& prm) {
    try {
        const FunctionalValues f = functionals(u, prm);
        if (!(f.mass > 0.0)) return kInf;
        const double s2 = a / f.mass;
        const FunctionalValues g = FunctionalValues::from_integrals(
            a, f.kinetic * s2, f.quasi * s2 * s2, f.lp * std::pow(s2, prm.p / 2.0), f.sup_norm, prm);
        const FiberPolynomial fib = FiberPolynomial::from(g, prm);
        const double e = fib.h(fib.critical_point());
        return std::isfinite(e) ? e : kInf;
    } catch (const std::exception&) {
        return kInf;
    }
}

inline double radius_at_fraction(const RadialProfile& u, double frac) {
    const double target = frac * u.values.front();
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u.values[i] <= target) return u.nodes[i];
    return u.nodes.back();
}

}  // namespace detail

/// Minimizes max_{t>0} I(t★u) over mass-a decreasing profiles, starting from `init`. The projected
/// init itself is a candidate, so M_hat never exceeds its reduced energy.
inline MinimizeResult minimize_reduced(const Params& prm, double a, const RadialProfile& init,
                                       const MinimizeOptions& opt = {}) {
    prm.validate();
    init.validate();
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("minimize_reduced: mass must be positive");
    if (opt.knots < 8 || opt.knots > 16) throw ConfigError("minimize_reduced: knots must be in [8, 16]");
    if (init.N != prm.N) throw InputError("minimize_reduced: init dimension differs from N");
    if (!(init.values.front() > 0.0) || !init.is_decreasing())
        throw InputError("minimize_reduced: init must be positive at 0 and non-increasing");
    for (double v : init.values)
        if (v < 0.0) throw InputError("minimize_reduced: init must be nonnegative");
    if (functionals(init, prm).mass > a * (1.0 + 1e-8)) throw InputError("minimize_reduced: init mass exceeds a");

    const detail::KnotProfile knots(prm.N, detail::radius_at_fraction(init, 0.5), opt);
    struct Ctx {
        const detail::KnotProfile* knots;
        const Params* prm;
        double a;
        int evaluations;
    } ctx{&knots, &prm, a, 0};
    gsl_multimin_function fn;
    fn.n = static_cast<std::size_t>(opt.knots);
    fn.params = &ctx;
    fn.f = [](const gsl_vector* v, void* p) -> double {
        auto* c = static_cast<Ctx*>(p);
        ++c->evaluations;
        std::vector<double> x(v->size);
        for (std::size_t i = 0; i < v->size; ++i) x[i] = gsl_vector_get(v, i);
        const double e = detail::reduced_at_mass(c->knots->build(x), c->a, *c->prm);
        return std::isfinite(e) ? e : GSL_POSINF;
    };

    gsl_set_error_handler_off();
    using VecPtr = std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)>;
    using MinPtr = std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)>;
    VecPtr x(gsl_vector_alloc(fn.n), &gsl_vector_free);
    VecPtr step(gsl_vector_alloc(fn.n), &gsl_vector_free);
    const auto x0 = knots.encode(init);
    for (std::size_t i = 0; i < fn.n; ++i) gsl_vector_set(x.get(), i, x0[i]);

    MinimizeResult res;
    bool converged = false;
    for (int run = 0; run <= opt.restarts; ++run) {
        MinPtr m(gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, fn.n),
                 &gsl_multimin_fminimizer_free);
        gsl_vector_set_all(step.get(), opt.step / (1 << std::min(run, 3)));
        if (gsl_multimin_fminimizer_set(m.get(), &fn, x.get(), step.get()) != GSL_SUCCESS)
            throw NumericFailure("minimize_reduced: could not initialize the simplex");
        converged = false;
        while (ctx.evaluations < opt.max_evaluations) {
            ++res.iterations;
            if (gsl_multimin_fminimizer_iterate(m.get()) != GSL_SUCCESS) break;
            if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()), opt.size_tol) == GSL_SUCCESS) {
                converged = true;
                break;
            }
        }
        gsl_vector_memcpy(x.get(), gsl_multimin_fminimizer_x(m.get()));
        if ((converged && run > 0) || ctx.evaluations >= opt.max_evaluations) break;
    }
    res.converged = converged;

    std::vector<double> best(fn.n);
    for (std::size_t i = 0; i < fn.n; ++i) best[i] = gsl_vector_get(x.get(), i);
    const RadialProfile spline_best = detail::with_mass(knots.build(best), a, prm);
    const double e_spline = detail::reduced_at_mass(spline_best, a, prm);
    const RadialProfile init_scaled = detail::with_mass(init, a, prm);
    const double e_init = detail::reduced_at_mass(init_scaled, a, prm);
    res.init_was_best = e_init <= e_spline;
    const RadialProfile& chosen = res.init_was_best ? init_scaled : spline_best;
    if (!std::isfinite(std::min(e_init, e_spline)))
        throw NumericFailure("minimize_reduced: no admissible candidate");
    const Projection proj = project_pohozaev(chosen, prm);
    res.profile = proj.projected;
    res.M_hat = proj.max_energy;
    res.mass = functionals(res.profile, prm).mass;
    return res;
}

}  // namespace qsnorm
