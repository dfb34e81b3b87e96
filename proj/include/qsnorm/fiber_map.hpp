#pragma once

// Mass-preserving dilation (t★u)(x) = t^{N/2} u(tx) and projection onto the Pohozaev set.
// Along the fiber, I(t★u) = A t² + B t^{N+2} − C t^σ with A = ½‖∇u‖², B = V(u), C = ‖u‖_p^p/p.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <utility>

#include "radial_field.hpp"

namespace qsnorm {

/// Coefficients of h(t) = A t² + B t^{n_exp} − C t^σ.
struct FiberPolynomial {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double sigma = 0.0;
    int n_exp = 0;

    static FiberPolynomial from(const FunctionalValues& f, const Params& prm) {
        return {0.5 * f.kinetic, f.quasi, f.lp / prm.p, prm.sigma(), prm.N + 2};
    }

    [[nodiscard]] double h(double t) const {
        return signed_sum(t, {{A, 2.0}, {B, double(n_exp)}, {-C, sigma}});
    }
    [[nodiscard]] double dh(double t) const {
        return signed_sum(t, {{2.0 * A, 1.0}, {n_exp * B, n_exp - 1.0}, {-sigma * C, sigma - 1.0}});
    }
    [[nodiscard]] double d2h(double t) const {
        return signed_sum(t, {{2.0 * A, 0.0},
                              {n_exp * (n_exp - 1.0) * B, n_exp - 2.0},
                              {-sigma * (sigma - 1.0) * C, sigma - 2.0}});
    }

    /// h'(t)/t = 2A + n B t^{n−2} − σ C t^{σ−2}; same sign as h' on (0, ∞) and finite at 0.
    [[nodiscard]] double reduced_slope(double t) const {
        return signed_sum(t, {{2.0 * A, 0.0}, {n_exp * B, n_exp - 2.0}, {-sigma * C, sigma - 2.0}});
    }

    /// Σ c_k t^{e_k}. On overflow the terms are summed relative to the largest one, so the result
    /// is ±∞ with the right sign rather than NaN.
    static double signed_sum(double t, std::initializer_list<std::pair<double, double>> terms) {
        double direct = 0.0;
        for (const auto& [c, e] : terms)
            if (c != 0.0) direct += c * std::pow(t, e);
        if (std::isfinite(direct)) return direct;
        double top = -kInf;
        for (const auto& [c, e] : terms)
            if (c != 0.0) top = std::max(top, std::log(std::abs(c)) + e * std::log(t));
        if (top == -kInf) return 0.0;
        double s = 0.0;
        for (const auto& [c, e] : terms)
            if (c != 0.0) s += std::copysign(std::exp(std::log(std::abs(c)) + e * std::log(t) - top), c);
        return s == 0.0 ? 0.0 : s * std::exp(top);
    }

    /// The unique positive critical point of h (the maximizer), to relative `rel_tol`.
    [[nodiscard]] double critical_point(double rel_tol = 1e-14) const {
        if (!(A > 0.0) || !(C > 0.0) || B < 0.0)
            throw InputError("fiber polynomial: need A > 0, B >= 0, C > 0");
        if (!(sigma > n_exp)) throw ConfigError("fiber polynomial: need sigma > N + 2");
        double lo = std::min(1.0, std::pow(2.0 * A / (sigma * C), 1.0 / (sigma - 2.0))) / 10.0;
        double hi = 10.0 * std::pow(std::max(1.0, (n_exp * B + 2.0 * A) / (sigma * C)),
                                    1.0 / (sigma - n_exp));
        for (int k = 0; k < 100 && !(reduced_slope(lo) > 0.0) && lo > 1e-290; ++k) lo /= 1e3;
        for (int k = 0; k < 100 && !(reduced_slope(hi) < 0.0) && hi < 1e290; ++k) hi *= 1e3;
        if (!(reduced_slope(lo) > 0.0) || !(reduced_slope(hi) < 0.0))
            throw NumericFailure("fiber polynomial: h' does not change sign in the bracket");
        // pin t = 1 to the correct side so that t_u < 1 exactly when h'(1) < 0
        const double at_one = reduced_slope(1.0);
        if (at_one == 0.0) return 1.0;
        if (at_one > 0.0) lo = std::max(lo, 1.0);
        else hi = std::min(hi, 1.0);
        // geometric bisection, then Newton polish on h'
        for (int k = 0; k < 200 && hi / lo - 1.0 > 1e-6; ++k) {
            const double mid = std::sqrt(lo * hi);
            (reduced_slope(mid) > 0.0 ? lo : hi) = mid;
        }
        double t = std::sqrt(lo * hi);
        for (int k = 0; k < 50; ++k) {
            const double step = dh(t) / d2h(t);
            const double next = t - step;
            if (!(next > lo && next < hi)) break;
            t = next;
            if (std::abs(step) <= rel_tol * t) break;
        }
        return t;
    }
};

/// t★u: nodes r/t, values t^{N/2}·u. The dilated grid is again a graded grid, so no resampling.
inline RadialProfile fiber_scale(const RadialProfile& u, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw InputError("fiber_scale: t must be positive");
    RadialProfile out = u;
    const double amp = std::pow(t, u.N / 2.0);
    for (double& r : out.nodes) r /= t;
    for (double& v : out.values) v *= amp;
    return out;
}

enum class PohozaevSide { Below, On, Above };

struct Projection {
    double t_u = 1.0;
    RadialProfile projected;
    PohozaevSide side = PohozaevSide::On;
    FiberPolynomial fiber;
    double max_energy = 0.0;  ///< h(t_u) = max_{t>0} I(t★u)
};

/// Projection of a nonzero profile onto P(u) = 0 along its fiber. |P(u)| at or below
/// `on_tol`·(‖∇u‖² + (N+2)V(u)) counts as already on the set (t_u = 1).
inline Projection project_pohozaev(const RadialProfile& u, const Params& prm,
                                   double rel_tol = 1e-13, double on_tol = 1e-12) {
    const FunctionalValues f = functionals(u, prm);
    if (!(f.mass > 0.0) || !(f.lp > 0.0) || !(f.kinetic > 0.0))
        throw InputError("project_pohozaev: profile must be nonzero");
    Projection proj;
    proj.fiber = FiberPolynomial::from(f, prm);
    const double slope_at_one = proj.fiber.reduced_slope(1.0);  // = P(u)
    const double scale = f.kinetic + (prm.N + 2.0) * f.quasi;
    if (std::abs(slope_at_one) <= on_tol * scale) {
        proj.side = PohozaevSide::On;
        proj.t_u = 1.0;
    } else {
        proj.side = slope_at_one < 0.0 ? PohozaevSide::Below : PohozaevSide::Above;
        proj.t_u = proj.fiber.critical_point(rel_tol);
    }
    proj.projected = fiber_scale(u, proj.t_u);
    proj.max_energy = proj.fiber.h(proj.t_u);
    return proj;
}

/// max_{t>0} I(t★u).
inline double reduced_energy(const RadialProfile& u, const Params& prm) {
    return project_pohozaev(u, prm).max_energy;
}

}  // namespace qsnorm
