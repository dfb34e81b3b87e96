#pragma once

// Shooting solvers for the radial problems of the branch:
//   dual equation        −Δv + λφ(v)φ'(v) = φ(v)^{p−1}φ'(v)
//   semilinear limit     −ΔW + W = W^{p−1}
//   zero-mass equation   −Δv = φ(v)^{p−1}φ'(v)
//   free-boundary limit  −Δṽ = −√2/2 + 2^{(p−4)/4} ṽ^{(p−2)/2},  ṽ = ṽ' = 0 on ∂B_R
// Each solver bisects on the height α = v(0) between a trajectory that crosses zero and one that
// stays positive (turns back, or survives to the truncation radius).

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dual_transform.hpp"
#include "ode.hpp"

namespace qsnorm {

struct ShootingOptions {
    double rel_tol = 1e-12;          ///< integrator relative tolerance
    double abs_tol = 1e-15;          ///< integrator absolute tolerance (units of α)
    double bisection_rel = 1e-15;    ///< stop when (α_hi − α_lo) ≤ this · α_hi
    int max_bisections = 200;
    double grid_growth = 1.005;      ///< geometric growth of the output grid near r = 0
    double points_per_length = 100;  ///< output spacing cap is length_scale / points_per_length
    double junction_factor = 1e3;    ///< splice the analytic tail where v ≤ this · min v
    double tail_floor = 1e-12;       ///< extend the tail until v < tail_floor · α
    double decay_eps = 1e-10;        ///< Decay threshold relative to α
    double tail_rate_tolerance = 0.2;
};

/// Nonlinearity g in v'' + ((N−1)/r)v' + g(v) = 0 for the dual equation at frequency λ.
struct DualRhs {
    double lambda;
    double p;
    double operator()(double v) const {
        const auto f = dual::phi(v);
        return f.phi_prime * f.phi * (std::pow(std::abs(f.phi), p - 2.0) - lambda);
    }
};

/// −ΔW + W = W^{p−1}
struct SemilinearRhs {
    double p;
    double operator()(double w) const { return w * (std::pow(std::abs(w), p - 2.0) - 1.0); }
};

/// λ = 0 dual equation.
struct ZeroMassRhs {
    double p;
    double operator()(double v) const {
        const auto f = dual::phi(v);
        return f.phi_prime * f.phi * std::pow(std::abs(f.phi), p - 2.0);
    }
};

/// f(s) = −√2/2 + 2^{(p−4)/4} s^{(p−2)/2} written as (√2/2)((s/b)^{(p−2)/2} − 1) with b = √2/2,
/// so f(b) = 0 exactly. Negative arguments are clamped to 0.
struct FreeBoundaryRhs {
    double p;
    static constexpr double b = std::numbers::sqrt2 / 2.0;
    double operator()(double s) const {
        return b * (std::pow(std::max(s, 0.0) / b, (p - 2.0) / 2.0) - 1.0);
    }
    /// F(s) = ∫₀^s f
    [[nodiscard]] double primitive(double s) const {
        return -b * s + std::pow(2.0, (p - 4.0) / 4.0) * (2.0 / p) * std::pow(s, p / 2.0);
    }
};

/// Result of a decaying-solution shoot (dual or semilinear).
struct ShootingResult {
    Trajectory trajectory;       ///< outcome Decay; profile of v including the spliced tail
    double alpha = 0.0;
    double alpha_lo = 0.0;       ///< last non-crossing height
    double alpha_hi = 0.0;       ///< last crossing height
    int bisections = 0;
    double tail_junction = 0.0;  ///< radius where the linearized tail takes over
    double tail_rate_mismatch = 0.0;
    bool tail_rate_ok = false;
    double length_scale = 1.0;
};

namespace detail {

/// e^x K_ν(x), with the large-argument expansion where the direct product under/overflows.
inline double bessel_k_scaled(double nu, double x) {
    nu = std::abs(nu);
    if (x < 500.0) return std::cyl_bessel_k(nu, x) * std::exp(x);
    const double m = 4.0 * nu * nu;
    const double z = 8.0 * x;
    return std::sqrt(std::numbers::pi / (2.0 * x)) *
           (1.0 + (m - 1.0) / z + (m - 1.0) * (m - 9.0) / (2.0 * z * z) +
            (m - 1.0) * (m - 9.0) * (m - 25.0) / (6.0 * z * z * z));
}

/// Decaying solution r^{−ν}K_ν(kr), ν = (N−2)/2, of v'' + ((N−1)/r)v' − k²v = 0, normalized to
/// 1 at r0.
inline double linear_tail(int N, double k, double r0, double r) {
    const double nu = (N - 2.0) / 2.0;
    return std::pow(r / r0, -nu) * bessel_k_scaled(nu, k * r) / bessel_k_scaled(nu, k * r0) *
           std::exp(-k * (r - r0));
}

/// −(d/dr) log of the linear tail at r.
inline double linear_tail_rate(int N, double k, double r) {
    const double nu = (N - 2.0) / 2.0;
    return k * bessel_k_scaled(nu + 1.0, k * r) / bessel_k_scaled(nu, k * r);
}

struct Bracket {
    double lo = 0.0, hi = 0.0;
    int iterations = 0;
};

/// Bisection on α between a low witness (is_high false) and a high witness (is_high true).
template <class G, class IsHigh>
Bracket bisect_alpha(int N, const G& g, double lo, double hi, const IvpOptions& opt,
                     const IsHigh& is_high, const ShootingOptions& so) {
    Bracket b{lo, hi, 0};
    while (b.iterations < so.max_bisections && b.hi - b.lo > so.bisection_rel * b.hi) {
        const double mid = 0.5 * (b.lo + b.hi);
        if (mid <= b.lo || mid >= b.hi) break;
        (is_high(integrate_radial_ivp(N, g, mid, opt)) ? b.hi : b.lo) = mid;
        ++b.iterations;
    }
    return b;
}

/// Output radii. The spacing is capped at L / points_per_length and starts at a tenth of the cap
/// or of core_length / points_per_length, whichever is smaller; finer nodes near r = 0 only add
/// roundoff to difference quotients of the even profile.
inline std::vector<double> sample_grid(double r_end, double L, double core_length, const ShootingOptions& so) {
    const double h_max = L / so.points_per_length;
    const double h0 = std::min(h_max, core_length / so.points_per_length) / 10.0;
    auto r = grid::graded(r_end, h0, so.grid_growth, h_max);
    r.pop_back();  // the event point itself is appended by the integrator
    return r;
}

/// Shoot for the positive decaying solution of v'' + ((N−1)/r)v' + g(v) = 0 whose linearization
/// at 0 is v'' + ((N−1)/r)v' − k²v = 0. `alpha_eq` is the positive zero of g.
template <class G>
ShootingResult shoot_decaying(int N, const G& g, double alpha_eq, double L, double k,
                              double r_max, const ShootingOptions& so) {
    IvpOptions opt;
    opt.r_max = r_max;
    opt.length_scale = L;
    opt.rel_tol = so.rel_tol;
    opt.abs_tol = so.abs_tol;
    opt.decay_eps = so.decay_eps;
    auto is_high = [](const Trajectory& t) { return t.outcome == Outcome::Crossing; };

    double lo = alpha_eq * (1.0 + 1e-3);
    for (int k_try = 0; k_try < 40 && is_high(integrate_radial_ivp(N, g, lo, opt)); ++k_try)
        lo = alpha_eq * (1.0 + (lo / alpha_eq - 1.0) / 10.0);
    double hi = 2.0 * alpha_eq;
    while (!is_high(integrate_radial_ivp(N, g, hi, opt))) {
        hi *= 2.0;
        if (hi > 1e12) throw NumericFailure("no ground state detected: no crossing height below 1e12");
    }
    if (is_high(integrate_radial_ivp(N, g, lo, opt)))
        throw NumericFailure("no ground state detected: no turning height above the equilibrium");

    const Bracket br = bisect_alpha(N, g, lo, hi, opt, is_high, so);
    ShootingResult res;
    res.alpha_lo = br.lo;
    res.alpha_hi = br.hi;
    res.alpha = br.lo;
    res.bisections = br.iterations;
    res.length_scale = L;

    const Trajectory coarse = integrate_radial_ivp(N, g, br.lo, opt);
    const double g_alpha = std::abs(g(br.lo));
    const double core = g_alpha > 0.0 ? std::sqrt(br.lo / g_alpha) : L;
    opt.samples = sample_grid(coarse.event_r, L, core, so);
    // the sampled run takes different steps; step α down until it also turns
    double alpha = br.lo;
    Trajectory tr = integrate_radial_ivp(N, g, alpha, opt);
    for (int k = 0; k < 40 && is_high(tr); ++k) {
        alpha = br.lo * (1.0 - std::ldexp(so.bisection_rel, k));
        tr = integrate_radial_ivp(N, g, alpha, opt);
    }
    res.alpha = alpha;

    auto& r = tr.profile.nodes;
    auto& v = tr.profile.values;
    auto& dv = tr.slopes;
    const double v_min = *std::min_element(v.begin(), v.end());
    std::size_t j = 0;
    while (j + 1 < v.size() && v[j] > so.junction_factor * v_min) ++j;
    // keep at least a few nodes before the junction
    if (j < 5 || !(v[j] <= 1e-2 * br.lo) || !(v[j] > 0.0)) {
        res.tail_rate_ok = false;
        res.tail_rate_mismatch = kInf;
        res.tail_junction = r.back();
        std::ostringstream os;
        os << "tail not resolved: min v / alpha = " << v_min / br.lo;
        tr.diagnostic = os.str();
        res.trajectory = std::move(tr);
        return res;
    }
    r.resize(j + 1);
    v.resize(j + 1);
    dv.resize(j + 1);
    const double rj = r[j], vj = v[j];
    const double measured = -dv[j] / vj;
    const double expected = linear_tail_rate(N, k, rj);
    res.tail_junction = rj;
    res.tail_rate_mismatch = std::abs(measured / expected - 1.0);
    res.tail_rate_ok = res.tail_rate_mismatch <= so.tail_rate_tolerance;

    const double h = L / so.points_per_length;
    for (double rr = rj + h;; rr += h) {
        const double shape = linear_tail(N, k, rj, rr);
        r.push_back(rr);
        v.push_back(vj * shape);
        dv.push_back(-vj * shape * linear_tail_rate(N, k, rr));
        if (v.back() < so.tail_floor * br.lo) break;
    }
    tr.outcome = (v.back() < so.decay_eps * br.lo) ? Outcome::Decay : Outcome::Truncated;
    tr.event_r = r.back();
    tr.value_at_end = v.back();
    tr.derivative_at_end = dv.back();
    res.trajectory = std::move(tr);
    return res;
}

}  // namespace detail

/// Positive decaying solution v_λ of the dual equation.
inline ShootingResult shoot_dual(const Params& prm, double lambda, const ShootingOptions& so = {}) {
    prm.validate();
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ConfigError("shoot_dual: lambda must be positive");
    const DualRhs g{lambda, prm.p};
    const double alpha_eq = dual::phi_inv(std::pow(lambda, 1.0 / (prm.p - 2.0)));
    const double L = 1.0 / std::sqrt(lambda);
    const double core = std::max(1.0, std::pow(lambda, 1.0 / (prm.p - 2.0)));
    return detail::shoot_decaying(prm.N, g, alpha_eq, L, std::sqrt(lambda), 200.0 * core * L, so);
}

/// Parameter gate for the semilinear limit −ΔW + W = W^{p−1}: 4 + 4/N < p < 2*.
inline void require_semilinear_regime(const Params& prm) {
    prm.validate();
    if (!(prm.p < prm.two_star())) {
        std::ostringstream os;
        os << "semilinear limit needs 4+4/N < p < 2*; got N = " << prm.N << ", p = " << prm.p;
        throw ConfigError(os.str());
    }
}

inline ShootingResult shoot_semilinear(const Params& prm, const ShootingOptions& so = {}) {
    require_semilinear_regime(prm);
    return detail::shoot_decaying(prm.N, SemilinearRhs{prm.p}, 1.0, 1.0, 1.0, 200.0, so);
}

struct ZeroMassResult {
    Trajectory trajectory;  ///< v₀ on [0, R_max]
    RadialProfile u0;       ///< φ(v₀) after removing the constant mode fixed by the truncation
    double alpha = 0.0;
    double alpha_refined = 0.0;  ///< α* with R_max doubled
    double r_max = 0.0;
    double tail_coefficient = 0.0;  ///< c in u₀ ≈ c r^{−(N−2)}
    double decay_exponent = 0.0;    ///< fitted on the last decade
    double a0 = kInf;               ///< ‖u₀‖₂², +∞ for N = 3, 4
    bool crossing_is_high = true;   ///< orientation found at the bracket endpoints
    bool decay_ok = false;          ///< fitted exponent within 5% of N − 2
    bool alpha_stable = false;      ///< |α(R) − α(2R)| ≤ 1e-8 α
};

/// Positive radial solution of the zero-mass equation (N ≥ 3, 2* < p < 2·2*).
inline ZeroMassResult shoot_zero_mass(const Params& prm, const ShootingOptions& so = {},
                                      double r_max_factor = 1e4) {
    prm.validate();
    if (prm.N < 3 || !(prm.p > prm.two_star()))
        throw ConfigError("zero-mass solver needs N >= 3 and 2* < p < 2*2^*");
    const int N = prm.N;
    const ZeroMassRhs g{prm.p};
    const double L = std::sqrt(1.0 / g(1.0));

    ZeroMassResult out;
    auto solve = [&](double r_max) {
        IvpOptions opt;
        opt.r_max = r_max;
        opt.length_scale = L;
        opt.rel_tol = so.rel_tol;
        opt.abs_tol = so.abs_tol;
        opt.max_step = kInf;
        // below zero at infinity: crossed, or the harmonic tail v ≈ A + B r^{2−N} at R_max has A < 0
        auto crosses = [N](const Trajectory& t) {
            if (t.outcome == Outcome::Crossing) return true;
            if (t.outcome == Outcome::Turning) return false;
            return t.value_at_end + t.derivative_at_end * t.event_r / (N - 2.0) < 0.0;
        };
        double a = 1.0;
        const bool c1 = crosses(integrate_radial_ivp(N, g, a, opt));
        double b = a;
        for (int k = 0; k < 60; ++k) {
            b = c1 ? b / 4.0 : b * 4.0;
            if (crosses(integrate_radial_ivp(N, g, b, opt)) != c1) break;
            if (k == 59) throw NumericFailure("zero-mass: no sign change of the crossing predicate");
        }
        const double lo = std::min(a, b), hi = std::max(a, b);
        out.crossing_is_high = crosses(integrate_radial_ivp(N, g, hi, opt));
        auto is_high = [&](const Trajectory& t) { return crosses(t) == out.crossing_is_high; };
        const auto br = detail::bisect_alpha(N, g, lo, hi, opt, is_high, so);
        return std::pair{br, opt};
    };

    double r_max = r_max_factor * L;
    auto [br, opt] = solve(r_max);
    double alpha = out.crossing_is_high ? br.lo : br.hi;
    double alpha2 = alpha;
    for (int k = 0; k < 4; ++k) {
        auto [br2, opt2] = solve(2.0 * r_max);
        alpha2 = out.crossing_is_high ? br2.lo : br2.hi;
        out.alpha_stable = std::abs(alpha2 - alpha) <= 1e-8 * alpha;
        if (out.alpha_stable) break;
        r_max *= 2.0;
        br = br2;
        opt = opt2;
        alpha = alpha2;
    }
    out.alpha = alpha;
    out.alpha_refined = alpha2;
    out.r_max = r_max;

    // positive trajectory through r_max, sampled on a purely geometric grid
    opt.samples = grid::graded(r_max, 1e-3 * L, so.grid_growth);
    opt.samples.pop_back();
    opt.samples.push_back(r_max * (1.0 - 1e-12));
    Trajectory tr = integrate_radial_ivp(N, g, alpha, opt);
    // the sampled run takes different steps; move α away from the crossing side until it stays positive
    const double away = out.crossing_is_high ? -1.0 : 1.0;
    for (int k = 0; k < 40 && tr.crossed(); ++k)
        tr = integrate_radial_ivp(N, g, out.alpha * (1.0 + away * std::ldexp(so.bisection_rel, k)), opt);
    if (tr.crossed()) throw NumericFailure("zero-mass: converged trajectory crosses before r_max");
    out.trajectory = tr;

    // v ≈ A + B r^{2−N} far out; the bisection pins A ≈ −B R^{2−N}. Remove A.
    const double R = tr.profile.nodes.back();
    const double vR = tr.profile.values.back(), dvR = tr.slopes.back();
    const double B = -dvR * std::pow(R, N - 1.0) / (N - 2.0);
    const double A = vR - B * std::pow(R, 2.0 - N);
    RadialProfile v0 = tr.profile;
    for (double& x : v0.values) x = std::max(x - A, 0.0);
    out.u0 = dual::v_to_u(v0);
    out.tail_coefficient = B;

    // least-squares slope of log u₀ against log r on [R/10, R]
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < out.u0.size(); ++i) {
        const double r = out.u0.nodes[i];
        if (r < R / 10.0 || !(out.u0.values[i] > 0.0)) continue;
        const double x = std::log(r), y = std::log(out.u0.values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    out.decay_exponent = n > 2 ? -(n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
    out.decay_ok = std::abs(out.decay_exponent - (N - 2.0)) <= 0.05 * (N - 2.0);

    if (N >= 5) {
        const double grid_mass = functionals(out.u0, prm).mass;
        out.a0 = grid_mass + sphere_measure(N) * B * B * std::pow(R, 4.0 - N) / (N - 4.0);
    } else {
        out.a0 = kInf;
    }
    return out;
}

struct FreeBoundarySolution {
    double alpha = 0.0;
    double R = 0.0;
    RadialProfile v_tilde;  ///< on [0, R] followed by exact zeros out to 2R
    double residual = 0.0;  ///< |ṽ(R)| + |ṽ'(R)|
    double alpha_closed_form = 0.0;  ///< N = 1 only: root of F(α) = 0; NaN otherwise
    Trajectory crossing_witness;
    Trajectory turning_witness;
};

/// Root of F(s) = −(√2/2)s + 2^{(p−4)/4}(2/p)s^{p/2}, i.e. (p/2)^{2/(p−2)}/√2.
inline double free_boundary_alpha_1d(double p) {
    return std::pow(p / 2.0, 2.0 / (p - 2.0)) / std::numbers::sqrt2;
}

inline FreeBoundarySolution shoot_free_boundary(const Params& prm, const ShootingOptions& so = {}) {
    prm.validate();
    const int N = prm.N;
    const FreeBoundaryRhs f{prm.p};
    const double b = FreeBoundaryRhs::b;
    IvpOptions opt;
    opt.rel_tol = std::min(so.rel_tol, 1e-13);
    opt.abs_tol = so.abs_tol;
    opt.length_scale = 1.0;
    opt.r_max = 1e3;
    auto is_high = [](const Trajectory& t) { return t.outcome == Outcome::Crossing; };
    auto turns = [](const Trajectory& t) { return t.outcome == Outcome::Turning; };

    double lo = b * (1.0 + 1e-3);
    if (!turns(integrate_radial_ivp(N, f, lo, opt)))
        throw NumericFailure("free boundary: expected a turning trajectory just above b");
    double hi = 2.0 * b;
    while (!is_high(integrate_radial_ivp(N, f, hi, opt))) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e8) throw NumericFailure("free boundary: no crossing height found");
    }
    const auto br = detail::bisect_alpha(N, f, lo, hi, opt, is_high, so);

    FreeBoundarySolution out;
    out.crossing_witness = integrate_radial_ivp(N, f, br.hi, opt);
    out.turning_witness = integrate_radial_ivp(N, f, br.lo, opt);
    if (!turns(out.turning_witness))
        throw NumericFailure("free boundary: crossing predicate not monotone in alpha (low witness "
                             + std::string(to_string(out.turning_witness.outcome)) + ")");
    const double res_hi = std::abs(out.crossing_witness.derivative_at_end);
    const double res_lo = std::abs(out.turning_witness.value_at_end);
    const bool use_hi = res_hi <= res_lo;
    out.alpha = use_hi ? br.hi : br.lo;
    out.R = use_hi ? out.crossing_witness.event_r : out.turning_witness.event_r;
    out.residual = std::min(res_hi, res_lo);
    out.alpha_closed_form = N == 1 ? free_boundary_alpha_1d(prm.p) : std::nan("");

    // uniform output grid: ṽ has no boundary layer, and fine nodes at r = 0 only add roundoff
    const double h_out = 1.0 / std::max(so.points_per_length, 2000.0);
    opt.samples = grid::graded(out.R, h_out, 1.0, h_out);
    opt.samples.pop_back();
    Trajectory tr = integrate_radial_ivp(N, f, out.alpha, opt);
    RadialProfile prof = tr.profile;
    // the terminating event is the free boundary: ṽ(R) = 0
    prof.nodes.back() = out.R;
    prof.values.back() = 0.0;
    for (double& x : prof.values) x = std::max(x, 0.0);
    const double h = prof.nodes.back() - prof.nodes[prof.nodes.size() - 2];
    for (double r = out.R + h; r <= 2.0 * out.R; r += h) {
        prof.nodes.push_back(r);
        prof.values.push_back(0.0);
    }
    out.v_tilde = std::move(prof);
    return out;
}

/// Relative weighted L² residual of −Δu − Δ(u²)u + λu − u^{p−1} on the support of u, evaluated by
/// finite differences and normalized by ‖λu‖ + ‖u^{p−1}‖.
inline double primal_residual(const RadialProfile& u, const Params& prm, double lambda) {
    u.validate();
    const std::size_t n = u.support_end();
    const RadialProfile u2 = map_values(u, [](double x) { return x * x; });
    const auto lap_u = radial_laplacian(u, n);
    const auto lap_u2 = radial_laplacian(u2, n);
    std::vector<double> res(n), lin(n), non(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = u.values[i];
        non[i] = std::pow(std::abs(x), prm.p - 1.0);
        lin[i] = lambda * x;
        res[i] = -lap_u[i] - lap_u2[i] * x + lin[i] - non[i];
    }
    auto norm = [&](std::vector<double>& g) {
        for (double& x : g) x *= x;
        return std::sqrt(radial_integral(std::span(u.nodes.data(), n), g, prm.N));
    };
    const double r = norm(res);
    return r / (norm(lin) + norm(non));
}

/// Sup norm of −Δṽ − f(ṽ) over the nodes of (0, R) whose difference stencil stays inside [0, R].
inline double free_boundary_residual(const FreeBoundarySolution& fb, const Params& prm) {
    const FreeBoundaryRhs f{prm.p};
    const auto& r = fb.v_tilde.nodes;
    std::size_t n = 0;
    while (n < r.size() && r[n] <= fb.R) ++n;
    const auto lap = radial_laplacian(fb.v_tilde, n);
    double worst = 0.0;
    for (std::size_t i = 1; i + 3 < n; ++i)
        worst = std::max(worst, std::abs(-lap[i] - f(fb.v_tilde.values[i])));
    return worst;
}

/// Numerical check of the hypotheses behind uniqueness for the free-boundary problem.
struct UniquenessReport {
    double b = FreeBoundaryRhs::b;
    double f_at_b = 0.0;
    std::vector<std::pair<double, double>> g_samples;  ///< (s, g(s)) on (b, 10⁶ b]
    bool g_monotone = false;  ///< g non-increasing on every sampled pair
    bool h1_ok = false;       ///< f ≤ 0 on (0, b], f > 0 beyond
    bool h2_ok = false;       ///< f ∈ C¹ beyond b and g non-increasing
    bool hprime4_ok = false;  ///< d/du(F/f) ≥ (N − 2)/(2N) for sampled u ≠ b
    double g_limit = 0.0;     ///< (p − 2)/2
    double g_at_largest = 0.0;
};

/// g(s) = s f'(s)/f(s) = ((p−2)/2)[1 + 1/((s/b)^{(p−2)/2} − 1)].
inline double uniqueness_g(double p, double s) {
    const double k = (p - 2.0) / 2.0;
    return k * (1.0 + 1.0 / (std::pow(s / FreeBoundaryRhs::b, k) - 1.0));
}

inline UniquenessReport check_uniqueness_hypotheses(const Params& prm, int samples = 1000) {
    prm.validate();
    const FreeBoundaryRhs f{prm.p};
    const double b = FreeBoundaryRhs::b;
    const double k = (prm.p - 2.0) / 2.0;
    UniquenessReport rep;
    rep.f_at_b = f(b);
    rep.g_limit = k;
    rep.g_monotone = true;
    rep.h1_ok = rep.f_at_b <= 0.0;
    rep.hprime4_ok = true;
    const double bound = (prm.N - 2.0) / (2.0 * prm.N);
    auto fprime = [&](double s) { return b * k * std::pow(s / b, k - 1.0) / b; };
    auto check_h4 = [&](double u) {
        const double fu = f(u);
        if (fu == 0.0) return;
        const double d = 1.0 - f.primitive(u) * fprime(u) / (fu * fu);
        rep.hprime4_ok = rep.hprime4_ok && d >= bound;
    };
    for (int i = 1; i <= samples; ++i) {
        // log grid on (b, 10⁶ b]
        const double s = b * std::pow(1e6, static_cast<double>(i) / samples);
        const double gs = uniqueness_g(prm.p, s);
        if (!rep.g_samples.empty() && gs > rep.g_samples.back().second) rep.g_monotone = false;
        rep.g_samples.emplace_back(s, gs);
        rep.h1_ok = rep.h1_ok && f(s) > 0.0;
        const double t = b * static_cast<double>(i) / (samples + 1);  // (0, b)
        rep.h1_ok = rep.h1_ok && f(t) <= 0.0;
        check_h4(s);
        check_h4(t);
    }
    rep.g_at_largest = rep.g_samples.back().second;
    rep.h2_ok = rep.g_monotone;
    return rep;
}

}  // namespace qsnorm
