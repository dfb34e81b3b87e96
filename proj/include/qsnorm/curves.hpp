#pragma once

// The ground-state branch λ ↦ (a, M) and its limiting regimes.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "shooting.hpp"

namespace qsnorm {

struct BranchPoint {
    double lambda = 0.0;
    double a = 0.0;  ///< mass ‖u‖₂²
    double M = 0.0;  ///< energy I(u)
    double kinetic = 0.0;
    double quasi = 0.0;
    double lp = 0.0;
    double sup_norm = 0.0;
    double lagrange_residual = 0.0;  ///< |λa − (lp − kinetic − 4 quasi)|
    double pohozaev_residual = 0.0;  ///< |P(u)|
    double alpha = 0.0;              ///< v(0)
    bool tail_ok = false;

    /// Both residual gates at relative tolerance `tol`.
    [[nodiscard]] bool residuals_ok(double tol = 1e-4) const {
        return lagrange_residual <= tol * lambda * a && pohozaev_residual <= tol * kinetic;
    }
};

/// A solved branch point together with its profiles.
struct BranchSolution {
    BranchPoint point;
    ShootingResult shot;
    RadialProfile u;
    FunctionalValues values;
};

inline BranchPoint make_branch_point(double lambda, const FunctionalValues& f, double alpha, bool tail_ok) {
    BranchPoint b;
    b.lambda = lambda;
    b.a = f.mass;
    b.M = f.energy;
    b.kinetic = f.kinetic;
    b.quasi = f.quasi;
    b.lp = f.lp;
    b.sup_norm = f.sup_norm;
    b.lagrange_residual = std::abs(lambda * f.mass - (f.lp - f.kinetic - 4.0 * f.quasi));
    b.pohozaev_residual = std::abs(f.pohozaev);
    b.alpha = alpha;
    b.tail_ok = tail_ok;
    return b;
}

inline BranchSolution solve_branch_point(const Params& prm, double lambda, const ShootingOptions& so = {}) {
    BranchSolution s;
    s.shot = shoot_dual(prm, lambda, so);
    s.u = dual::v_to_u(s.shot.trajectory.profile);
    s.values = functionals(s.u, prm);
    s.point = make_branch_point(lambda, s.values, s.shot.alpha, s.shot.tail_rate_ok);
    return s;
}

inline BranchPoint branch_point(const Params& prm, double lambda, const ShootingOptions& so = {}) {
    return solve_branch_point(prm, lambda, so).point;
}

/// Energy on the Pohozaev set expressed through kinetic and V only.
inline double manifold_energy(const FunctionalValues& f, const Params& prm) {
    const double N = prm.N, p = prm.p;
    return ((p - 2.0) * N - 4.0) / (2.0 * (p - 2.0) * N) * f.kinetic +
           ((p - 4.0) * N - 4.0) / ((p - 2.0) * N) * f.quasi;
}

/// n points from lo to hi, equally spaced in log.
inline std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw ConfigError("geometric_grid: need 0 < lo < hi and n >= 2");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    out.back() = hi;
    return out;
}

struct TauEstimates {
    double tau1 = kInf;  ///< kinetic
    double tau2 = kInf;  ///< V
    double tau3 = kInf;  ///< ‖u‖_p^p
};

struct BranchFailure {
    double lambda = 0.0;
    std::string message;
};

struct BranchTable {
    Params params;
    std::vector<BranchPoint> points;  ///< sorted by a
    std::vector<BranchFailure> failures;
    double a_star = kInf;
    TauEstimates tau;

    bool monotone = false;              ///< M strictly decreasing in a, up to the slack
    double worst_monotone_excess = 0.0; ///< max over pairs of (M_{i+1} − M_i)/|M_i|
    bool residuals_ok = false;
    bool lambda_decreasing_in_a = false;
    double lambda_a_tail_ratio = 0.0;   ///< λa at the largest a over λa at mid-branch
    double delta_bound_min = 0.0;       ///< min of log V − δ log a along the branch
    double delta_bound_max = 0.0;
};

struct BranchOptions {
    ShootingOptions shooting;
    double residual_tol = 1e-4;
    double monotone_slack = 1e-6;
    double min_success = 0.8;
    int jobs = 1;
};

/// Runs `task(i)` for i in [0, n) on `jobs` threads.
template <class Task>
void parallel_for(std::size_t n, int jobs, const Task& task) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::max(jobs, 1)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) task(i);
        });
    for (auto& t : pool) t.join();
}

/// Fills the monotonicity, residual and orientation reports of a table whose points are sorted.
inline void assess_branch(BranchTable& t, const BranchOptions& opt) {
    const auto& pts = t.points;
    t.monotone = true;
    t.worst_monotone_excess = -kInf;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1].a > t.a_star) break;
        const double excess = (pts[i + 1].M - pts[i].M) / std::abs(pts[i].M);
        t.worst_monotone_excess = std::max(t.worst_monotone_excess, excess);
        if (!(pts[i + 1].M < pts[i].M + opt.monotone_slack * std::abs(pts[i].M))) t.monotone = false;
    }
    t.residuals_ok = std::all_of(pts.begin(), pts.end(),
                                 [&](const BranchPoint& b) { return b.residuals_ok(opt.residual_tol); });
    t.lambda_decreasing_in_a = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        t.lambda_decreasing_in_a = t.lambda_decreasing_in_a && pts[i + 1].lambda < pts[i].lambda;
    if (!pts.empty()) {
        const auto& mid = pts[pts.size() / 2];
        const auto& last = pts.back();
        t.lambda_a_tail_ratio = (last.lambda * last.a) / (mid.lambda * mid.a);
        t.tau = {last.kinetic, last.quasi, last.lp};
        const double delta = gn_exponents(t.params).delta_exponent;
        t.delta_bound_min = kInf;
        t.delta_bound_max = -kInf;
        for (const auto& b : pts) {
            const double q = std::log(b.quasi) - delta * std::log(b.a);
            t.delta_bound_min = std::min(t.delta_bound_min, q);
            t.delta_bound_max = std::max(t.delta_bound_max, q);
        }
    }
}

/// Zero-mass threshold a* used to cap the branch: +∞ for N ≤ 4, a₀ otherwise.
inline double branch_threshold(const Params& prm, const ShootingOptions& so = {}) {
    if (prm.N <= 4) return kInf;
    return shoot_zero_mass(prm, so).a0;
}

inline BranchTable branch_sweep(const Params& prm, const std::vector<double>& lambdas,
                                const BranchOptions& opt = {}, std::optional<double> a_star = std::nullopt) {
    prm.validate();
    if (lambdas.size() < 8) throw ConfigError("branch_sweep: need at least 8 lambda values");
    const auto [mn, mx] = std::minmax_element(lambdas.begin(), lambdas.end());
    if (!(*mn > 0.0)) throw ConfigError("branch_sweep: lambda values must be positive");
    if (*mx / *mn < 1e3 * (1.0 - 1e-12)) throw ConfigError("branch_sweep: lambda values must span 3 decades");

    std::vector<std::optional<BranchPoint>> slots(lambdas.size());
    std::vector<std::string> errors(lambdas.size());
    parallel_for(lambdas.size(), opt.jobs, [&](std::size_t i) {
        try {
            slots[i] = branch_point(prm, lambdas[i], opt.shooting);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });

    BranchTable t;
    t.params = prm;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (slots[i]) t.points.push_back(*slots[i]);
        else t.failures.push_back({lambdas[i], errors[i]});
    }
    if (t.points.size() < opt.min_success * lambdas.size())
        throw NumericFailure("branch_sweep: fewer than " + std::to_string(int(opt.min_success * 100)) +
                             "% of branch points solved");
    std::sort(t.points.begin(), t.points.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
    t.a_star = a_star ? *a_star : branch_threshold(prm, opt.shooting);
    assess_branch(t, opt);
    return t;
}

/// Value at 0 of the quadratic through three points (Richardson extrapolation in x).
inline double extrapolate_to_zero(const std::array<double, 3>& x, const std::array<double, 3>& y) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
        double w = 1.0;
        for (int j = 0; j < 3; ++j)
            if (j != i) w *= (0.0 - x[j]) / (x[i] - x[j]);
        s += w * y[i];
    }
    return s;
}

struct A0Estimate {
    double a0_extrapolated = 0.0;
    double M_extrapolated = 0.0;
    double a0_zero_mass = 0.0;
    double I_u0 = 0.0;
    double a0_rel_error = 0.0;
    double M_rel_error = 0.0;
    bool ok = false;               ///< both within `tol`
    bool branch_truncated = false; ///< disagreement above 5%
};

/// Extrapolates a(λ) and M(λ) to λ → 0⁺ from the three smallest-λ points, in the variable √λ.
inline A0Estimate estimate_a0(const Params& prm, const BranchTable& table, const ZeroMassResult& zm,
                              double tol = 1e-2) {
    prm.validate();
    if (prm.N < 5) throw ConfigError("estimate_a0: a0 is finite only for N >= 5");
    if (table.points.size() < 3) throw ConfigError("estimate_a0: need at least 3 branch points");
    std::vector<BranchPoint> pts = table.points;
    std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) { return x.lambda < y.lambda; });
    if (pts.front().lambda > 1e-3) throw ConfigError("estimate_a0: table must reach lambda <= 1e-3");
    std::array<double, 3> s{}, a{}, m{};
    for (int i = 0; i < 3; ++i) {
        s[i] = std::sqrt(pts[i].lambda);
        a[i] = pts[i].a;
        m[i] = pts[i].M;
    }
    A0Estimate e;
    e.a0_extrapolated = extrapolate_to_zero(s, a);
    e.M_extrapolated = extrapolate_to_zero(s, m);
    e.a0_zero_mass = zm.a0;
    e.I_u0 = functionals(zm.u0, prm).energy;
    e.a0_rel_error = std::abs(e.a0_extrapolated / e.a0_zero_mass - 1.0);
    e.M_rel_error = std::abs(e.M_extrapolated / e.I_u0 - 1.0);
    e.ok = e.a0_rel_error <= tol && e.M_rel_error <= tol;
    e.branch_truncated = std::max(e.a0_rel_error, e.M_rel_error) > 0.05;
    return e;
}

struct SmallMassReport {
    double lambda = 0.0;
    double sup_distance = 0.0;     ///< ‖ṽ_λ − ṽ‖_∞ on [0, 0.9R]
    double center_ratio = 0.0;     ///< ū_λ(0)/√ṽ_λ(0)
    double center_ratio_target = 0.0;  ///< 2^{1/4}
    double center_ratio_rel_error = 0.0;
    double v_sup_over_lambda = 0.0;    ///< ‖v_λ‖_∞^{(p−2)/2}/λ
    double v_sup_bound = 0.0;          ///< 2^{(2−p)/4}
    double u_sup_over_lambda = 0.0;    ///< ‖u_λ‖_∞^{p−2}/λ
    double edge_slope = 0.0;           ///< observed dū_λ/dr at the free-boundary radius
};

/// Rescales a solved branch point by ṽ(y) = λ^{−2/(p−2)}v(y/κ), ū(y) = λ^{−1/(p−2)}u(y/κ),
/// κ = λ^{(p−4)/(2(p−2))}, and compares with the free-boundary solution.
inline SmallMassReport small_mass_limit_check(const Params& prm, const BranchSolution& sol,
                                              const FreeBoundarySolution& fb) {
    prm.validate();
    const double p = prm.p, lambda = sol.point.lambda;
    const double kappa = std::pow(lambda, (p - 4.0) / (2.0 * (p - 2.0)));
    const double v_scale = std::pow(lambda, -2.0 / (p - 2.0));
    const double u_scale = std::pow(lambda, -1.0 / (p - 2.0));
    const RadialProfile& v = sol.shot.trajectory.profile;

    std::vector<double> y(v.size()), vt(v.size()), ut(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        y[i] = v.nodes[i] * kappa;
        vt[i] = v.values[i] * v_scale;
        ut[i] = sol.u.values[i] * u_scale;
    }
    const grid::MonotoneCubic vt_of(y, vt, true);
    SmallMassReport rep;
    rep.lambda = lambda;
    for (std::size_t i = 0; i < fb.v_tilde.size() && fb.v_tilde.nodes[i] <= 0.9 * fb.R; ++i)
        rep.sup_distance = std::max(rep.sup_distance, std::abs(vt_of(fb.v_tilde.nodes[i]) - fb.v_tilde.values[i]));
    rep.center_ratio = ut.front() / std::sqrt(vt.front());
    rep.center_ratio_target = std::pow(2.0, 0.25);
    rep.center_ratio_rel_error = std::abs(rep.center_ratio / rep.center_ratio_target - 1.0);
    rep.v_sup_over_lambda = std::pow(v.sup_norm(), (p - 2.0) / 2.0) / lambda;
    rep.v_sup_bound = std::pow(2.0, (2.0 - p) / 4.0);
    rep.u_sup_over_lambda = std::pow(sol.u.sup_norm(), p - 2.0) / lambda;
    const auto dut = grid::derivative(y, ut);
    const auto it = std::lower_bound(y.begin(), y.end(), fb.R);
    if (it != y.end()) rep.edge_slope = dut[static_cast<std::size_t>(it - y.begin())];
    return rep;
}

struct LargeMassReport {
    double slope = 0.0;
    double slope_target = 0.0;
    double slope_rel_error = 0.0;
    double r_squared = 0.0;
    bool sufficient_range = false;  ///< R² ≥ 0.999
    double prefactor = 0.0;         ///< λ a^{−slope_target} at the smallest λ
    double prefactor_target = 0.0;  ///< ‖W‖₂^{4(p−2)/((p−2)N−4)}
    double prefactor_rel_error = 0.0;
    double energy_ratio = 0.0;      ///< M/(λa) at the smallest λ
    double energy_ratio_target = 0.0;
    double energy_ratio_rel_error = 0.0;
};

inline void require_large_mass_regime(const Params& prm) {
    require_semilinear_regime(prm);
    if (prm.N > 3) throw ConfigError("large-mass asymptotics need 1 <= N <= 3");
}

inline LargeMassReport large_mass_asymptotics(const Params& prm, const BranchTable& table,
                                              const ShootingResult& W) {
    require_large_mass_regime(prm);
    if (table.points.size() < 3) throw ConfigError("large_mass_asymptotics: need at least 3 points");
    const double N = prm.N, p = prm.p;
    const double d = (p - 2.0) * N - 4.0;
    LargeMassReport r;
    r.slope_target = -2.0 * (p - 2.0) / d;

    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const double n = static_cast<double>(table.points.size());
    for (const auto& b : table.points) {
        const double x = std::log(b.a), yv = std::log(b.lambda);
        sx += x;
        sy += yv;
        sxx += x * x;
        sxy += x * yv;
        syy += yv * yv;
    }
    const double cxx = sxx - sx * sx / n, cxy = sxy - sx * sy / n, cyy = syy - sy * sy / n;
    r.slope = cxy / cxx;
    r.r_squared = cxy * cxy / (cxx * cyy);
    r.slope_rel_error = std::abs(r.slope / r.slope_target - 1.0);
    r.sufficient_range = r.r_squared >= 0.999;

    const auto& small = *std::min_element(table.points.begin(), table.points.end(),
                                          [](const auto& x, const auto& y) { return x.lambda < y.lambda; });
    const FunctionalValues w = functionals(W.trajectory.profile, prm);
    r.prefactor = small.lambda * std::pow(small.a, -r.slope_target);
    r.prefactor_target = std::pow(std::sqrt(w.mass), 4.0 * (p - 2.0) / d);
    r.prefactor_rel_error = std::abs(r.prefactor / r.prefactor_target - 1.0);
    r.energy_ratio = small.M / (small.lambda * small.a);
    r.energy_ratio_target = d / (2.0 * (p - 2.0) * N) * w.kinetic / w.mass;
    r.energy_ratio_rel_error = std::abs(r.energy_ratio / r.energy_ratio_target - 1.0);
    return r;
}

struct CriticalRescaleReport {
    std::vector<double> lambdas;
    std::vector<double> mu;             ///< (U(0)/u_λ(0))²
    std::vector<double> sup_distance;   ///< ‖μ^{1/2}u_λ(μ·) − U‖_∞ on [0, 5]
    double mu_exponent = 0.0;           ///< least-squares slope of log μ against log λ
    bool distance_decreasing = false;   ///< along decreasing λ
};

inline double talenti(double r) { return std::pow(3.0, 0.25) / std::sqrt(1.0 + r * r); }

/// Talenti rescaling of small-λ solutions for N = 3, p = 6.
inline CriticalRescaleReport critical_rescale(const Params& prm, std::vector<BranchSolution> sols) {
    if (prm.N != 3 || prm.p != 6.0) throw ConfigError("critical_rescale needs N = 3, p = 6");
    if (sols.size() < 2) throw ConfigError("critical_rescale: need at least 2 branch points");
    std::sort(sols.begin(), sols.end(), [](const auto& x, const auto& y) { return x.point.lambda > y.point.lambda; });
    CriticalRescaleReport rep;
    for (const auto& s : sols) {
        const double mu = std::pow(talenti(0.0) / s.u.values.front(), 2.0);
        std::vector<double> x(s.u.size()), w(s.u.size());
        for (std::size_t i = 0; i < s.u.size(); ++i) {
            x[i] = s.u.nodes[i] / mu;
            w[i] = std::sqrt(mu) * s.u.values[i];
        }
        const grid::MonotoneCubic w_of(x, w, true);
        double dist = 0.0;
        for (int k = 0; k <= 500; ++k) {
            const double r = 5.0 * k / 500.0;
            dist = std::max(dist, std::abs(w_of(r) - talenti(r)));
        }
        rep.lambdas.push_back(s.point.lambda);
        rep.mu.push_back(mu);
        rep.sup_distance.push_back(dist);
    }
    const double n = static_cast<double>(rep.mu.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < rep.mu.size(); ++i) {
        const double x = std::log(rep.lambdas[i]), y = std::log(rep.mu[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    rep.mu_exponent = (sxy - sx * sy / n) / (sxx - sx * sx / n);
    rep.distance_decreasing = true;
    for (std::size_t i = 0; i + 1 < rep.sup_distance.size(); ++i)
        rep.distance_decreasing = rep.distance_decreasing && rep.sup_distance[i + 1] < rep.sup_distance[i];
    return rep;
}

}  // namespace qsnorm
