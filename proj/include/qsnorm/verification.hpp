#pragma once

// Independent reference computations and the acceptance checks built on them. Each check reports
// one pass/fail line with the measured quantities and its runtime against a fixed budget.

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include "curves.hpp"
#include "direct_minimizer.hpp"

namespace qsnorm::oracle {

/// Ground state of −W'' + W = W^{p−1} on ℝ: W(x) = ((p/2) sech²((p−2)x/2))^{1/(p−2)}.
struct SechGroundState {
    double p;
    [[nodiscard]] double amplitude() const { return std::pow(p / 2.0, 1.0 / (p - 2.0)); }
    [[nodiscard]] double operator()(double x) const {
        const double s = 1.0 / std::cosh((p - 2.0) * x / 2.0);
        return amplitude() * std::pow(s, 2.0 / (p - 2.0));
    }
    /// W'' − W + W^{p−1} from the exact derivatives of A sech^q(cx).
    [[nodiscard]] double residual(double x) const {
        const double q = 2.0 / (p - 2.0), c = (p - 2.0) / 2.0, A = amplitude();
        const double s = 1.0 / std::cosh(c * x), t = std::tanh(c * x);
        const double w = A * std::pow(s, q);
        const double w2 = A * q * c * c * std::pow(s, q) * (q * t * t - s * s);
        return w2 - w + std::pow(w, p - 1.0);
    }
    /// ∫_ℝ W² and ∫_ℝ W'² by double-exponential quadrature on [0, ∞).
    [[nodiscard]] std::pair<double, double> mass_and_kinetic() const {
        boost::math::quadrature::exp_sinh<double> q;
        const double c = (p - 2.0) / 2.0, qq = 2.0 / (p - 2.0), A = amplitude();
        const double m = q.integrate([&](double x) { return std::pow((*this)(x), 2.0); });
        const double k = q.integrate([&](double x) {
            const double s = 1.0 / std::cosh(c * x);
            const double d = A * qq * c * std::pow(s, qq) * std::tanh(c * x);
            return d * d;
        });
        return {2.0 * m, 2.0 * k};
    }
};

/// Chebyshev–Gauss–Lobatto differentiation matrix on [−1, 1] with nodes x_j = cos(jπ/n).
inline std::pair<Eigen::VectorXd, Eigen::MatrixXd> chebyshev(int n) {
    Eigen::VectorXd x(n + 1), c(n + 1);
    for (int j = 0; j <= n; ++j) {
        x(j) = std::cos(std::numbers::pi * j / n);
        c(j) = (j == 0 || j == n ? 2.0 : 1.0) * (j % 2 == 0 ? 1.0 : -1.0);
    }
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j) D(i, j) = c(i) / c(j) / (x(i) - x(j));
    for (int i = 0; i <= n; ++i) D(i, i) = -D.row(i).sum();
    return {x, D};
}

/// v(0) of the positive even solution of v'' + g(v) = 0 on ℝ, g(v) = φ'φ(φ^{p−2} − λ), by
/// Chebyshev collocation on [0, L] with v'(0) = 0 and the decay condition v'(L) + √λ v(L) = 0,
/// solved by damped Newton from the rescaled semilinear profile.
inline double collocation_dual_alpha_1d(double p, double lambda, int n = 220, double L_over_scale = 34.0) {
    const double L = L_over_scale / std::sqrt(lambda);
    auto [x, D] = chebyshev(n);
    const Eigen::VectorXd r = (L / 2.0) * (1.0 - x.array());  // r_0 = 0, r_n = L
    const Eigen::MatrixXd D1 = -(2.0 / L) * D;
    const Eigen::MatrixXd D2 = D1 * D1;
    const SechGroundState W{p};
    Eigen::VectorXd v(n + 1);
    for (int j = 0; j <= n; ++j)
        v(j) = dual::phi_inv(std::pow(lambda, 1.0 / (p - 2.0)) * W(std::sqrt(lambda) * r(j)));

    auto g = [&](double s, double& dg) {
        const auto f = dual::phi(s);
        const double ph = f.phi, d1 = f.phi_prime;
        const double d2 = -2.0 * ph * std::pow(d1, 4.0);
        const double pw = std::pow(std::abs(ph), p - 2.0);
        dg = (d1 * d1 + ph * d2) * (pw - lambda) + (p - 2.0) * pw * d1 * d1;
        return ph * d1 * (pw - lambda);
    };
    for (int it = 0; it < 100; ++it) {
        Eigen::VectorXd F = D2 * v;
        Eigen::MatrixXd J = D2;
        for (int j = 0; j <= n; ++j) {
            double dg = 0.0;
            F(j) += g(v(j), dg);
            J(j, j) += dg;
        }
        F(0) = D1.row(0).dot(v);
        J.row(0) = D1.row(0);
        F(n) = D1.row(n).dot(v) + std::sqrt(lambda) * v(n);
        J.row(n) = D1.row(n);
        J(n, n) += std::sqrt(lambda);
        const Eigen::VectorXd delta = J.partialPivLu().solve(-F);
        double damp = 1.0;
        while (damp > 1e-3 && (v + damp * delta)(0) <= 0.0) damp /= 2.0;
        v += damp * delta;
        if (delta.lpNorm<Eigen::Infinity>() <= 1e-14 * v.lpNorm<Eigen::Infinity>()) break;
    }
    if (!(v(0) > 0.0)) throw NumericFailure("collocation oracle collapsed to the trivial solution");
    return v(0);
}

/// U(r) = 3^{1/4}(1 + r²)^{−1/2}, solution of −ΔU = U⁵ in ℝ³.
inline double talenti(double r) { return std::pow(3.0, 0.25) / std::sqrt(1.0 + r * r); }

/// Root of a continuous function on [lo, hi] with a sign change, by bisection to machine precision.
inline double bisect_root(const std::function<double(double)>& f, double lo, double hi) {
    auto tol = [](double a, double b) { return std::abs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(b); };
    const auto [a, b] = boost::math::tools::bisect(f, lo, hi, tol);
    return 0.5 * (a + b);
}

}  // namespace qsnorm::oracle

namespace qsnorm::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool checks_passed = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;

    [[nodiscard]] bool passed() const { return checks_passed && seconds <= budget_seconds; }
    [[nodiscard]] std::string line() const {
        std::ostringstream os;
        os << (passed() ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  [" << std::fixed;
        os.precision(2);
        os << seconds << " s / " << budget_seconds << " s]  " << detail;
        return os.str();
    }
};

/// Collects named checks into a one-line detail string.
class Checks {
public:
    void add(const std::string& name, bool ok, double measured, const std::string& bound) {
        std::ostringstream os;
        os.precision(4);
        os << name << (ok ? "" : " FAILED") << " (" << measured << bound << ")";
        parts_.push_back(os.str());
        ok_ = ok_ && ok;
    }
    void add(const std::string& name, bool ok) {
        parts_.push_back(name + (ok ? "" : " FAILED"));
        ok_ = ok_ && ok;
    }
    [[nodiscard]] bool ok() const { return ok_; }
    [[nodiscard]] std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "; " : "") + parts_[i];
        return s;
    }

private:
    bool ok_ = true;
    std::vector<std::string> parts_;
};

template <class Body>
CriterionResult timed(int id, std::string name, double budget, const Body& body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.budget_seconds = budget;
    const auto t0 = std::chrono::steady_clock::now();
    Checks c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.add(std::string("exception: ") + e.what(), false);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.checks_passed = c.ok();
    r.detail = c.str();
    return r;
}

struct Config {
    int jobs = 1;
    std::uint64_t seed = 20240905;
};

/// Random radial decreasing profile: Gaussian, sech^q, or Gaussian times (1 + c x²) with c ≤ 1.
inline RadialProfile random_profile(int N, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const double A = 0.2 + 2.8 * U(rng), s = 0.3 + 2.7 * U(rng);
    const int family = static_cast<int>(3 * U(rng)) % 3;
    const double q = 0.5 + 2.5 * U(rng), c = U(rng);
    const double extent = family == 1 ? s * 40.0 / q : s * 7.0;
    auto r = grid::graded(extent, s * 1e-3, 1.005, s / 200.0);
    std::vector<double> v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double x = r[i] / s;
        switch (family) {
            case 0: v[i] = A * std::exp(-x * x); break;
            case 1: v[i] = A * std::pow(1.0 / std::cosh(x), q); break;
            default: v[i] = A * std::exp(-x * x) * (1.0 + c * x * x); break;
        }
    }
    return {N, std::move(r), std::move(v)};
}

inline CriterionResult functional_identities(const Config& cfg) {
    return timed(1, "functional identities", 10.0, [&](Checks& c) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        const int dims[] = {1, 2, 3, 5};
        double worst_lin = 0.0, worst_scale = 0.0, worst_quasi = 0.0;
        for (int k = 0; k < 100; ++k) {
            const int N = dims[k % 4];
            const double lo = 4.0 + 4.0 / N, hi = std::min(2.0 * Params{N, 0}.two_star(), lo + 6.0);
            const Params prm{N, lo + (hi - lo) * (0.02 + 0.96 * U(rng))};
            const RadialProfile u = random_profile(N, rng);
            const FunctionalValues f = functionals(u, prm);
            const FiberPolynomial h = FiberPolynomial::from(f, prm);
            const double scale = f.kinetic + f.quasi + f.lp;
            worst_lin = std::max({worst_lin, std::abs(h.h(1.0) - f.energy) / scale,
                                  std::abs(h.dh(1.0) - f.pohozaev) / scale,
                                  std::abs(h.d2h(1.0) - f.pohozaev2) / scale,
                                  std::abs(f.energy - f.pohozaev / prm.sigma() - manifold_energy(f, prm)) / scale});
            for (double t : {0.7, 1.6}) {
                const FunctionalValues ft = functionals(fiber_scale(u, t), prm);
                const double sc = ft.kinetic + ft.quasi + ft.lp;
                worst_scale = std::max(worst_scale, std::abs(ft.energy - h.h(t)) / sc);
            }
            const double k2 = functionals(map_values(u, [](double x) { return x * x; }), prm).kinetic;
            worst_quasi = std::max(worst_quasi, std::abs(0.25 * k2 / f.quasi - 1.0));
        }
        c.add("I, P, second fiber derivative and manifold identities", worst_lin <= 1e-12, worst_lin, " <= 1e-12");
        c.add("energy along the fiber", worst_scale <= 1e-12, worst_scale, " <= 1e-12");
        c.add("V = kinetic(u^2)/4", worst_quasi <= 1e-8, worst_quasi, " <= 1e-8");
    });
}

inline CriterionResult fiber_map_checks(const Config& cfg) {
    return timed(2, "fiber map", 5.0, [&](Checks& c) {
        std::mt19937_64 rng(cfg.seed + 1);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        auto logu = [&](double lo, double hi) { return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * U(rng)); };
        int bad_unique = 0, bad_concave = 0, bad_tri = 0;
        for (int k = 0; k < 10000; ++k) {
            FiberPolynomial f;
            const int N = 1 + static_cast<int>(6 * U(rng)) % 6;
            f.n_exp = N + 2;
            f.sigma = N + 2 + logu(5e-2, 10.0);  // keeps t_u inside the double range
            f.A = logu(1e-3, 1e3);
            f.B = (k % 10 == 0) ? 0.0 : logu(1e-3, 1e3);
            f.C = logu(1e-3, 1e3);
            if (k % 7 == 0) f.C = (2.0 * f.A + f.n_exp * f.B) / f.sigma;  // P = 0 up to rounding
            const double t = f.critical_point();
            if (!(f.d2h(t) < 0.0)) ++bad_concave;
            int changes = 0;
            double prev = f.reduced_slope(t * 1e-3);
            for (int i = 1; i <= 600; ++i) {
                const double cur = f.reduced_slope(t * std::pow(1e6, i / 600.0) * 1e-3);
                if ((prev > 0.0) != (cur > 0.0)) ++changes;
                prev = cur;
            }
            if (changes != 1) ++bad_unique;
            const double P = f.reduced_slope(1.0);
            const bool tri = (P > 0.0 && t > 1.0) || (P < 0.0 && t < 1.0) || (P == 0.0 && t == 1.0);
            if (!tri) ++bad_tri;
        }
        c.add("unique critical point", bad_unique == 0, bad_unique, " failures");
        c.add("h''(t_u) < 0", bad_concave == 0, bad_concave, " failures");
        c.add("sign(P) matches t_u vs 1", bad_tri == 0, bad_tri, " failures");
        // h'(t)/t = 2 + 4t² − 5t³ for A = B = C = 1, N = 2, σ = 5
        const FiberPolynomial ex{1.0, 1.0, 1.0, 5.0, 4};
        const double root = oracle::bisect_root([](double t) { return 5 * t * t * t - 4 * t * t - 2; }, 1.0, 2.0);
        const double err = std::abs(ex.critical_point() - root);
        c.add("root of 5t^3-4t^2-2", err <= 1e-8, err, " <= 1e-8");
    });
}

inline CriterionResult dual_transform_checks(const Config& cfg) {
    return timed(3, "dual transform", 1.0, [&](Checks& c) {
        std::mt19937_64 rng(cfg.seed + 2);
        std::uniform_real_distribution<double> U(-8.0, 8.0);
        double worst_trip = 0.0;
        int bound_fail = 0;
        for (int k = 0; k < 1000; ++k) {
            const double s = std::copysign(std::pow(10.0, U(rng)), k % 2 ? 1.0 : -1.0);
            const auto f = dual::phi(s);
            worst_trip = std::max(worst_trip, std::abs(dual::phi_inv(f.phi) - s) / std::max(1.0, std::abs(s)));
            const double a = std::abs(f.phi), t = std::abs(s);
            const double mid = f.phi * f.phi_prime * s;
            const bool ok = f.phi_prime > 0.0 && f.phi_prime <= 1.0 &&
                            a <= std::min(t, std::pow(2.0, 0.25) * std::sqrt(t)) &&
                            0.5 * f.phi * f.phi <= mid && mid <= f.phi * f.phi &&
                            a * f.phi_prime <= 1.0 / std::numbers::sqrt2;
            if (!ok) ++bound_fail;
        }
        c.add("round trip", worst_trip <= 1e-11, worst_trip, " <= 1e-11");
        c.add("pointwise bounds at 1000 points", bound_fail == 0, bound_fail, " failures");
        const auto big = dual::phi(1e6);
        const double e1 = std::abs(big.phi / std::sqrt(1e6) / std::pow(2.0, 0.25) - 1.0);
        const double e2 = std::abs(big.phi_prime * std::sqrt(1e6) / std::pow(2.0, -0.75) - 1.0);
        c.add("phi(s)/sqrt(s) -> 2^(1/4)", e1 <= 5e-3, e1, " <= 5e-3");
        c.add("phi'(s)sqrt(s) -> 2^(-3/4)", e2 <= 5e-3, e2, " <= 5e-3");
    });
}

inline CriterionResult shooting_checks(const Config&) {
    return timed(4, "shooting correctness", 30.0, [&](Checks& c) {
        const Params prm{1, 9.0};
        const double a_ref = oracle::collocation_dual_alpha_1d(9.0, 1.0);
        const double a_shoot = shoot_dual(prm, 1.0).alpha;
        const double e1 = std::abs(a_shoot - a_ref);
        c.add("dual alpha vs collocation", e1 <= 1e-6, e1, " <= 1e-6");

        const oracle::SechGroundState W{9.0};
        double ansatz_res = 0.0;
        for (int k = 0; k <= 2000; ++k) ansatz_res = std::max(ansatz_res, std::abs(W.residual(k * 0.005)));
        c.add("sech ansatz residual", ansatz_res <= 1e-10, ansatz_res, " <= 1e-10");
        const auto sw = shoot_semilinear(prm);
        double e2 = 0.0;
        for (std::size_t i = 0; i < sw.trajectory.profile.size(); ++i)
            e2 = std::max(e2, std::abs(sw.trajectory.profile.values[i] - W(sw.trajectory.profile.nodes[i])));
        c.add("semilinear W sup error", e2 <= 1e-6, e2, " <= 1e-6");
        const double m_ref = W.mass_and_kinetic().first;
        const double e3 = std::abs(functionals(sw.trajectory.profile, prm).mass / m_ref - 1.0);
        c.add("mass of W", e3 <= 1e-6, e3, " <= 1e-6");

        IvpOptions opt;
        opt.r_max = 10.0;
        opt.length_scale = 1.0;
        opt.samples = grid::graded(10.0, 1e-3, 1.01, 0.01);
        opt.samples.pop_back();
        const auto tr = integrate_radial_ivp(3, [](double v) { return v * v * v * v * v; }, oracle::talenti(0.0), opt);
        double e4 = 0.0;
        for (std::size_t i = 0; i < tr.profile.size(); ++i)
            e4 = std::max(e4, std::abs(tr.profile.values[i] - oracle::talenti(tr.profile.nodes[i])));
        c.add("Talenti profile on [0,10]", e4 <= 1e-6 && tr.profile.nodes.back() >= 10.0 - 1e-9, e4, " <= 1e-6");
    });
}

inline CriterionResult branch_checks(const Config& cfg) {
    return timed(5, "branch structure", 600.0, [&](Checks& c) {
        BranchOptions opt;
        opt.jobs = cfg.jobs;
        const Params p1{1, 9.0};
        const BranchTable t1 = branch_sweep(p1, geometric_grid(1e-2, 1e3, 25), opt);
        c.add("N=1 sweep solved all 25 points", t1.points.size() == 25 && t1.failures.empty());
        c.add("M strictly decreasing in a", t1.monotone, t1.worst_monotone_excess, " max relative increase");
        double worst_lag = 0.0, worst_poh = 0.0;
        for (const auto& b : t1.points) {
            worst_lag = std::max(worst_lag, b.lagrange_residual / (b.lambda * b.a));
            worst_poh = std::max(worst_poh, b.pohozaev_residual / b.kinetic);
        }
        c.add("Lagrange residual", worst_lag <= 1e-4, worst_lag, " <= 1e-4");
        c.add("Pohozaev residual", worst_poh <= 1e-4, worst_poh, " <= 1e-4");
        const double decades = std::log10(t1.points.front().lambda / t1.points.back().lambda);
        c.add("lambda grows as a shrinks", t1.lambda_decreasing_in_a && decades >= 3.0, decades, " decades");

        const Params p5{5, 6.0};
        const ZeroMassResult zm = shoot_zero_mass(p5);
        const BranchTable t5 = branch_sweep(p5, geometric_grid(1e-6, 1e-3, 10), opt, zm.a0);
        const A0Estimate e = estimate_a0(p5, t5, zm);
        c.add("N=5 a(0+) vs a0", e.a0_rel_error <= 1e-2, e.a0_rel_error, " <= 1e-2");
        c.add("N=5 M(0+) vs I(u0)", e.M_rel_error <= 1e-2, e.M_rel_error, " <= 1e-2");
    });
}

inline CriterionResult small_mass_checks(const Config&) {
    return timed(6, "small-mass limits", 300.0, [&](Checks& c) {
        const Params prm{1, 9.0};
        const FreeBoundarySolution fb = shoot_free_boundary(prm);
        std::vector<SmallMassReport> reps;
        for (double lam : {1e2, 1e3, 1e4}) reps.push_back(small_mass_limit_check(prm, solve_branch_point(prm, lam), fb));
        const bool decreasing = reps[1].sup_distance < reps[0].sup_distance && reps[2].sup_distance < reps[1].sup_distance;
        c.add("rescaled profile distance decreasing", decreasing, reps[2].sup_distance, " at lambda=1e4");
        c.add("u(0)/sqrt(v(0)) vs 2^(1/4) at lambda=1e4", reps[2].center_ratio_rel_error <= 1e-2,
              reps[2].center_ratio_rel_error, " <= 1e-2");
        const double e = std::abs(fb.alpha - fb.alpha_closed_form);
        c.add("free-boundary alpha vs closed form", e <= 1e-8, e, " <= 1e-8");
        double worst = kInf;
        for (const auto& r : reps) worst = std::min(worst, r.v_sup_over_lambda / (r.v_sup_bound * (1.0 - 1e-2)));
        c.add("liminf bound on |v|_inf^((p-2)/2)/lambda", worst >= 1.0, worst, " >= 1 (ratio to bound)");
    });
}

inline CriterionResult large_mass_checks(const Config& cfg) {
    return timed(7, "large-mass asymptotics", 300.0, [&](Checks& c) {
        BranchOptions opt;
        opt.jobs = cfg.jobs;
        for (const Params prm : {Params{1, 9.0}, Params{2, 8.0}}) {
            const ShootingResult W = shoot_semilinear(prm);
            const BranchTable t = branch_sweep(prm, geometric_grid(1e-10, 1e-7, 9), opt);
            const LargeMassReport r = large_mass_asymptotics(prm, t, W);
            const std::string tag = "N=" + std::to_string(prm.N) + " ";
            c.add(tag + "slope", r.slope_rel_error <= 2e-2, r.slope_rel_error, " <= 2e-2");
            c.add(tag + "prefactor", r.prefactor_rel_error <= 3e-2, r.prefactor_rel_error, " <= 3e-2");
            c.add(tag + "M/(lambda a)", r.energy_ratio_rel_error <= 2e-2, r.energy_ratio_rel_error, " <= 2e-2");
        }
    });
}

/// exp(−(r/w)²) on a graded grid, rescaled to mass `a`.
inline RadialProfile gaussian_profile(const Params& prm, double width, double a) {
    auto r = grid::graded(8.0 * width, 1e-3 * width, 1.01, width / 50.0);
    std::vector<double> v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = std::exp(-std::pow(r[i] / width, 2.0));
    return detail::with_mass(RadialProfile{prm.N, std::move(r), std::move(v)}, a, prm);
}

inline CriterionResult minmax_checks(const Config& cfg) {
    return timed(8, "min-max oracle agreement", 900.0, [&](Checks& c) {
        for (const Params prm : {Params{1, 9.0}, Params{2, 8.0}}) {
            const std::vector<double> lambdas{0.1, 1.0, 10.0};
            std::vector<BranchPoint> pts(3);
            std::vector<MinimizeResult> res(3);
            parallel_for(3, cfg.jobs, [&](std::size_t i) {
                pts[i] = branch_point(prm, lambdas[i]);
                res[i] = minimize_reduced(prm, pts[i].a, gaussian_profile(prm, 1.0 / std::sqrt(lambdas[i]), 0.5 * pts[i].a));
            });
            double worst_gap = 0.0, worst_below = -kInf;
            for (int i = 0; i < 3; ++i) {
                worst_gap = std::max(worst_gap, std::abs(res[i].M_hat / pts[i].M - 1.0));
                worst_below = std::max(worst_below, (pts[i].M - res[i].M_hat) / std::abs(pts[i].M));
            }
            const std::string tag = "N=" + std::to_string(prm.N) + " ";
            c.add(tag + "M_hat within 1% of M", worst_gap <= 1e-2, worst_gap, " <= 1e-2");
            c.add(tag + "M_hat not below M", worst_below <= 1e-6, worst_below, " <= 1e-6");
        }
    });
}

inline CriterionResult uniqueness_checks(const Config&) {
    return timed(9, "uniqueness hypotheses", 1.0, [&](Checks& c) {
        for (const Params prm : {Params{5, 5.0}, Params{3, 6.0}, Params{1, 9.0}}) {
            const UniquenessReport u = check_uniqueness_hypotheses(prm);
            const std::string tag = "p=" + std::to_string(static_cast<int>(prm.p)) + " ";
            c.add(tag + "f(sqrt2/2) = 0", u.f_at_b == 0.0, u.f_at_b, " == 0");
            c.add(tag + "g non-increasing", u.g_monotone && u.g_samples.size() >= 1000);
            const double e = std::abs(u.g_at_largest - u.g_limit);
            c.add(tag + "g limit", e <= 1e-3, e, " <= 1e-3");
        }
    });
}

inline std::vector<CriterionResult> run_all(const Config& cfg = {}) {
    return {functional_identities(cfg), fiber_map_checks(cfg), dual_transform_checks(cfg),
            shooting_checks(cfg),       branch_checks(cfg),    small_mass_checks(cfg),
            large_mass_checks(cfg),     minmax_checks(cfg),    uniqueness_checks(cfg)};
}

}  // namespace qsnorm::acceptance
