// qsnorm: solvers, sweeps, limit checks and the acceptance suite from the command line.
//
// Exit codes: 0 success, 1 validation error, 2 numeric failure, 3 failed verification gate.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qsnorm/qsnorm.hpp>
#include <qsnorm/verification.hpp>

namespace fs = std::filesystem;
using namespace qsnorm;

namespace {

enum Exit { kOk = 0, kValidation = 1, kNumeric = 2, kGate = 3 };

struct RunConfig {
    int N = 0;      // 0: subcommand default
    double p = 0.0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    int points = 0;
    std::vector<double> lambdas;
    double a = 0.0;
    std::string init;
    double rel_tol = 1e-12;
    double abs_tol = 1e-15;
    double residual_tol = 1e-4;
    int jobs = 1;
    std::string out = ".";
};

Params params_or(const RunConfig& rc, int N, double p) {
    return Params::checked(rc.N > 0 ? rc.N : N, rc.p > 0.0 ? rc.p : p);
}

ShootingOptions shooting_options(const RunConfig& rc) {
    if (!(rc.rel_tol > 0.0) || !(rc.abs_tol > 0.0)) throw ConfigError("tolerances must be positive");
    ShootingOptions so;
    so.rel_tol = rc.rel_tol;
    so.abs_tol = rc.abs_tol;
    return so;
}

BranchOptions branch_options(const RunConfig& rc) {
    if (rc.jobs < 1) throw ConfigError("--jobs must be >= 1");
    BranchOptions opt;
    opt.shooting = shooting_options(rc);
    opt.residual_tol = rc.residual_tol;
    opt.jobs = rc.jobs;
    return opt;
}

/// Explicit --lambdas, else a geometric grid from --lambda-min/--lambda-max/--points.
std::vector<double> lambda_grid(const RunConfig& rc, double lo, double hi, int n) {
    if (!rc.lambdas.empty()) return rc.lambdas;
    lo = rc.lambda_min > 0.0 ? rc.lambda_min : lo;
    hi = rc.lambda_max > 0.0 ? rc.lambda_max : hi;
    n = rc.points > 0 ? rc.points : n;
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw ConfigError("need 0 < lambda-min < lambda-max and points >= 2");
    return geometric_grid(lo, hi, n);
}

fs::path out_path(const RunConfig& rc, const std::string& name) { return fs::path(rc.out) / name; }

int gate(bool ok) { return ok ? kOk : kGate; }

void check_line(const char* name, bool ok, const std::string& detail = "") {
    std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name, detail.empty() ? "" : "  ", detail.c_str());
}

std::string num(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

int run_branch(const RunConfig& rc) {
    const Params prm = params_or(rc, 1, 9.0);
    const BranchOptions opt = branch_options(rc);
    const BranchTable t = branch_sweep(prm, lambda_grid(rc, 1e-2, 1e3, 25), opt);
    io::write_branch_csv(out_path(rc, "branch.csv"), t);
    io::write_json(out_path(rc, "branch.json"), io::to_json(t));
    std::printf("branch N=%d p=%s: %zu points, %zu failures, a in [%s, %s]\n", prm.N, num(prm.p).c_str(),
                t.points.size(), t.failures.size(), num(t.points.front().a).c_str(), num(t.points.back().a).c_str());
    check_line("M decreasing in a", t.monotone, "max relative increase " + num(t.worst_monotone_excess));
    check_line("Lagrange and Pohozaev residuals", t.residuals_ok, "tolerance " + num(opt.residual_tol));
    return gate(t.monotone && t.residuals_ok);
}

int run_zero_mass(const RunConfig& rc) {
    const Params prm = params_or(rc, 5, 6.0);
    const ZeroMassResult z = shoot_zero_mass(prm, shooting_options(rc));
    io::write_profile_csv(out_path(rc, "zero_mass_u0.csv"), z.u0);
    io::write_json(out_path(rc, "zero_mass.json"), io::to_json(z));
    std::printf("zero-mass N=%d p=%s: alpha = %s, a0 = %s, decay exponent %s\n", prm.N, num(prm.p).c_str(),
                num(z.alpha).c_str(), num(z.a0).c_str(), num(z.decay_exponent).c_str());
    check_line("decay exponent N-2 within 5%", z.decay_ok);
    check_line("alpha stable under doubling R_max", z.alpha_stable);
    return gate(z.decay_ok && z.alpha_stable);
}

int run_free_boundary(const RunConfig& rc) {
    const Params prm = params_or(rc, 1, 9.0);
    const FreeBoundarySolution fb = shoot_free_boundary(prm, shooting_options(rc));
    const double res = free_boundary_residual(fb, prm);
    io::write_profile_csv(out_path(rc, "free_boundary.csv"), fb.v_tilde);
    auto j = io::to_json(fb);
    j["interior_residual"] = io::number(res);
    io::write_json(out_path(rc, "free_boundary.json"), j);
    std::printf("free-boundary N=%d p=%s: alpha = %s, R = %s\n", prm.N, num(prm.p).c_str(), num(fb.alpha).c_str(),
                num(fb.R).c_str());
    bool ok = fb.residual <= 1e-8;
    check_line("boundary data v(R) = v'(R) = 0", fb.residual <= 1e-8, num(fb.residual));
    if (prm.N == 1) {
        const double e = std::abs(fb.alpha / fb.alpha_closed_form - 1.0);
        check_line("alpha vs closed form", e <= 1e-8, num(e));
        ok = ok && e <= 1e-8;
    }
    return gate(ok);
}

int run_semilinear(const RunConfig& rc) {
    const Params prm = params_or(rc, 1, 9.0);
    const ShootingResult W = shoot_semilinear(prm, shooting_options(rc));
    const FunctionalValues f = functionals(W.trajectory.profile, prm);
    io::write_profile_csv(out_path(rc, "semilinear_W.csv"), W.trajectory.profile);
    io::write_json(out_path(rc, "semilinear.json"),
                   {{"params", io::to_json(prm)},
                    {"alpha", io::number(W.alpha)},
                    {"mass", io::number(f.mass)},
                    {"kinetic", io::number(f.kinetic)},
                    {"tail_rate_ok", W.tail_rate_ok}});
    std::printf("semilinear N=%d p=%s: W(0) = %s, |W|_2^2 = %s, |grad W|_2^2 = %s\n", prm.N, num(prm.p).c_str(),
                num(W.alpha).c_str(), num(f.mass).c_str(), num(f.kinetic).c_str());
    check_line("linearized tail matches", W.tail_rate_ok, num(W.tail_rate_mismatch));
    return gate(W.tail_rate_ok);
}

int run_minimize(const RunConfig& rc) {
    const Params prm = params_or(rc, 1, 9.0);
    if (!(rc.a > 0.0)) throw ConfigError("minimize needs --a > 0");
    const RadialProfile init = rc.init.empty() ? acceptance::gaussian_profile(prm, 1.0, rc.a)
                                               : io::read_profile_csv(rc.init, prm.N);
    const MinimizeResult m = minimize_reduced(prm, rc.a, init);
    io::write_profile_csv(out_path(rc, "minimizer.csv"), m.profile);
    auto j = io::to_json(m, rc.a);
    j["params"] = io::to_json(prm);
    io::write_json(out_path(rc, "minimizer.json"), j);
    std::printf("minimize N=%d p=%s a=%s: M_hat = %s after %d iterations%s\n", prm.N, num(prm.p).c_str(),
                num(rc.a).c_str(), num(m.M_hat).c_str(), m.iterations, m.converged ? "" : " (not converged)");
    return kOk;
}

int run_small_mass(const RunConfig& rc) {
    const Params prm = params_or(rc, 1, 9.0);
    const ShootingOptions so = shooting_options(rc);
    const FreeBoundarySolution fb = shoot_free_boundary(prm, so);
    auto lambdas = rc.lambdas.empty() ? std::vector<double>{1e2, 1e3, 1e4} : rc.lambdas;
    std::sort(lambdas.begin(), lambdas.end());
    std::vector<SmallMassReport> reps(lambdas.size());
    parallel_for(lambdas.size(), rc.jobs, [&](std::size_t i) {
        reps[i] = small_mass_limit_check(prm, solve_branch_point(prm, lambdas[i], so), fb);
    });
    nlohmann::json arr = nlohmann::json::array();
    bool decreasing = true, bound = true;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        arr.push_back(io::to_json(reps[i]));
        if (i > 0) decreasing = decreasing && reps[i].sup_distance < reps[i - 1].sup_distance;
        bound = bound && reps[i].v_sup_over_lambda >= reps[i].v_sup_bound * (1.0 - 1e-2);
        std::printf("lambda %s: distance %s, u(0)/sqrt(v(0)) %s, |v|^((p-2)/2)/lambda %s\n", num(reps[i].lambda).c_str(),
                    num(reps[i].sup_distance).c_str(), num(reps[i].center_ratio).c_str(),
                    num(reps[i].v_sup_over_lambda).c_str());
    }
    io::write_json(out_path(rc, "small_mass.json"), {{"params", io::to_json(prm)}, {"free_boundary", io::to_json(fb)}, {"points", arr}});
    const bool ratio = reps.back().center_ratio_rel_error <= 1e-2;
    check_line("rescaled distance decreasing in lambda", decreasing);
    check_line("u(0)/sqrt(v(0)) within 1% of 2^(1/4) at the largest lambda", ratio, num(reps.back().center_ratio_rel_error));
    check_line("liminf bound on |v|^((p-2)/2)/lambda", bound);
    return gate(decreasing && ratio && bound);
}

int run_large_mass(const RunConfig& rc) {
    const Params prm = params_or(rc, 1, 9.0);
    require_large_mass_regime(prm);
    const BranchOptions opt = branch_options(rc);
    const ShootingResult W = shoot_semilinear(prm, opt.shooting);
    const BranchTable t = branch_sweep(prm, lambda_grid(rc, 1e-10, 1e-7, 9), opt);
    const LargeMassReport r = large_mass_asymptotics(prm, t, W);
    io::write_branch_csv(out_path(rc, "large_mass_branch.csv"), t);
    io::write_json(out_path(rc, "large_mass.json"), io::to_json(r));
    std::printf("large-mass N=%d p=%s: slope %s (target %s), R^2 %s\n", prm.N, num(prm.p).c_str(), num(r.slope).c_str(),
                num(r.slope_target).c_str(), num(r.r_squared).c_str());
    const bool s = r.slope_rel_error <= 2e-2, f = r.prefactor_rel_error <= 3e-2, e = r.energy_ratio_rel_error <= 2e-2;
    check_line("slope within 2%", s, num(r.slope_rel_error));
    check_line("prefactor within 3%", f, num(r.prefactor_rel_error));
    check_line("M/(lambda a) within 2%", e, num(r.energy_ratio_rel_error));
    check_line("asymptotic range (R^2 >= 0.999)", r.sufficient_range);
    return gate(s && f && e && r.sufficient_range);
}

int run_critical(const RunConfig& rc) {
    const Params prm = params_or(rc, 3, 6.0);
    const ShootingOptions so = shooting_options(rc);
    const auto lambdas = rc.lambdas.empty() ? std::vector<double>{1e-4, 1e-5, 1e-6, 1e-7, 1e-8} : rc.lambdas;
    std::vector<BranchSolution> sols(lambdas.size());
    parallel_for(lambdas.size(), rc.jobs, [&](std::size_t i) { sols[i] = solve_branch_point(prm, lambdas[i], so); });
    const CriticalRescaleReport r = critical_rescale(prm, std::move(sols));
    io::write_json(out_path(rc, "critical.json"), io::to_json(r));
    for (std::size_t i = 0; i < r.lambdas.size(); ++i)
        std::printf("lambda %s: mu %s, distance to Talenti %s\n", num(r.lambdas[i]).c_str(), num(r.mu[i]).c_str(),
                    num(r.sup_distance[i]).c_str());
    const bool e = r.mu_exponent >= -0.30 && r.mu_exponent <= -0.20;
    check_line("mu exponent in [-0.30, -0.20]", e, num(r.mu_exponent));
    check_line("distance decreasing as lambda decreases", r.distance_decreasing);
    return gate(e && r.distance_decreasing);
}

int run_a0(const RunConfig& rc) {
    const Params prm = params_or(rc, 5, 6.0);
    const BranchOptions opt = branch_options(rc);
    const ZeroMassResult zm = shoot_zero_mass(prm, opt.shooting);
    const BranchTable t = branch_sweep(prm, lambda_grid(rc, 1e-6, 1e-3, 10), opt, zm.a0);
    const A0Estimate e = estimate_a0(prm, t, zm);
    io::write_branch_csv(out_path(rc, "a0_branch.csv"), t);
    io::write_json(out_path(rc, "a0.json"), io::to_json(e));
    std::printf("a0 N=%d p=%s: extrapolated %s, zero-mass %s; M(0+) %s, I(u0) %s\n", prm.N, num(prm.p).c_str(),
                num(e.a0_extrapolated).c_str(), num(e.a0_zero_mass).c_str(), num(e.M_extrapolated).c_str(),
                num(e.I_u0).c_str());
    check_line("a(0+) vs a0 within 1%", e.a0_rel_error <= 1e-2, num(e.a0_rel_error));
    check_line("M(0+) vs I(u0) within 1%", e.M_rel_error <= 1e-2, num(e.M_rel_error));
    return gate(e.ok);
}

int run_verify(const RunConfig& rc) {
    acceptance::Config cfg;
    cfg.jobs = rc.jobs;
    bool all = true;
    for (const auto& r : acceptance::run_all(cfg)) {
        std::printf("%s\n", r.line().c_str());
        std::fflush(stdout);
        all = all && r.passed();
    }
    return gate(all);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normalized ground states of -Lu - L(u^2)u + lambda u = u^(p-1) by radial shooting"};
    app.require_subcommand(1);
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_config("--config", "", "key=value file; flags given on the command line take precedence");

    RunConfig rc;
    app.add_option("--N", rc.N, "dimension");
    app.add_option("--p", rc.p, "exponent");
    app.add_option("--lambda-min", rc.lambda_min, "smallest lambda of a sweep");
    app.add_option("--lambda-max", rc.lambda_max, "largest lambda of a sweep");
    app.add_option("--points", rc.points, "number of lambda values in a sweep");
    app.add_option("--lambdas", rc.lambdas, "explicit lambda values")->delimiter(',');
    app.add_option("--a", rc.a, "mass (minimize)");
    app.add_option("--init", rc.init, "initial profile CSV (minimize)");
    app.add_option("--rel-tol", rc.rel_tol, "integrator relative tolerance");
    app.add_option("--abs-tol", rc.abs_tol, "integrator absolute tolerance, in units of alpha");
    app.add_option("--residual-tol", rc.residual_tol, "Lagrange/Pohozaev residual gate");
    app.add_option("--jobs", rc.jobs, "worker threads for sweeps");
    app.add_option("--out", rc.out, "output directory");

    int (*handler)(const RunConfig&) = nullptr;
    auto sub = [&](CLI::App* parent, const char* name, const char* help, int (*fn)(const RunConfig&)) {
        auto* s = parent->add_subcommand(name, help)->fallthrough();
        s->callback([&handler, fn] { handler = fn; });
        return s;
    };
    sub(&app, "branch", "sweep lambda and tabulate (lambda, a, M)", run_branch);
    sub(&app, "zero-mass", "zero-mass solution u0 and its mass a0", run_zero_mass);
    sub(&app, "free-boundary", "overdetermined free-boundary profile", run_free_boundary);
    sub(&app, "semilinear", "ground state W of -LW + W = W^(p-1)", run_semilinear);
    sub(&app, "minimize", "direct minimization of the reduced energy at mass a", run_minimize);
    auto* limit = app.add_subcommand("limit-check", "asymptotic limit checks")->fallthrough()->require_subcommand(1);
    sub(limit, "small-mass", "rescaled limits as lambda grows", run_small_mass);
    sub(limit, "large-mass", "asymptotics of lambda and M as lambda shrinks", run_large_mass);
    sub(limit, "critical", "Talenti rescaling for N = 3, p = 6", run_critical);
    sub(limit, "a0", "branch endpoint against the zero-mass solution", run_a0);
    sub(&app, "verify", "run the acceptance suite", run_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "%s\n%s", e.what(), app.help().c_str());
        return kValidation;
    }

    try {
        return handler(rc);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kValidation;
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return kNumeric;
    }
}
