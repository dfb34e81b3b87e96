#pragma once

// CSV and JSON persistence for profiles, branch tables and reports.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "curves.hpp"
#include "direct_minimizer.hpp"

namespace qsnorm::io {

using nlohmann::json;

/// Shortest round-trip decimal form of a double.
inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// JSON has no infinities: ±∞ and NaN are written as the strings "inf", "-inf", "nan".
inline json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

inline void ensure_parent(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
}

inline std::ofstream open_out(const std::filesystem::path& path) {
    ensure_parent(path);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

/// Profile CSV: header `r,value`, one node per line.
inline void write_profile_csv(const std::filesystem::path& path, const RadialProfile& u) {
    auto out = open_out(path);
    out << "r,value\n";
    for (std::size_t i = 0; i < u.size(); ++i) out << fmt(u.nodes[i]) << ',' << fmt(u.values[i]) << '\n';
}

inline RadialProfile read_profile_csv(const std::filesystem::path& path, int N) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open profile " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("r,value", 0) != 0)
        throw InputError("profile CSV must start with the header r,value");
    RadialProfile u;
    u.N = N;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw InputError("malformed profile line: " + line);
        try {
            u.nodes.push_back(std::stod(line.substr(0, comma)));
            u.values.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw InputError("malformed profile line: " + line);
        }
    }
    u.validate();
    return u;
}

inline constexpr const char* kBranchHeader =
    "lambda,a,M,kinetic,quasi,lp,sup_norm,lagrange_residual,pohozaev_residual";

inline void write_branch_csv(const std::filesystem::path& path, const BranchTable& t) {
    auto out = open_out(path);
    out << kBranchHeader << '\n';
    for (const auto& b : t.points)
        out << fmt(b.lambda) << ',' << fmt(b.a) << ',' << fmt(b.M) << ',' << fmt(b.kinetic) << ','
            << fmt(b.quasi) << ',' << fmt(b.lp) << ',' << fmt(b.sup_norm) << ',' << fmt(b.lagrange_residual)
            << ',' << fmt(b.pohozaev_residual) << '\n';
}

inline void write_json(const std::filesystem::path& path, const json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

inline json to_json(const Params& prm) { return {{"N", prm.N}, {"p", prm.p}}; }

inline json trajectory_sidecar(const Trajectory& tr, double lambda, const json& residuals) {
    return {{"alpha", number(tr.alpha)},
            {"lambda", number(lambda)},
            {"outcome", to_string(tr.outcome)},
            {"event_r", number(tr.event_r)},
            {"derivative_at_end", number(tr.derivative_at_end)},
            {"residuals", residuals}};
}

inline json to_json(const BranchTable& t) {
    json failures = json::array();
    for (const auto& f : t.failures) failures.push_back({{"lambda", f.lambda}, {"error", f.message}});
    return {{"params", to_json(t.params)},
            {"points", t.points.size()},
            {"failures", failures},
            {"a_star", number(t.a_star)},
            {"tau", {{"tau1", number(t.tau.tau1)}, {"tau2", number(t.tau.tau2)}, {"tau3", number(t.tau.tau3)}}},
            {"checks",
             {{"M_decreasing_in_a", t.monotone},
              {"residuals_within_gate", t.residuals_ok},
              {"lambda_decreasing_in_a", t.lambda_decreasing_in_a}}},
            {"worst_monotone_excess", number(t.worst_monotone_excess)},
            {"lambda_a_tail_ratio", number(t.lambda_a_tail_ratio)},
            {"delta_bound", {{"min", number(t.delta_bound_min)}, {"max", number(t.delta_bound_max)}}}};
}

inline json to_json(const ZeroMassResult& z) {
    return {{"alpha", number(z.alpha)},
            {"alpha_doubled_radius", number(z.alpha_refined)},
            {"r_max", number(z.r_max)},
            {"a0", number(z.a0)},
            {"tail_coefficient", number(z.tail_coefficient)},
            {"decay_exponent", number(z.decay_exponent)},
            {"checks", {{"decay_exponent_within_5pct", z.decay_ok}, {"alpha_stable", z.alpha_stable}}}};
}

inline json to_json(const FreeBoundarySolution& fb) {
    return {{"alpha", number(fb.alpha)},
            {"R", number(fb.R)},
            {"residual", number(fb.residual)},
            {"alpha_closed_form", number(fb.alpha_closed_form)}};
}

inline json to_json(const UniquenessReport& u) {
    return {{"b", number(u.b)},
            {"f_at_b", number(u.f_at_b)},
            {"g_limit", number(u.g_limit)},
            {"g_at_largest_sample", number(u.g_at_largest)},
            {"samples", u.g_samples.size()},
            {"checks", {{"g_monotone", u.g_monotone}, {"h1", u.h1_ok}, {"h2", u.h2_ok}, {"hprime4", u.hprime4_ok}}}};
}

inline json to_json(const A0Estimate& e) {
    return {{"a0_extrapolated", number(e.a0_extrapolated)},
            {"a0_zero_mass", number(e.a0_zero_mass)},
            {"a0_rel_error", number(e.a0_rel_error)},
            {"M_extrapolated", number(e.M_extrapolated)},
            {"I_u0", number(e.I_u0)},
            {"M_rel_error", number(e.M_rel_error)},
            {"checks", {{"within_tolerance", e.ok}, {"branch_not_truncated", !e.branch_truncated}}}};
}

inline json to_json(const SmallMassReport& r) {
    return {{"lambda", number(r.lambda)},
            {"sup_distance", number(r.sup_distance)},
            {"center_ratio", number(r.center_ratio)},
            {"center_ratio_target", number(r.center_ratio_target)},
            {"center_ratio_rel_error", number(r.center_ratio_rel_error)},
            {"v_sup_over_lambda", number(r.v_sup_over_lambda)},
            {"v_sup_bound", number(r.v_sup_bound)},
            {"u_sup_over_lambda", number(r.u_sup_over_lambda)},
            {"edge_slope", number(r.edge_slope)}};
}

inline json to_json(const LargeMassReport& r) {
    return {{"slope", number(r.slope)},
            {"slope_target", number(r.slope_target)},
            {"slope_rel_error", number(r.slope_rel_error)},
            {"r_squared", number(r.r_squared)},
            {"prefactor", number(r.prefactor)},
            {"prefactor_target", number(r.prefactor_target)},
            {"prefactor_rel_error", number(r.prefactor_rel_error)},
            {"energy_ratio", number(r.energy_ratio)},
            {"energy_ratio_target", number(r.energy_ratio_target)},
            {"energy_ratio_rel_error", number(r.energy_ratio_rel_error)},
            {"checks", {{"sufficient_range", r.sufficient_range}}}};
}

inline json to_json(const CriticalRescaleReport& r) {
    json pts = json::array();
    for (std::size_t i = 0; i < r.lambdas.size(); ++i)
        pts.push_back({{"lambda", number(r.lambdas[i])}, {"mu", number(r.mu[i])}, {"sup_distance", number(r.sup_distance[i])}});
    return {{"points", pts},
            {"mu_exponent", number(r.mu_exponent)},
            {"checks", {{"distance_decreasing", r.distance_decreasing}}}};
}

inline json to_json(const MinimizeResult& m, double a) {
    return {{"a", number(a)},
            {"M_hat", number(m.M_hat)},
            {"converged", m.converged},
            {"iterations", m.iterations},
            {"mass", number(m.mass)}};
}

}  // namespace qsnorm::io
