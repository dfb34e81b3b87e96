#pragma once

// Radial profiles on R^N and the scalar functionals of the quasilinear energy
//
//   I(u) = ½‖∇u‖₂² + V(u) − ‖u‖_p^p / p,    V(u) = ∫ u²|∇u|²,
//
// evaluated with the measure ω_{N−1} r^{N−1} dr.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "grid.hpp"
#include "params.hpp"

namespace qsnorm {

/// A radial function sampled on strictly increasing radii starting at 0.
struct RadialProfile {
    int N = 1;
    std::vector<double> nodes;
    std::vector<double> values;

    RadialProfile() = default;
    RadialProfile(int dim, std::vector<double> r, std::vector<double> v)
        : N(dim), nodes(std::move(r)), values(std::move(v)) {}

    [[nodiscard]] std::size_t size() const { return nodes.size(); }

    /// Throws InputError on a malformed profile.
    void validate() const {
        if (N < 1) throw InputError("profile dimension must be >= 1");
        if (nodes.size() < 3) throw InputError("profile needs at least 3 nodes");
        if (nodes.size() != values.size()) throw InputError("profile nodes/values length mismatch");
        if (nodes.front() != 0.0) throw InputError("profile must start at r = 0");
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            if (!(nodes[i + 1] > nodes[i])) throw InputError("profile radii must strictly increase");
        for (double v : values)
            if (!std::isfinite(v)) throw InputError("profile contains non-finite values");
    }

    [[nodiscard]] bool is_decreasing() const {
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            if (values[i + 1] > values[i]) return false;
        return true;
    }

    /// Index one past the last node of the support: trailing exact zeros are dropped, but the
    /// first zero after the last nonzero node is kept as the support boundary.
    [[nodiscard]] std::size_t support_end() const {
        std::size_t k = values.size();
        while (k > 0 && values[k - 1] == 0.0) --k;
        if (k == 0) return 0;
        return std::min(k + 1, values.size());
    }

    [[nodiscard]] double sup_norm() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }

    /// Linear interpolation between nodes; zero beyond the last node.
    [[nodiscard]] double at(double r) const {
        if (r <= 0.0) return values.front();
        if (r >= nodes.back()) return r == nodes.back() ? values.back() : 0.0;
        const auto it = std::upper_bound(nodes.begin(), nodes.end(), r);
        const std::size_t i = static_cast<std::size_t>(it - nodes.begin()) - 1;
        const double t = (r - nodes[i]) / (nodes[i + 1] - nodes[i]);
        return (1.0 - t) * values[i] + t * values[i + 1];
    }
};

/// All scalar functionals of a profile. The last three fields are linear combinations of the
/// first four.
struct FunctionalValues {
    double mass = 0.0;       ///< ‖u‖₂²
    double kinetic = 0.0;    ///< ‖∇u‖₂²
    double quasi = 0.0;      ///< V(u)
    double lp = 0.0;         ///< ‖u‖_p^p
    double energy = 0.0;     ///< I(u)
    double pohozaev = 0.0;   ///< P(u) = d/dt I(t★u) at t = 1
    double pohozaev2 = 0.0;  ///< d²/dt² I(t★u) at t = 1
    double sup_norm = 0.0;

    static FunctionalValues from_integrals(double mass, double kinetic, double quasi, double lp,
                                           double sup, const Params& prm) {
        const double N = prm.N, p = prm.p;
        FunctionalValues f;
        f.mass = mass;
        f.kinetic = kinetic;
        f.quasi = quasi;
        f.lp = lp;
        f.sup_norm = sup;
        f.energy = kinetic / 2.0 + quasi - lp / p;
        f.pohozaev = kinetic + (N + 2.0) * quasi - ((p - 2.0) * N / (2.0 * p)) * lp;
        f.pohozaev2 = kinetic + (N + 2.0) * (N + 1.0) * quasi -
                      ((p - 2.0) * N * ((p - 2.0) * N - 2.0) / (4.0 * p)) * lp;
        return f;
    }
};

/// ω_{N−1}∫ g(r) r^{N−1} dr on the first `count` nodes.
inline double radial_integral(std::span<const double> r, std::span<const double> g, int N) {
    std::vector<double> w(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = g[i] * std::pow(r[i], N - 1);
    return sphere_measure(N) * grid::integrate(r, w);
}

/// Quadrature evaluation of mass, kinetic, V, L^p and the derived energies.
inline FunctionalValues functionals(const RadialProfile& u, const Params& prm) {
    prm.validate();
    u.validate();
    if (u.N != prm.N) throw InputError("profile dimension differs from Params::N");
    const std::size_t n = u.support_end();
    if (n == 0) return FunctionalValues::from_integrals(0, 0, 0, 0, 0, prm);
    if (n < 5) throw InputError("profile support has fewer than 5 nodes");

    const std::span<const double> r(u.nodes.data(), n), v(u.values.data(), n);
    const auto du = grid::derivative(r, v);
    std::vector<double> g_mass(n), g_kin(n), g_quasi(n), g_lp(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = v[i], d2 = du[i] * du[i];
        g_mass[i] = a * a;
        g_kin[i] = d2;
        g_quasi[i] = a * a * d2;
        g_lp[i] = std::pow(std::abs(a), prm.p);
    }
    const int N = prm.N;
    return FunctionalValues::from_integrals(radial_integral(r, g_mass, N), radial_integral(r, g_kin, N),
                                            radial_integral(r, g_quasi, N), radial_integral(r, g_lp, N),
                                            u.sup_norm(), prm);
}

/// Empirical Gagliardo–Nirenberg quotient ‖u‖_p^p / (a^θ₁ V(u)^θ₂) and its exponents.
struct GNReport {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double ratio = 0.0;
    double delta_exponent = 0.0;  ///< exponent of a in the lower bound of V on the constraint
};

inline GNReport gn_exponents(const Params& prm) {
    const double N = prm.N, p = prm.p;
    GNReport g;
    g.theta1 = (4.0 * N - p * (N - 2.0)) / (2.0 * (N + 2.0));
    g.theta2 = N * (p - 2.0) / (2.0 * (N + 2.0));
    g.delta_exponent = ((N - 2.0) * p - 4.0 * N) / ((p - 4.0) * N - 4.0);
    return g;
}

inline GNReport gn_ratio(const FunctionalValues& f, const Params& prm) {
    GNReport g = gn_exponents(prm);
    if (!(f.quasi > 0.0)) {
        if (f.lp > 0.0) throw NumericFailure("gn_ratio: V(u) = 0 with ‖u‖_p > 0 (inconsistent functionals)");
        throw InputError("gn_ratio: requires a nonzero profile");
    }
    g.ratio = f.lp / (std::pow(f.mass, g.theta1) * std::pow(f.quasi, g.theta2));
    return g;
}

inline GNReport gn_ratio(const RadialProfile& u, const Params& prm) {
    return gn_ratio(functionals(u, prm), prm);
}

/// w'' + ((N−1)/r)w' at the first `count` nodes of a profile (count = 0 means all). At r = 0 the
/// limit N·w''(0) is used.
inline std::vector<double> radial_laplacian(const RadialProfile& w, std::size_t count = 0) {
    const std::size_t n = count == 0 ? w.size() : count;
    const std::span<const double> r(w.nodes.data(), n), v(w.values.data(), n);
    const auto d1 = grid::derivative(r, v, 1);
    const auto d2 = grid::derivative(r, v, 2);
    std::vector<double> lap(n);
    for (std::size_t i = 0; i < n; ++i)
        lap[i] = r[i] == 0.0 ? w.N * d2[i] : d2[i] + (w.N - 1.0) / r[i] * d1[i];
    return lap;
}

/// Pointwise map of profile values.
template <class F>
RadialProfile map_values(const RadialProfile& u, F&& f) {
    RadialProfile out = u;
    for (double& v : out.values) v = f(v);
    return out;
}

}  // namespace qsnorm
