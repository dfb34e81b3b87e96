#pragma once

// Change of unknown u = φ(v) with φ' = 1/√(1+2φ²), φ(0) = 0, which turns
//   −Δu − Δ(u²)u + λu = u^{p−1}   into   −Δv + λφ(v)φ'(v) = φ(v)^{p−1}φ'(v).
// φ is odd. Its inverse has the closed form  v = ∫₀^u √(1+2t²) dt.

#include <cmath>
#include <numbers>

#include "radial_field.hpp"

namespace qsnorm::dual {

struct PhiValue {
    double s = 0.0;          ///< dual variable v
    double phi = 0.0;        ///< φ(s)
    double phi_prime = 1.0;  ///< φ'(s) = 1/√(1+2φ²)
};

namespace detail {
inline double phi_inv_nonneg(double u) {
    if (u > 1e8) {
        // ½u√(1+2u²) = u²/√2 + 1/(4√2) + O(u⁻²); asinh(√2u) = ln(2√2u) + O(u⁻²)
        return u * u / std::numbers::sqrt2 + 0.25 / std::numbers::sqrt2 +
               (std::numbers::sqrt2 / 4.0) * std::log(2.0 * std::numbers::sqrt2 * u);
    }
    return 0.5 * u * std::sqrt(1.0 + 2.0 * u * u) +
           (std::numbers::sqrt2 / 4.0) * std::asinh(std::numbers::sqrt2 * u);
}
}  // namespace detail

/// φ⁻¹(u) = ½u√(1+2u²) + (√2/4) ln(√2u + √(1+2u²)), odd in u.
inline double phi_inv(double u) {
    return u < 0.0 ? -detail::phi_inv_nonneg(-u) : detail::phi_inv_nonneg(u);
}

/// φ(s) and φ'(s), by Newton on the convex map u ↦ φ⁻¹(u). The start min{s, 2^{1/4}√s} bounds φ
/// from above, so the iterates decrease monotonically to the root.
inline PhiValue phi(double s) {
    if (!std::isfinite(s)) throw InputError("phi: non-finite argument");
    if (s < 0.0) {
        PhiValue r = phi(-s);
        r.s = s;
        r.phi = -r.phi;
        return r;
    }
    PhiValue out;
    out.s = s;
    if (s == 0.0) return out;
    if (s < 1e-5) {
        // φ(s) = s − s³/3 + s⁵/... ; the cubic truncation is exact to rounding here
        out.phi = s - s * s * s / 3.0;
        out.phi_prime = 1.0 / std::sqrt(1.0 + 2.0 * out.phi * out.phi);
        return out;
    }
    double u = std::min(s, std::pow(2.0, 0.25) * std::sqrt(s));
    for (int it = 0; it < 100; ++it) {
        const double g = detail::phi_inv_nonneg(u) - s;
        const double step = g / std::sqrt(1.0 + 2.0 * u * u);
        u -= step;
        if (std::abs(step) <= 1e-15 * u) {
            out.phi = u;
            out.phi_prime = 1.0 / std::sqrt(1.0 + 2.0 * u * u);
            return out;
        }
    }
    throw NumericFailure("phi: Newton inversion did not converge");
}

inline double phi_value(double s) { return phi(s).phi; }

/// v = φ⁻¹(u) nodewise. Ground-state profiles are nonnegative; negative input is rejected.
inline RadialProfile u_to_v(const RadialProfile& u) {
    u.validate();
    for (double x : u.values)
        if (x < 0.0) throw InputError("u_to_v: negative profile value");
    return map_values(u, [](double x) { return phi_inv(x); });
}

/// u = φ(v) nodewise.
inline RadialProfile v_to_u(const RadialProfile& v) {
    v.validate();
    for (double x : v.values)
        if (x < 0.0) throw InputError("v_to_u: negative profile value");
    return map_values(v, [](double x) { return phi_value(x); });
}

}  // namespace qsnorm::dual
