#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qsnorm {

/// Thrown when a configuration (N, p, lambda, ...) violates a parameter gate.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an input profile or value is malformed (non-finite, negative, unsorted).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical procedure fails to converge or to bracket.
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Dimension and exponent of  -Δu - Δ(u²)u + λu = u^{p-1}  on R^N, with the derived exponents.
struct Params {
    int N = 1;
    double p = 9.0;

    /// Exponent of the dilation t★u acting on ‖u‖_p^p.
    [[nodiscard]] double sigma() const { return (p - 2.0) * N / 2.0; }
    /// Sobolev exponent 2N/(N-2); +∞ for N = 1, 2.
    [[nodiscard]] double two_star() const { return N >= 3 ? 2.0 * N / (N - 2.0) : kInf; }
    [[nodiscard]] double mass_critical() const { return 4.0 + 4.0 / N; }

    /// True when 4 + 4/N < p < 2·2*.
    [[nodiscard]] bool in_supercritical_range() const {
        return N >= 1 && std::isfinite(p) && p > mass_critical() && p < 2.0 * two_star();
    }

    /// Throws ConfigError unless the standing assumption 4 + 4/N < p < 2·2* holds.
    void validate() const {
        if (N < 1) throw ConfigError("dimension N must be >= 1");
        if (!in_supercritical_range()) {
            std::ostringstream os;
            os << "p = " << p << " outside (4+4/N, 2*2^*) = (" << mass_critical() << ", "
               << 2.0 * two_star() << ") for N = " << N;
            throw ConfigError(os.str());
        }
    }

    static Params checked(int N, double p) {
        Params prm{N, p};
        prm.validate();
        return prm;
    }
};

/// Surface measure of the unit sphere S^{N-1}: 2π^{N/2}/Γ(N/2); equals 2 for N = 1.
inline double sphere_measure(int N) {
    return 2.0 * std::pow(std::numbers::pi, N / 2.0) / std::tgamma(N / 2.0);
}

}  // namespace qsnorm
