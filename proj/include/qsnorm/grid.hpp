#pragma once

// Finite-difference, quadrature and interpolation kernels on non-uniform radial grids.

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "params.hpp"

namespace qsnorm::grid {

/// Nodes 0 = r_0 < r_1 = h0 < ... with steps h0·growth^k capped at h_max, ending exactly at r_max.
inline std::vector<double> graded(double r_max, double h0, double growth = 1.02,
                                  double h_max = kInf) {
    if (!(r_max > 0.0) || !(h0 > 0.0) || !(growth >= 1.0) || !(h_max > 0.0))
        throw ConfigError("graded grid: invalid extent or spacing");
    std::vector<double> r{0.0};
    double h = std::min(h0, h_max);
    while (r.back() + h < r_max) {
        r.push_back(r.back() + h);
        h = std::min(h * growth, h_max);
    }
    // avoid a sliver interval at the end
    if (r.size() > 2 && r_max - r.back() < 0.3 * (r.back() - r[r.size() - 2])) r.pop_back();
    r.push_back(r_max);
    return r;
}

/// Fornberg weights: w[k*n + j] is the weight of node j in the k-th derivative at x0, k <= m.
template <std::size_t n>
std::array<double, 3 * n> fornberg(double x0, const std::array<double, n>& x, int m) {
    std::array<double, 3 * n> c{};
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0] = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        const int mn = std::min(static_cast<int>(i), m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (std::size_t j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[k * n + i] = c1 * (k * c[(k - 1) * n + i - 1] - c5 * c[k * n + i - 1]) / c2;
                c[i] = -c1 * c5 * c[i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[k * n + j] = (c4 * c[k * n + j] - k * c[(k - 1) * n + j]) / c3;
            c[j] = c4 * c[j] / c3;
        }
        c1 = c2;
    }
    return c;
}

/// Five-point derivative of order `order` (1 or 2) at every node. Even reflection about r = 0
/// supplies ghost nodes, so radial profiles get u'(0) = 0 to rounding.
inline std::vector<double> derivative(std::span<const double> r, std::span<const double> u,
                                      int order = 1) {
    const std::size_t n = r.size();
    std::vector<double> d(n, 0.0);
    if (n < 5) throw InputError("derivative: need at least 5 nodes");
    auto node = [&](long k) { return k < 0 ? -r[static_cast<std::size_t>(-k)] : r[static_cast<std::size_t>(k)]; };
    auto val = [&](long k) { return k < 0 ? u[static_cast<std::size_t>(-k)] : u[static_cast<std::size_t>(k)]; };
    for (std::size_t i = 0; i < n; ++i) {
        long j0 = static_cast<long>(i) - 2;
        j0 = std::min(j0, static_cast<long>(n) - 5);
        std::array<double, 5> xs{};
        for (int k = 0; k < 5; ++k) xs[k] = node(j0 + k);
        const auto w = fornberg<5>(r[i], xs, order);
        double s = 0.0;
        for (int k = 0; k < 5; ++k) s += w[order * 5 + k] * val(j0 + k);
        d[i] = s;
    }
    return d;
}

/// ∫ f dr over [r_0, r_{n-1}] by integrating, on each interval, the cubic through the four
/// nearest nodes (two-point Gauss is exact on cubics). Fourth order on smooth non-uniform grids.
inline double integrate(std::span<const double> r, std::span<const double> f) {
    const std::size_t n = r.size();
    if (n < 2) return 0.0;
    if (n < 4) {
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) s += 0.5 * (r[i + 1] - r[i]) * (f[i] + f[i + 1]);
        return s;
    }
    static const double g = 1.0 / std::sqrt(3.0);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t j0 = std::min(i > 0 ? i - 1 : 0, n - 4);
        const double a = r[i], b = r[i + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double s = 0.0;
        for (double x : {mid - half * g, mid + half * g}) {
            double px = 0.0;
            for (std::size_t k = j0; k < j0 + 4; ++k) {
                double l = 1.0;
                for (std::size_t m = j0; m < j0 + 4; ++m)
                    if (m != k) l *= (x - r[m]) / (r[k] - r[m]);
                px += l * f[k];
            }
            s += px;
        }
        total += half * s;
    }
    return total;
}

/// Monotone piecewise-cubic Hermite interpolant (Fritsch–Carlson slopes).
class MonotoneCubic {
public:
    MonotoneCubic(std::vector<double> x, std::vector<double> y, bool zero_left_slope = false)
        : x_(std::move(x)), y_(std::move(y)), m_(x_.size(), 0.0) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n) throw InputError("MonotoneCubic: need >= 2 matching points");
        std::vector<double> delta(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!(x_[i + 1] > x_[i])) throw InputError("MonotoneCubic: abscissae must increase");
            delta[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        }
        m_[0] = delta[0];
        m_[n - 1] = delta[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (delta[i - 1] * delta[i] <= 0.0) {
                m_[i] = 0.0;
            } else {
                const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
                const double w1 = 2.0 * h1 + h0, w2 = h1 + 2.0 * h0;
                m_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
            }
        }
        if (zero_left_slope) m_[0] = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (delta[i] == 0.0) {
                m_[i] = m_[i + 1] = 0.0;
                continue;
            }
            const double a = m_[i] / delta[i], b = m_[i + 1] / delta[i];
            const double s = a * a + b * b;
            if (s > 9.0) {
                const double t = 3.0 / std::sqrt(s);
                m_[i] = t * a * delta[i];
                m_[i + 1] = t * b * delta[i];
            }
        }
    }

    [[nodiscard]] double operator()(double xq) const {
        if (xq <= x_.front()) return y_.front() + m_.front() * (xq - x_.front());
        if (xq >= x_.back()) return y_.back() + m_.back() * (xq - x_.back());
        const auto it = std::upper_bound(x_.begin(), x_.end(), xq);
        const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
        const double h = x_[i + 1] - x_[i];
        const double t = (xq - x_[i]) / h;
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * m_[i] +
               (-2 * t3 + 3 * t2) * y_[i + 1] + (t3 - t2) * h * m_[i + 1];
    }

private:
    std::vector<double> x_, y_, m_;
};

}  // namespace qsnorm::grid
