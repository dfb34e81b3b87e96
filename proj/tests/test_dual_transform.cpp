#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <qsnorm/dual_transform.hpp>

using namespace qsnorm;

TEST(DualTransform, RoundTripAndOddness) {
    for (double s : {1e-9, 1e-6, 1e-5, 1e-3, 0.5, 1.0, 7.0, 1e3, 1e7, 1e12}) {
        const auto f = dual::phi(s);
        EXPECT_NEAR(dual::phi_inv(f.phi), s, 1e-12 * std::max(1.0, s));
        EXPECT_DOUBLE_EQ(dual::phi(-s).phi, -f.phi);
        EXPECT_DOUBLE_EQ(dual::phi(-s).phi_prime, f.phi_prime);
    }
    EXPECT_EQ(dual::phi(0.0).phi, 0.0);
}

TEST(DualTransform, InverseClosedForm) {
    // v = ∫₀^u √(1+2t²) dt, checked by Simpson
    const double u = 1.7;
    const int n = 2000;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = u * i / n;
        const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
        sum += w * std::sqrt(1 + 2 * t * t);
    }
    EXPECT_NEAR(dual::phi_inv(u), sum * u / (3.0 * n), 1e-12);
}

TEST(DualTransform, Bounds) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-8.0, 8.0);
    for (int k = 0; k < 1000; ++k) {
        const double s = std::pow(10.0, U(rng));
        const auto f = dual::phi(s);
        EXPECT_GT(f.phi_prime, 0.0);
        EXPECT_LE(f.phi_prime, 1.0);
        EXPECT_LE(f.phi, std::min(s, std::pow(2.0, 0.25) * std::sqrt(s)) * (1 + 1e-15));
        const double mid = f.phi * f.phi_prime * s;
        EXPECT_GE(mid, 0.5 * f.phi * f.phi * (1 - 1e-14));
        EXPECT_LE(mid, f.phi * f.phi * (1 + 1e-14));
        EXPECT_LE(f.phi * f.phi_prime, 1.0 / std::sqrt(2.0));
    }
}

TEST(DualTransform, Asymptotics) {
    const auto f = dual::phi(1e10);
    EXPECT_NEAR(f.phi / std::sqrt(1e10), std::pow(2.0, 0.25), 1e-4);
    EXPECT_NEAR(f.phi_prime * std::sqrt(1e10), std::pow(2.0, -0.75), 1e-4);
    const auto g = dual::phi(1e-4);
    EXPECT_NEAR(g.phi, 1e-4, 1e-12);
}

TEST(DualTransform, ProfileMaps) {
    const RadialProfile u{1, {0, 1, 2, 3}, {2, 1, 0.5, 0}};
    const RadialProfile v = dual::u_to_v(u);
    EXPECT_DOUBLE_EQ(v.values[1], dual::phi_inv(1.0));
    EXPECT_THROW(dual::u_to_v(RadialProfile{1, {0, 1, 2}, {1, -1, 0}}), InputError);
    EXPECT_THROW(dual::phi(INFINITY), InputError);
}
