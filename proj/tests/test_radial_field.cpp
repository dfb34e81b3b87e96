#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <gtest/gtest.h>

#include <qsnorm/radial_field.hpp>

using namespace qsnorm;

namespace {

RadialProfile gaussian(int N, double width) {
    auto r = grid::graded(12.0 * width, 1e-3 * width, 1.005, width / 400.0);
    std::vector<double> v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = std::exp(-std::pow(r[i] / width, 2.0));
    return {N, std::move(r), std::move(v)};
}

// ω_{N−1}∫₀^∞ g(r) r^{N−1} dr by double-exponential quadrature
template <class F>
double radial_quad(int N, F g) {
    boost::math::quadrature::exp_sinh<double> q;
    return sphere_measure(N) * q.integrate([&](double r) { return r > 60.0 ? 0.0 : g(r) * std::pow(r, N - 1); });
}

}  // namespace

TEST(RadialField, GaussianFunctionalsMatchQuadrature) {
    for (const Params prm : {Params{1, 9.0}, Params{2, 8.0}, Params{3, 7.0}, Params{5, 6.0}}) {
        const double w = 1.3;
        const FunctionalValues f = functionals(gaussian(prm.N, w), prm);
        auto u = [&](double r) { return std::exp(-r * r / (w * w)); };
        auto du = [&](double r) { return -2.0 * r / (w * w) * u(r); };
        const double mass = radial_quad(prm.N, [&](double r) { return u(r) * u(r); });
        const double kin = radial_quad(prm.N, [&](double r) { return du(r) * du(r); });
        const double quasi = radial_quad(prm.N, [&](double r) { return u(r) * u(r) * du(r) * du(r); });
        const double lp = radial_quad(prm.N, [&](double r) { return std::pow(u(r), prm.p); });
        EXPECT_NEAR(f.mass / mass, 1.0, 1e-8);
        EXPECT_NEAR(f.kinetic / kin, 1.0, 1e-8);
        EXPECT_NEAR(f.quasi / quasi, 1.0, 1e-8);
        EXPECT_NEAR(f.lp / lp, 1.0, 1e-8);
        EXPECT_NEAR(f.energy, f.kinetic / 2 + f.quasi - f.lp / prm.p, 1e-12 * std::abs(f.lp));
    }
}

TEST(RadialField, QuasiTermIsQuarterKineticOfSquare) {
    const Params prm{3, 7.0};
    const RadialProfile u = gaussian(3, 0.8);
    const RadialProfile u2 = map_values(u, [](double x) { return x * x; });
    EXPECT_NEAR(functionals(u, prm).quasi / (0.25 * functionals(u2, prm).kinetic), 1.0, 1e-8);
}

TEST(RadialField, SphereMeasure) {
    EXPECT_DOUBLE_EQ(sphere_measure(1), 2.0);
    EXPECT_NEAR(sphere_measure(2), 2 * std::numbers::pi, 1e-14);
    EXPECT_NEAR(sphere_measure(3), 4 * std::numbers::pi, 1e-13);
}

TEST(RadialField, GagliardoNirenbergRatioIsScaleFree) {
    const Params prm{2, 8.0};
    const RadialProfile u = gaussian(2, 1.0);
    const double q = gn_ratio(u, prm).ratio;
    // amplitude change
    EXPECT_NEAR(gn_ratio(map_values(u, [](double x) { return 2.5 * x; }), prm).ratio / q, 1.0, 1e-9);
    // mass-preserving dilation by 2: nodes r/2, values 2^{N/2}u
    RadialProfile d = u;
    for (double& r : d.nodes) r /= 2.0;
    for (double& v : d.values) v *= 2.0;
    EXPECT_NEAR(gn_ratio(d, prm).ratio / q, 1.0, 1e-9);
}

TEST(RadialField, LaplacianOfGaussian) {
    const int N = 3;
    const RadialProfile u = gaussian(N, 1.0);
    const auto lap = radial_laplacian(u);
    double worst = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = u.nodes[i];
        worst = std::max(worst, std::abs(lap[i] - (4 * r * r - 2 * N) * std::exp(-r * r)));
    }
    EXPECT_LT(worst, 1e-6);
}

TEST(RadialField, SupportEndKeepsBoundaryZero) {
    const RadialProfile u{1, {0, 1, 2, 3, 4, 5}, {3, 2, 1, 0, 0, 0}};
    EXPECT_EQ(u.support_end(), 4u);
    EXPECT_DOUBLE_EQ(u.at(0.5), 2.5);
    EXPECT_DOUBLE_EQ(u.at(7.0), 0.0);
}

TEST(RadialField, RejectsMalformedInput) {
    const Params prm{1, 9.0};
    EXPECT_THROW(functionals(RadialProfile{1, {0.1, 1, 2, 3, 4}, {1, 1, 1, 1, 1}}, prm), InputError);
    EXPECT_THROW(functionals(RadialProfile{1, {0, 1, 2}, {1, 1}}, prm), InputError);
    EXPECT_THROW(functionals(RadialProfile{1, {0, 2, 1, 3, 4}, {1, 1, 1, 1, 1}}, prm), InputError);
    EXPECT_THROW(functionals(RadialProfile{1, {0, 1, 2, 3, 4}, {1, NAN, 1, 1, 1}}, prm), InputError);
    EXPECT_THROW(functionals(gaussian(2, 1.0), prm), InputError);
    EXPECT_THROW(functionals(gaussian(1, 1.0), Params{1, 7.0}), ConfigError);
    EXPECT_THROW(Params::checked(3, 12.0), ConfigError);
    EXPECT_NO_THROW(Params::checked(3, 11.9));
}
