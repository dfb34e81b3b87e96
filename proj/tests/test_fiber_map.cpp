#include <cmath>

#include <boost/math/tools/roots.hpp>
#include <gtest/gtest.h>

#include <qsnorm/fiber_map.hpp>

using namespace qsnorm;

namespace {

RadialProfile gaussian(int N, double amp) {
    auto r = grid::graded(10.0, 1e-3, 1.005, 1.0 / 300.0);
    std::vector<double> v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = amp * std::exp(-r[i] * r[i]);
    return {N, std::move(r), std::move(v)};
}

}  // namespace

TEST(FiberMap, ExampleRoot) {
    // A = B = C = 1, N = 2, σ = 5: h'(t)/t = 2 + 4t² − 5t³
    const FiberPolynomial f{1.0, 1.0, 1.0, 5.0, 4};
    auto tol = [](double a, double b) { return std::abs(b - a) < 1e-15; };
    const auto [lo, hi] = boost::math::tools::bisect([](double t) { return 5 * t * t * t - 4 * t * t - 2; },
                                                     1.0, 2.0, tol);
    EXPECT_NEAR(f.critical_point(), 0.5 * (lo + hi), 1e-12);
    EXPECT_NEAR(f.critical_point(), 1.1192850506, 1e-9);
    EXPECT_LT(f.d2h(f.critical_point()), 0.0);
}

TEST(FiberMap, ExtremeCoefficientsStayFinite) {
    // t_u near 1e100: h overflows, the sign of h' must not
    const FiberPolynomial f{0.393, 642.0, 0.00297, 7.0510, 7};
    const double t = f.critical_point();
    EXPECT_TRUE(std::isfinite(t));
    EXPECT_GT(f.reduced_slope(t * 0.99), 0.0);
    EXPECT_LT(f.reduced_slope(t * 1.01), 0.0);
    EXPECT_LT(f.d2h(t), 0.0);
}

TEST(FiberMap, TrichotomyOnProfiles) {
    const Params prm{1, 9.0};
    // small amplitude: P > 0, large: P < 0
    for (double amp : {0.3, 1.0, 3.0}) {
        const RadialProfile u = gaussian(1, amp);
        const FunctionalValues f = functionals(u, prm);
        const Projection proj = project_pohozaev(u, prm);
        if (f.pohozaev > 0.0) {
            EXPECT_GT(proj.t_u, 1.0);
        } else {
            EXPECT_LT(proj.t_u, 1.0);
        }
        const FunctionalValues g = functionals(proj.projected, prm);
        EXPECT_LT(std::abs(g.pohozaev), 1e-9 * (g.kinetic + 3 * g.quasi));
        EXPECT_NEAR(g.mass / f.mass, 1.0, 1e-12);
        EXPECT_NEAR(g.energy / proj.max_energy, 1.0, 1e-10);
    }
}

TEST(FiberMap, MaxEnergyBeatsGridSearch) {
    const Params prm{2, 8.0};
    const RadialProfile u = gaussian(2, 1.5);
    const double m = reduced_energy(u, prm);
    double best = -1e300;
    for (int k = 0; k <= 20000; ++k) {
        const double t = std::pow(10.0, -2.0 + 4.0 * k / 20000.0);
        best = std::max(best, functionals(fiber_scale(u, t), prm).energy);
    }
    EXPECT_GE(m, best - 1e-10 * std::abs(m));
    EXPECT_NEAR(best / m, 1.0, 1e-6);
}

TEST(FiberMap, OnSetMeansIdentity) {
    const Params prm{1, 9.0};
    const Projection p0 = project_pohozaev(gaussian(1, 2.0), prm);
    const Projection p1 = project_pohozaev(p0.projected, prm, 1e-13, 1e-9);
    EXPECT_EQ(p1.side, PohozaevSide::On);
    EXPECT_EQ(p1.t_u, 1.0);
}

TEST(FiberMap, ScaleIsExact) {
    const RadialProfile u = gaussian(3, 1.0);
    const RadialProfile s = fiber_scale(u, 2.0);
    EXPECT_DOUBLE_EQ(s.nodes[10], u.nodes[10] / 2.0);
    EXPECT_DOUBLE_EQ(s.values[10], u.values[10] * std::pow(2.0, 1.5));
    EXPECT_THROW(fiber_scale(u, 0.0), InputError);
}

TEST(FiberMap, RejectsInvalidPolynomials) {
    EXPECT_THROW((void)FiberPolynomial({0.0, 1.0, 1.0, 5.0, 4}).critical_point(), InputError);
    EXPECT_THROW((void)FiberPolynomial({1.0, 1.0, 1.0, 4.0, 4}).critical_point(), ConfigError);
    const Params prm{1, 9.0};
    EXPECT_THROW(project_pohozaev(gaussian(1, 0.0), prm), InputError);
}
