#include <cmath>

#include <gtest/gtest.h>

#include <qsnorm/curves.hpp>
#include <qsnorm/profile_io.hpp>

using namespace qsnorm;

TEST(Curves, BranchPointResidualsAndManifoldEnergy) {
    const Params prm{1, 9.0};
    const BranchSolution s = solve_branch_point(prm, 1.0);
    EXPECT_TRUE(s.point.residuals_ok(1e-4));
    EXPECT_GT(s.point.M, 0.0);
    const double sigma = prm.sigma();
    EXPECT_NEAR(manifold_energy(s.values, prm), s.values.energy - s.values.pohozaev / sigma,
                1e-12 * std::abs(s.values.energy));
    EXPECT_NEAR(manifold_energy(s.values, prm) / s.point.M, 1.0, 1e-6);
}

TEST(Curves, SweepIsMonotone) {
    const Params prm{2, 8.0};
    const BranchTable t = branch_sweep(prm, geometric_grid(1e-2, 1e2, 12));
    EXPECT_EQ(t.points.size(), 12u);
    EXPECT_TRUE(t.monotone);
    EXPECT_TRUE(t.residuals_ok);
    EXPECT_TRUE(t.lambda_decreasing_in_a);
    EXPECT_TRUE(std::isinf(t.a_star));
}

TEST(Curves, SweepIsIndependentOfWorkerCount) {
    const Params prm{1, 9.0};
    BranchOptions one, three;
    three.jobs = 3;
    const auto grid = geometric_grid(1e-1, 1e2, 9);
    const BranchTable a = branch_sweep(prm, grid, one), b = branch_sweep(prm, grid, three);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        EXPECT_EQ(a.points[i].a, b.points[i].a);
        EXPECT_EQ(a.points[i].M, b.points[i].M);
    }
}

TEST(Curves, SweepRejectsShortGrids) {
    const Params prm{1, 9.0};
    EXPECT_THROW(branch_sweep(prm, geometric_grid(1.0, 1e3, 5)), ConfigError);
    EXPECT_THROW(branch_sweep(prm, geometric_grid(1.0, 10.0, 10)), ConfigError);
    EXPECT_THROW(branch_sweep(Params{1, 7.0}, geometric_grid(1e-2, 1e3, 10)), ConfigError);
}

TEST(Curves, ExtrapolationIsExactForQuadratics) {
    const std::array<double, 3> x{0.1, 0.2, 0.4};
    std::array<double, 3> y{};
    for (int i = 0; i < 3; ++i) y[i] = 3.0 - 2.0 * x[i] + 5.0 * x[i] * x[i];
    EXPECT_NEAR(extrapolate_to_zero(x, y), 3.0, 1e-12);
}

TEST(Curves, A0EstimateNeedsFiniteMass) {
    const Params prm{4, 6.0};
    BranchTable t;
    t.params = prm;
    EXPECT_THROW(estimate_a0(prm, t, ZeroMassResult{}), ConfigError);
}

TEST(Curves, LargeMassGate) {
    EXPECT_THROW(require_large_mass_regime(Params{3, 6.0}), ConfigError);
    EXPECT_THROW(require_large_mass_regime(Params{5, 5.5}), ConfigError);
    EXPECT_NO_THROW(require_large_mass_regime(Params{2, 8.0}));
}

TEST(Curves, CriticalRescaleApproachesTalenti) {
    const Params prm{3, 6.0};
    std::vector<BranchSolution> sols;
    for (double lambda : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) sols.push_back(solve_branch_point(prm, lambda));
    const CriticalRescaleReport r = critical_rescale(prm, sols);
    EXPECT_GE(r.mu_exponent, -0.30);
    EXPECT_LE(r.mu_exponent, -0.20);
    EXPECT_TRUE(r.distance_decreasing);
    EXPECT_NEAR(talenti(0.0), 1.31607401295, 1e-10);
    EXPECT_THROW(critical_rescale(Params{3, 7.0}, sols), ConfigError);
}

TEST(Curves, SmallMassCenterRatioMatchesFirstIntegral) {
    // N = 1: u(0) = (λp/2)^{1/(p−2)} exactly, so ū(0)/√ṽ(0) = φ(α)/√α with α = φ⁻¹(u(0))·λ^{−2/(p−2)}
    const Params prm{1, 9.0};
    const FreeBoundarySolution fb = shoot_free_boundary(prm);
    const double lambda = 1e3;
    const SmallMassReport r = small_mass_limit_check(prm, solve_branch_point(prm, lambda), fb);
    const double u0 = std::pow(lambda * 4.5, 1.0 / 7.0);
    const double v0 = dual::phi_inv(u0);
    const double expected = (u0 * std::pow(lambda, -1.0 / 7.0)) / std::sqrt(v0 * std::pow(lambda, -2.0 / 7.0));
    EXPECT_NEAR(r.center_ratio / expected, 1.0, 1e-9);
    EXPECT_GE(r.v_sup_over_lambda, r.v_sup_bound);
}
