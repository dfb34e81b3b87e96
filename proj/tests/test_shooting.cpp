#include <cmath>

#include <gtest/gtest.h>

#include <qsnorm/shooting.hpp>
#include <qsnorm/verification.hpp>

using namespace qsnorm;

TEST(Shooting, DualMatchesCollocation) {
    const double ref = oracle::collocation_dual_alpha_1d(9.0, 1.0);
    EXPECT_NEAR(shoot_dual(Params{1, 9.0}, 1.0).alpha, ref, 1e-6);
}

TEST(Shooting, DualMatchesFirstIntegral) {
    // N = 1: the first integral gives u(0) = (λp/2)^{1/(p−2)}
    for (double lambda : {0.1, 1.0, 100.0}) {
        const ShootingResult s = shoot_dual(Params{1, 9.0}, lambda);
        EXPECT_NEAR(s.alpha / dual::phi_inv(std::pow(lambda * 4.5, 1.0 / 7.0)), 1.0, 1e-10);
        EXPECT_EQ(s.trajectory.outcome, Outcome::Decay);
        EXPECT_TRUE(s.tail_rate_ok);
    }
}

TEST(Shooting, WitnessesBracketAlpha) {
    const Params prm{2, 8.0};
    const ShootingResult s = shoot_dual(prm, 1.0);
    const DualRhs g{1.0, prm.p};
    IvpOptions opt;
    opt.r_max = 200.0;
    opt.length_scale = 1.0;
    EXPECT_EQ(integrate_radial_ivp(2, g, s.alpha * (1 + 1e-10), opt).outcome, Outcome::Crossing);
    EXPECT_NE(integrate_radial_ivp(2, g, s.alpha * (1 - 1e-10), opt).outcome, Outcome::Crossing);
}

TEST(Shooting, StableUnderTighterTolerance) {
    const Params prm{3, 7.0};
    ShootingOptions tight;
    tight.rel_tol = 5e-13;
    const double a1 = shoot_dual(prm, 1.0).alpha;
    const double a2 = shoot_dual(prm, 1.0, tight).alpha;
    EXPECT_NEAR(a1 / a2, 1.0, 1e-8);
}

TEST(Shooting, PrimalResidual) {
    for (const Params prm : {Params{1, 9.0}, Params{2, 8.0}, Params{3, 7.0}}) {
        const ShootingResult s = shoot_dual(prm, 1.0);
        const RadialProfile u = dual::v_to_u(s.trajectory.profile);
        EXPECT_LT(primal_residual(u, prm, 1.0), 1e-4) << "N = " << prm.N;
    }
}

TEST(Shooting, SemilinearMatchesSech) {
    const oracle::SechGroundState W{9.0};
    const ShootingResult s = shoot_semilinear(Params{1, 9.0});
    EXPECT_NEAR(s.alpha, W.amplitude(), 1e-9);
    double worst = 0.0;
    for (std::size_t i = 0; i < s.trajectory.profile.size(); ++i)
        worst = std::max(worst, std::abs(s.trajectory.profile.values[i] - W(s.trajectory.profile.nodes[i])));
    EXPECT_LT(worst, 1e-6);
}

TEST(Shooting, SemilinearTwoDimensional) {
    const ShootingResult s = shoot_semilinear(Params{2, 8.0});
    EXPECT_TRUE(s.tail_rate_ok);
    EXPECT_EQ(s.trajectory.outcome, Outcome::Decay);
}

TEST(Shooting, SemilinearGate) {
    EXPECT_THROW(shoot_semilinear(Params{3, 4.0}), ConfigError);
    EXPECT_THROW(shoot_semilinear(Params{3, 7.0}), ConfigError);  // p ≥ 2* = 6
}

TEST(Shooting, FreeBoundaryClosedForm) {
    const Params prm{1, 9.0};
    const FreeBoundarySolution fb = shoot_free_boundary(prm);
    EXPECT_NEAR(fb.alpha, free_boundary_alpha_1d(9.0), 1e-8);
    EXPECT_NEAR(fb.alpha, 1.0867187215, 1e-9);
    EXPECT_LT(fb.residual, 1e-8);
    EXPECT_LT(free_boundary_residual(fb, prm), 1e-6);
    EXPECT_EQ(fb.v_tilde.values.back(), 0.0);
}

TEST(Shooting, FreeBoundaryThreeDimensional) {
    const Params prm{3, 7.0};
    const FreeBoundarySolution fb = shoot_free_boundary(prm);
    EXPECT_GT(fb.alpha, FreeBoundaryRhs::b);
    EXPECT_LT(fb.residual, 1e-8);
    EXPECT_LT(free_boundary_residual(fb, prm), 1e-6);
    EXPECT_TRUE(std::isnan(fb.alpha_closed_form));
}

TEST(Shooting, ZeroMassFiveDimensional) {
    const ZeroMassResult z = shoot_zero_mass(Params{5, 6.0});
    EXPECT_GE(z.decay_exponent, 2.9);
    EXPECT_LE(z.decay_exponent, 3.1);
    EXPECT_TRUE(z.alpha_stable);
    EXPECT_TRUE(std::isfinite(z.a0));
    EXPECT_GT(z.a0, 0.0);
}

TEST(Shooting, ZeroMassFourDimensionalHasInfiniteMass) {
    const ZeroMassResult z = shoot_zero_mass(Params{4, 6.0});
    EXPECT_TRUE(std::isinf(z.a0));
    EXPECT_TRUE(z.decay_ok);
}

TEST(Shooting, ZeroMassThreeDimensionalIsStable) {
    const ZeroMassResult z = shoot_zero_mass(Params{3, 8.0});
    EXPECT_TRUE(z.alpha_stable);
    EXPECT_NEAR(z.decay_exponent, 1.0, 0.05);
}

TEST(Shooting, ZeroMassGate) {
    EXPECT_THROW(shoot_zero_mass(Params{2, 8.0}), ConfigError);
    EXPECT_THROW(shoot_zero_mass(Params{3, 6.0}), ConfigError);  // p must exceed 2*
}

TEST(Shooting, UniquenessHypotheses) {
    for (const Params prm : {Params{5, 5.0}, Params{3, 6.0}, Params{1, 9.0}}) {
        const UniquenessReport u = check_uniqueness_hypotheses(prm);
        EXPECT_EQ(u.f_at_b, 0.0);
        EXPECT_TRUE(u.g_monotone);
        EXPECT_TRUE(u.h1_ok);
        EXPECT_NEAR(u.g_at_largest, u.g_limit, 1e-3);
    }
}
