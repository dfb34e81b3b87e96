#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <qsnorm/ode.hpp>

using namespace qsnorm;

TEST(RadialIvp, CosineCrossesAtQuarterPeriod) {
    // N = 1, g(v) = v: v = α cos r
    IvpOptions opt;
    opt.r_max = 10.0;
    opt.length_scale = 1.0;
    const Trajectory tr = integrate_radial_ivp(1, [](double v) { return v; }, 2.0, opt);
    EXPECT_EQ(tr.outcome, Outcome::Crossing);
    EXPECT_NEAR(tr.event_r, std::numbers::pi / 2, 1e-10);
    EXPECT_NEAR(tr.derivative_at_end, -2.0, 1e-9);
}

TEST(RadialIvp, BesselJ0CrossesAtFirstZero) {
    // N = 2, g(v) = v: v = α J₀(r), first zero 2.404825557695773
    IvpOptions opt;
    opt.r_max = 10.0;
    opt.length_scale = 1.0;
    const Trajectory tr = integrate_radial_ivp(2, [](double v) { return v; }, 1.0, opt);
    EXPECT_EQ(tr.outcome, Outcome::Crossing);
    EXPECT_NEAR(tr.event_r, 2.404825557695773, 1e-9);
}

TEST(RadialIvp, ConstantSolutionIsTruncated) {
    IvpOptions opt;
    opt.r_max = 5.0;
    opt.length_scale = 1.0;
    const Trajectory tr = integrate_radial_ivp(3, [](double) { return 0.0; }, 1.0, opt);
    EXPECT_EQ(tr.outcome, Outcome::Truncated);
    EXPECT_NEAR(tr.value_at_end, 1.0, 1e-14);
}

TEST(RadialIvp, TurningIsDetected) {
    // g(v) = v − 1 oscillates about 1: starting at 2 the slope returns to 0 at r = π (N = 1)
    IvpOptions opt;
    opt.r_max = 10.0;
    opt.length_scale = 1.0;
    const Trajectory tr = integrate_radial_ivp(1, [](double v) { return v - 1.0; }, 1.5, opt);
    EXPECT_EQ(tr.outcome, Outcome::Turning);
    EXPECT_NEAR(tr.event_r, std::numbers::pi, 1e-8);
}

TEST(RadialIvp, TalentiProfile) {
    IvpOptions opt;
    opt.r_max = 10.0;
    opt.length_scale = 1.0;
    opt.samples = grid::graded(10.0, 1e-3, 1.01, 0.01);
    opt.samples.pop_back();
    const double a = std::pow(3.0, 0.25);
    const Trajectory tr = integrate_radial_ivp(3, [](double v) { return std::pow(v, 5); }, a, opt);
    ASSERT_GE(tr.profile.size(), opt.samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < tr.profile.size(); ++i) {
        const double r = tr.profile.nodes[i];
        worst = std::max(worst, std::abs(tr.profile.values[i] - a / std::sqrt(1 + r * r)));
    }
    EXPECT_LT(worst, 1e-6);
}

TEST(RadialIvp, RejectsBadInput) {
    IvpOptions opt;
    auto g = [](double v) { return v; };
    EXPECT_THROW(integrate_radial_ivp(0, g, 1.0, opt), ConfigError);
    EXPECT_THROW(integrate_radial_ivp(1, g, -1.0, opt), InputError);
    EXPECT_STREQ(to_string(Outcome::Decay), "Decay");
}
