#include <cmath>

#include <gtest/gtest.h>

#include <qsnorm/curves.hpp>
#include <qsnorm/direct_minimizer.hpp>
#include <qsnorm/verification.hpp>

using namespace qsnorm;

TEST(Minimizer, GroundStateInitIsKept) {
    // the projected init is a candidate, so M_hat cannot exceed the branch value
    const Params prm{1, 9.0};
    const BranchSolution s = solve_branch_point(prm, 1.0);
    MinimizeOptions opt;
    opt.max_evaluations = 800;
    const MinimizeResult m = minimize_reduced(prm, s.point.a, s.u, opt);
    EXPECT_NEAR(m.M_hat / s.point.M, 1.0, 1e-6);
    EXPECT_NEAR(m.mass / s.point.a, 1.0, 1e-10);
}

TEST(Minimizer, MassLadderIsDecreasing) {
    const Params prm{2, 8.0};
    std::vector<double> masses, values;
    for (double lambda : {10.0, 1.0, 0.1}) {
        const BranchPoint b = branch_point(prm, lambda);
        const MinimizeResult m =
            minimize_reduced(prm, b.a, acceptance::gaussian_profile(prm, 1.0 / std::sqrt(lambda), 0.5 * b.a));
        EXPECT_NEAR(m.M_hat / b.M, 1.0, 1e-2);
        EXPECT_GE(m.M_hat, b.M * (1 - 1e-6));
        masses.push_back(b.a);
        values.push_back(m.M_hat);
    }
    EXPECT_LT(masses[0], masses[1]);
    EXPECT_LT(masses[1], masses[2]);
    EXPECT_GT(values[0], values[1]);
    EXPECT_GT(values[1], values[2]);
}

TEST(Minimizer, ResultLiesOnPohozaevSet) {
    const Params prm{1, 9.0};
    MinimizeOptions opt;
    opt.max_evaluations = 500;
    const MinimizeResult m = minimize_reduced(prm, 3.0, acceptance::gaussian_profile(prm, 1.0, 2.0), opt);
    const FunctionalValues f = functionals(m.profile, prm);
    EXPECT_LT(std::abs(f.pohozaev), 1e-9 * (f.kinetic + 3 * f.quasi));
    EXPECT_NEAR(f.energy / m.M_hat, 1.0, 1e-9);
}

TEST(Minimizer, RejectsBadInput) {
    const Params prm{1, 9.0};
    const RadialProfile g = acceptance::gaussian_profile(prm, 1.0, 2.0);
    MinimizeOptions opt;
    EXPECT_THROW(minimize_reduced(prm, -1.0, g), ConfigError);
    EXPECT_THROW(minimize_reduced(prm, 1.0, g), InputError);  // init mass exceeds a
    opt.knots = 20;
    EXPECT_THROW(minimize_reduced(prm, 3.0, g, opt), ConfigError);
    RadialProfile bumped = g;
    bumped.values[5] = 2.0 * bumped.values[0];
    EXPECT_THROW(minimize_reduced(prm, 3.0, bumped), InputError);
}
