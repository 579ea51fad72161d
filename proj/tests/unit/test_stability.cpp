#include <gtest/gtest.h>

#include <cmath>

#include "layerstab/error.hpp"
#include "layerstab/secondvar.hpp"
#include "layerstab/stability.hpp"

using namespace layerstab;

// decay, zeta1, zeta2, sigma1, sigma2; roots of the quadratics solved with
// mpmath at 40 digits.
struct RootRef {
    double decay, z1, z2, s1, s2;
};

constexpr RootRef kRoots[] = {
    {1.0e-8, 0.00836121420034195, 1.0001199897742694, -0.00011998977426936327, 0.49581939289982903},
    {1.0e-6, 0.014579960594933521, 1.0002844202056755, -0.00028442020567581148, 0.49271001970253381},
    {0.01, 0.11074448857821621, 1.0076793191822043, -0.0076800613355708504, 0.44462925257489955},
    {0.3, 0.56960233975391994, 1.3619959543869368, -0.37314915151887691, 0.22941392342271999},
    {0.6, 0.65397342397930121, 2.3361562018256084, -1.8433379848997635, 0.19595292248609183},
    {0.9, 0.64892235209499305, 3.776677067563493, -12.984931010243525, 0.19756286265553387},
    {0.999, 0.64265116954564952, 4.3513514300543457, -1497.9503483403499, 0.19997335285614071},
    {0.9999, 0.642589315132238, 4.356810710867362, -14997.950034833403, 0.19999733352828468},
};

TEST(Stability, RootsMatchReference) {
    for (const auto& r : kRoots) {
        const auto z = zeta12(r.decay);
        const auto s = sigma12(r.decay);
        EXPECT_NEAR(z.first, r.z1, 1e-11) << r.decay;
        EXPECT_NEAR(z.second, r.z2, 1e-11 * r.z2) << r.decay;
        EXPECT_NEAR(s.first, r.s1, 1e-9 * std::abs(r.s1)) << r.decay;
        EXPECT_NEAR(s.second, r.s2, 1e-11) << r.decay;
    }
}

TEST(Stability, RootsAreZerosOfTheEigenvalues) {
    for (double u : {0.1, 0.4, 0.8}) {
        const auto z = zeta12(u);
        EXPECT_NEAR(bilayer_eigen_analytic(z.first, u).g_minus, 0.0, 1e-10);
        const double s2 = sigma12(u).second;
        EXPECT_NEAR(monolayer_eigen_analytic(s2, u).E3, 0.0, 1e-10);
        // positive between the roots, negative below zeta_1
        EXPECT_GT(bilayer_eigen_analytic(0.5 * (z.first + 1.0), u).g_minus, 0.0);
        EXPECT_LT(bilayer_eigen_analytic(0.5 * z.first, u).g_minus, 0.0);
        EXPECT_GT(monolayer_eigen_analytic(s2 - 0.02, u).E3, 0.0);
        EXPECT_LT(monolayer_eigen_analytic(s2 + 0.02, u).E3, 0.0);
    }
}

TEST(Stability, Guards) {
    EXPECT_THROW(zeta12(0.0), DomainError);
    EXPECT_THROW(zeta12(1.0), DomainError);
    EXPECT_THROW(sigma12(1e-9), DomainError);
    EXPECT_NO_THROW(zeta12(kDecayMax));
}

TEST(Stability, AggregatedThreshold) {
    const double ell = 30.0;
    const auto r = aggregated_threshold(LayerKind::BilayerVUV, ell, 100);
    EXPECT_EQ(r.argmax_mode, 2);
    EXPECT_NEAR(r.value, sup_g1(ell, 100), 1e-14);
    const auto m = aggregated_threshold(LayerKind::Monolayer, ell, 100);
    EXPECT_NEAR(m.value, sup_f1(ell, 100), 1e-14);
    EXPECT_GE(r.value, 0.6425);
    EXPECT_THROW(aggregated_threshold(LayerKind::BilayerVUV, ell, 0), ValidationError);
}

TEST(Stability, BilayerModeSwitch) {
    EXPECT_EQ(aggregated_threshold(LayerKind::BilayerVUV, 25.3, 100).argmax_mode, 1);
    EXPECT_EQ(aggregated_threshold(LayerKind::BilayerVUV, 25.45, 100).argmax_mode, 2);
    EXPECT_EQ(aggregated_threshold(LayerKind::BilayerVUV, 42.2, 100).argmax_mode, 3);
}

TEST(Stability, Alpha) {
    const auto a = estimate_alpha(100, 2000);
    EXPECT_NEAR(a.value, 0.6560480, 1e-6);
    EXPECT_LT(a.error_estimate, 1e-8);
    EXPECT_NEAR(a.argmax_upsilon, 0.978, 2e-3);
}

TEST(Stability, MonolayerCutoff) {
    // smallest ell where mu_tilde exceeds 1/2, frozen from mpmath
    EXPECT_LT(aggregated_threshold(LayerKind::Monolayer, 4.4100, 100).value, 0.5);
    EXPECT_GT(aggregated_threshold(LayerKind::Monolayer, 4.4110, 100).value, 0.5);
}

TEST(Stability, Verdicts) {
    DimensionlessParams p;
    p.ell = 10.0;
    p.zeta = 0.99;
    const auto v = verdict(LayerKind::BilayerVUV, p);
    EXPECT_TRUE(v.stable);
    EXPECT_GT(v.min_eigenvalue, 0.0);
    EXPECT_NEAR(v.margin, 0.99 - v.threshold, 1e-15);
    p.zeta = 0.3;
    const auto w = verdict(LayerKind::BilayerVUV, p);
    EXPECT_FALSE(w.stable);
    EXPECT_LT(w.min_eigenvalue, 0.0);

    DimensionlessParams m;
    m.ell = 10.0;
    m.rho = 0.3;
    m.sigma = 0.3;
    m.mu = 0.4;
    EXPECT_NO_THROW(verdict(LayerKind::Monolayer, m));
    m.rho = 0.35;
    m.mu = 0.35;
    EXPECT_THROW(verdict(LayerKind::Monolayer, m), UnsupportedCaseError);
}

TEST(Stability, ModeShapes) {
    const auto b = bilayer_mode_shapes(0.6, 0.5);
    ASSERT_EQ(b.shapes.size(), 4u);
    for (const auto& s : b.shapes) {
        const auto mv = b.matrix.apply(s.vector);
        for (int i = 0; i < 4; ++i) EXPECT_NEAR(mv[i], s.eigenvalue * s.vector[i], 1e-12) << s.name;
    }
    const auto m = monolayer_mode_shapes(0.3, 0.5);
    ASSERT_EQ(m.shapes.size(), 3u);
    EXPECT_EQ(m.shapes[0].vector[1], 0.0);
    EXPECT_EQ(m.shapes[0].vector[0], -m.shapes[0].vector[2]);
    for (const auto& s : m.shapes) {
        const auto mv = m.matrix.apply(s.vector);
        for (int i = 0; i < 3; ++i) EXPECT_NEAR(mv[i], s.eigenvalue * s.vector[i], 1e-12) << s.name;
    }
}

TEST(Stability, DemoParametersAreAdmissible) {
    for (auto k : {LayerKind::BilayerVUV, LayerKind::Monolayer}) {
        const auto d = demo_parameters(k);
        const auto c = InterfaceCoefficients::from_tensions(d.tensions);
        EXPECT_TRUE(admissibility_warnings(k, c).empty());
    }
}
