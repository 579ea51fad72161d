#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "layerstab/error.hpp"
#include "layerstab/model.hpp"

using namespace layerstab;

TEST(Model, TensionsRoundTrip) {
    const SurfaceTensions d{1.0, 0.3, 0.7};
    const auto c = InterfaceCoefficients::from_tensions(d);
    EXPECT_NEAR(c.c0(), 0.3, 1e-15);
    EXPECT_NEAR(c.cu(), 0.7, 1e-15);
    EXPECT_NEAR(c.cv(), 0.0, 1e-15);
    const auto back = surface_tensions(c);
    EXPECT_NEAR(back.d_u0, 1.0, 1e-15);
    EXPECT_NEAR(back.d_v0, 0.3, 1e-15);
    EXPECT_NEAR(back.d_uv, 0.7, 1e-15);
}

TEST(Model, RejectsBrokenTriangle) {
    EXPECT_THROW(InterfaceCoefficients::from_tensions({3.0, 1.0, 1.0}), ValidationError);
    EXPECT_THROW(InterfaceCoefficients(-0.1, 1.0, 1.0), ValidationError);
    EXPECT_THROW(InterfaceCoefficients(0.0, 0.0, 0.0), ValidationError);
    EXPECT_THROW(InterfaceCoefficients(NAN, 1.0, 1.0), ValidationError);
    // tiny negative rounding noise is clamped
    EXPECT_NO_THROW(InterfaceCoefficients(-1e-14, 1.0, 1.0));
}

TEST(Model, OptimalWidths) {
    const InterfaceCoefficients c(0.2, 0.5, 0.3);
    EXPECT_NEAR(optimal_width(LayerKind::BilayerVUV, c), std::cbrt(0.75 * 1.3), 1e-15);
    EXPECT_NEAR(optimal_width(LayerKind::Monolayer, c), std::cbrt(1.5), 1e-15);
}

TEST(Model, OptimalWidthMinimisesEnergyPerMass) {
    const InterfaceCoefficients c(0.2, 0.5, 0.3);
    for (auto kind : {LayerKind::BilayerVUV, LayerKind::Monolayer}) {
        auto ratio = [&](double w) {
            const auto em = reference_energy_mass(LayerStructure(kind, StripGeometry(3.0), w), c);
            return em.energy / em.mass;
        };
        const double w = optimal_width(kind, c);
        EXPECT_LT(ratio(w), ratio(w * 1.01));
        EXPECT_LT(ratio(w), ratio(w * 0.99));
    }
}

TEST(Model, InterfaceOrder) {
    const LayerStructure b(LayerKind::BilayerVUV, StripGeometry(1.0), 0.5);
    EXPECT_EQ(b.interface_positions(), (std::vector<double>{0.5, 1.0, -0.5, -1.0}));
    EXPECT_EQ(b.sorted_interface_positions(), (std::vector<double>{-1.0, -0.5, 0.5, 1.0}));
    const LayerStructure m(LayerKind::Monolayer, StripGeometry(1.0), 0.5);
    EXPECT_EQ(m.interface_count(), 3);
    EXPECT_EQ(m.interface_positions(), (std::vector<double>{0.0, 0.5, 1.0}));
}

TEST(Model, Dimensionless) {
    const auto c = InterfaceCoefficients::from_tensions({1.0, 0.3, 0.7});
    const auto s = LayerStructure::optimal(LayerKind::BilayerVUV, 5.0, c);
    const auto p = dimensionless(s, c);
    EXPECT_NEAR(p.ell, 5.0 / s.width(), 1e-14);
    EXPECT_NEAR(*p.upsilon, std::exp(-2.0 * std::numbers::pi / p.ell), 1e-15);
    EXPECT_NEAR(*p.zeta, 0.7, 1e-15);
    EXPECT_FALSE(p.nu.has_value());

    const auto cm = InterfaceCoefficients::from_tensions({1.0, 1.0, 0.7});
    const auto pm = dimensionless(LayerStructure::optimal(LayerKind::Monolayer, 5.0, cm), cm);
    EXPECT_NEAR(*pm.rho + *pm.sigma + *pm.mu, 1.0, 1e-15);
    EXPECT_NEAR(*pm.rho, *pm.sigma, 1e-15);
}

TEST(Model, ParseKind) {
    EXPECT_EQ(parse_layer_kind("Mono"), LayerKind::Monolayer);
    EXPECT_EQ(parse_layer_kind("bilayer"), LayerKind::BilayerVUV);
    EXPECT_THROW(parse_layer_kind("trilayer"), ValidationError);
    EXPECT_THROW(StripGeometry(0.0), ValidationError);
}

TEST(Model, MonolayerWarning) {
    EXPECT_TRUE(admissibility_warnings(LayerKind::Monolayer, InterfaceCoefficients(0.1, 0.2, 0.3)).size() == 1);
    EXPECT_TRUE(admissibility_warnings(LayerKind::Monolayer, InterfaceCoefficients(0.1, 0.2, 0.2)).empty());
}
