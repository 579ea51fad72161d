#include <gtest/gtest.h>

#include <cmath>

#include "layerstab/oracle.hpp"
#include "layerstab/secondvar.hpp"

using namespace layerstab;

TEST(Oracle, FlatReferenceEnergies) {
    const InterfaceCoefficients c(0.2, 0.5, 0.3);
    for (auto kind : {LayerKind::BilayerVUV, LayerKind::Monolayer}) {
        for (double w : {0.4, 0.9}) {
            const LayerStructure s(kind, StripGeometry(3.0), w);
            const PerturbationSpectrum zero(s.interface_count(), 2, 3.0);
            const auto e = energy(s, zero, 0.0, c);
            const auto ref = reference_energy_mass(s, c);
            EXPECT_NEAR(e.total, ref.energy, 1e-12 * ref.energy);
        }
    }
}

TEST(Oracle, InterfacialArcLength) {
    const InterfaceCoefficients c(0.2, 0.5, 0.3);
    const LayerStructure s(LayerKind::Monolayer, StripGeometry(1.0), 0.5);
    PerturbationSpectrum p(3, 1, 1.0);
    p.set_b(1, 1, 0.1);
    const double eps = 0.3;
    // int sqrt(1 + (eps A k cos)^2) over a period, via a fine midpoint sum
    const double A = 0.1 * std::sqrt(2.0), k = 2.0 * M_PI;
    double len = 0.0;
    const int n = 4000;
    for (int i = 0; i < n; ++i) {
        const double x = (i + 0.5) / n;
        len += std::sqrt(1.0 + std::pow(eps * A * k * std::cos(k * x), 2)) / n;
    }
    const auto d = surface_tensions(c);
    const double expect = d.d_u0 + d.d_uv * len + d.d_v0;
    EXPECT_NEAR(interfacial_energy(s, p, eps, c), expect, 1e-12);
}

TEST(Oracle, QuadratureConverges) {
    const auto c = InterfaceCoefficients::from_tensions({1.0, 0.3, 0.7});
    const auto s = LayerStructure::optimal(LayerKind::BilayerVUV, 4.0, c);
    PerturbationSpectrum p(4, 2, 4.0);
    p.set_a(0, 1, 0.2);
    p.set_b(2, 2, -0.1);
    p.set_a(3, 1, 0.15);
    const auto e = h1m_energy(s, p, 0.5, {.grid = 256});
    EXPECT_LT(e.error_estimate, 1e-9 * std::abs(e.value));
}

TEST(Oracle, SecondVariationMatchesClosedForm) {
    const auto c = InterfaceCoefficients::from_tensions({1.0, 0.3, 0.7});
    const auto s = LayerStructure::optimal(LayerKind::BilayerVUV, 5.0, c);
    PerturbationSpectrum p(4, 2, 5.0);
    p.set_a(0, 1, 0.3);
    p.set_a(1, 1, -0.2);
    p.set_b(2, 2, 0.25);
    p.set_a(3, 2, 0.1);
    const auto fd = fd_second_variation(s, p, c);
    const double closed = second_variation_closed_form(s, p, c);
    EXPECT_NEAR(fd.value, closed, 1e-6 * std::abs(closed));
}

TEST(Oracle, FirstVariationMatchesClosedForm) {
    const auto c = InterfaceCoefficients::from_tensions({1.0, 1.0, 0.7});
    const auto s = LayerStructure::optimal(LayerKind::Monolayer, 5.0, c);
    PerturbationSpectrum p(3, 1, 5.0);
    p.set_a(0, 0, 0.1);
    p.set_a(1, 0, 0.25);
    p.set_a(2, 0, 0.4);
    p.set_a(1, 1, 0.2);
    const auto fd = fd_first_variation(s, p, c);
    EXPECT_NEAR(fd.value, first_variation_closed_form(s, p), 1e-8);
}
