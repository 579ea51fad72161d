#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "layerstab/error.hpp"
#include "layerstab/perturb.hpp"

using namespace layerstab;

namespace {

PerturbationSpectrum random_spectrum(int n, int J, double L, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PerturbationSpectrum s(n, J, L);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= J; ++j) s.set_a(i, j, u(rng));
        for (int j = 1; j <= J; ++j) s.set_b(i, j, u(rng));
    }
    return s;
}

}  // namespace

TEST(Perturb, SynthesizeBasis) {
    const double L = 3.0;
    PerturbationSpectrum s(3, 2, L);
    s.set_a(0, 2, 1.0);
    const double x = 0.4;
    EXPECT_NEAR(s.synthesize(x)[0], std::sqrt(2.0 / L) * std::cos(4.0 * std::numbers::pi * x / L), 1e-15);
    EXPECT_NEAR(s.synthesize_derivative(x)[0],
                -std::sqrt(2.0 / L) * 4.0 * std::numbers::pi / L * std::sin(4.0 * std::numbers::pi * x / L), 1e-14);
    s.set_a(0, 0, 2.0);
    EXPECT_NEAR(s.integral(0), 2.0 * std::sqrt(L), 1e-15);
}

TEST(Perturb, ProfileRoundTrip) {
    const double L = 2.5;
    const int J = 6, N = 64;
    const auto s = random_spectrum(4, J, L, 7);
    std::vector<std::vector<double>> samples(4, std::vector<double>(N));
    for (int k = 0; k < N; ++k) {
        const auto p = s.synthesize(k * L / N);
        for (int i = 0; i < 4; ++i) samples[i][k] = p[i];
    }
    const auto back = from_profiles(samples, L, J);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j <= J; ++j) EXPECT_NEAR(back.a(i, j), s.a(i, j), 1e-12);
        for (int j = 1; j <= J; ++j) EXPECT_NEAR(back.b(i, j), s.b(i, j), 1e-12);
    }
}

TEST(Perturb, Aliasing) {
    std::vector<std::vector<double>> samples(1, std::vector<double>(10, 0.0));
    EXPECT_THROW(from_profiles(samples, 1.0, 3), AliasingError);
}

TEST(Perturb, MassClasses) {
    PerturbationSpectrum b(4, 1, 2.0);
    b.set_a(0, 0, 0.3);
    b.set_a(2, 0, -0.3);
    b.set_a(1, 0, 0.5);
    b.set_a(3, 0, -0.5);
    EXPECT_TRUE(validate(b, PerturbationClass::PbM).ok);
    EXPECT_TRUE(validate(b, PerturbationClass::Pb).ok);
    b.set_a(3, 0, 0.1);
    EXPECT_FALSE(validate(b, PerturbationClass::PbM).ok);
    EXPECT_FALSE(validate(b, PerturbationClass::PbM).violated.empty());

    PerturbationSpectrum m(3, 1, 2.0);
    for (int i = 0; i < 3; ++i) m.set_a(i, 0, 0.2);
    EXPECT_TRUE(validate(m, PerturbationClass::PmM).ok);
    m.set_a(1, 0, 0.3);
    m.set_a(2, 0, 0.4);
    EXPECT_TRUE(validate(m, PerturbationClass::Pm).ok);
    EXPECT_FALSE(validate(m, PerturbationClass::PmM).ok);
    EXPECT_FALSE(validate(m, PerturbationClass::Pb).ok);
}

TEST(Perturb, InterfacesAndCrossing) {
    const LayerStructure s(LayerKind::BilayerVUV, StripGeometry(2.0), 0.5);
    PerturbationSpectrum p(4, 1, 2.0);
    p.set_a(0, 1, 1.0);
    const auto curves = perturbed_interfaces(s, p, 0.01);
    EXPECT_EQ(curves.count(), 4);
    EXPECT_NEAR(curves.position(0, 0.0), 0.5 + 0.01 * std::sqrt(2.0 / 2.0), 1e-15);
    EXPECT_GT(minimum_gap(curves).gap, 0.0);
    EXPECT_THROW(perturbed_interfaces(s, p, 1.0), CrossingError);
    EXPECT_THROW(perturbed_interfaces(s, PerturbationSpectrum(3, 1, 2.0), 0.01), ValidationError);
}
