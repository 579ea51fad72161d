#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "layerstab/error.hpp"
#include "layerstab/secondvar.hpp"

using namespace layerstab;

TEST(SecondVar, B0Polynomial) {
    const double d = 0.8;
    const Vec4 a{0.3, -0.1, 0.7, 0.2};
    const double expect = 4.0 * d *
                          (-0.09 - 0.49 + 0.3 * -0.1 + 0.7 * 0.2 - 4.0 * 0.3 * 0.7 + 3.0 * -0.1 * 0.7 +
                           3.0 * 0.3 * 0.2 - 2.0 * -0.1 * 0.2);
    EXPECT_NEAR(b0_form(a, d), expect, 1e-15);
    const auto m = b0_matrix(d);
    EXPECT_NEAR(m.matrix.quadratic({a.begin(), a.end()}), expect, 1e-14);
}

TEST(SecondVar, B0PositiveOnMassPreserving) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n;
    for (int k = 0; k < 1000; ++k) {
        const double x = n(rng), y = n(rng);
        EXPECT_GT(b0_form({x, y, -x, -y}, 1.0), 0.0);
    }
}

TEST(SecondVar, FormsMatchMatrices) {
    const Vec4 a{0.3, -0.1, 0.7, 0.2}, b{-0.4, 0.5, 0.1, 0.05};
    for (int j = 1; j <= 3; ++j) {
        const auto m = bj_matrix(j, 0.7, 0.3, 5.0);
        EXPECT_NEAR(bj_form(j, a, b, 0.7, 0.3, 5.0),
                    m.matrix.quadratic({a.begin(), a.end()}) + m.matrix.quadratic({b.begin(), b.end()}), 1e-12);
        EXPECT_LT(m.matrix.asymmetry(), 1e-14);
    }
    const Vec3 c{0.3, -0.1, 0.7}, e{0.2, 0.1, -0.3};
    for (int j = 1; j <= 3; ++j) {
        const auto m = mj_matrix(j, 1.0, 0.7, 1.0, 5.0);
        EXPECT_NEAR(mj_form(j, c, e, 1.0, 0.7, 1.0, 5.0),
                    m.matrix.quadratic({c.begin(), c.end()}) + m.matrix.quadratic({e.begin(), e.end()}), 1e-12);
    }
}

TEST(SecondVar, DimensionlessScaling) {
    // B_1(x, 0) = (2L/pi) x^T tilde_B1 x at the optimal width
    const double d_uv = 0.7, d_v0 = 0.3, L = 5.0;
    const double w = bilayer_width_from_tensions(d_uv, d_v0);
    const double ups = std::exp(-2.0 * std::numbers::pi * w / L);
    const double zeta = d_uv / (d_uv + d_v0);
    const Vec4 x{0.3, -0.1, 0.7, 0.2}, zero{};
    const double dimensional = bj_form(1, x, zero, d_uv, d_v0, L);
    EXPECT_NEAR(dimensional, 2.0 * L / std::numbers::pi * tilde_b1_value(x, zeta, ups), 1e-10 * std::abs(dimensional));
    const auto t = tilde_b1_matrix(zeta, ups);
    EXPECT_NEAR(t.matrix.quadratic({x.begin(), x.end()}), tilde_b1_value(x, zeta, ups), 1e-13);
}

TEST(SecondVar, BilayerEigenAgreesWithJacobi) {
    for (double zeta : {0.1, 0.5, 0.9}) {
        for (double u : {0.05, 0.5, 0.95}) {
            const auto e = bilayer_eigen_analytic(zeta, u);
            EXPECT_LT(e.g_minus, e.g_plus);
            EXPECT_NEAR(e.g_minus, e.g_minus_rational, 1e-10 * std::max(1.0, std::abs(e.g_minus)));
        }
    }
}

TEST(SecondVar, MonolayerEigenAgreesWithJacobi) {
    for (double sigma : {0.26, 0.35, 0.49}) {
        for (double nu : {0.1, 0.5, 0.9}) {
            const auto e = monolayer_eigen_analytic(sigma, nu);
            const auto m = hat_m_matrix(sigma, sigma, nu);
            const auto s = symmetric_eigen(m.matrix);
            std::vector<double> ours{e.E1, e.E2, e.E3};
            std::sort(ours.begin(), ours.end());
            for (int k = 0; k < 3; ++k) EXPECT_NEAR(ours[k], s.eigenvalues[k], 1e-10);
            EXPECT_GT(e.E1, 0.0);
            EXPECT_GT(e.E2, 0.0);
        }
    }
    EXPECT_THROW(monolayer_eigen_analytic(0.3, 0.35, 0.5), UnsupportedCaseError);
}

TEST(SecondVar, DomainGuards) {
    EXPECT_THROW(tilde_b1_matrix(0.5, 1.0), DomainError);
    EXPECT_THROW(tilde_b1_matrix(1.5, 0.5), DomainError);
}
