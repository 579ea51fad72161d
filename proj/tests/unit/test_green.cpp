#include <gtest/gtest.h>

#include <cmath>

#include "layerstab/error.hpp"
#include "layerstab/green.hpp"

using namespace layerstab;

struct GreenRef {
    double L, x1, x2, value;
};

// -(1/4pi) log(2 cosh(2 pi x2/L) - 2 cos(2 pi x1/L)), 40-digit mpmath.
constexpr GreenRef kGreen[] = {
    {1.0, 0.3, 0.1, -0.088110913988191211737},  {2.0, 0.5, -0.7, -0.17597276091514954961},
    {3.0, 2.9, 0.01, 0.24830641299006779968},   {1.0, 0.0, 0.5, -0.24296925995140396222},
    {5.0, 1.0, 4.0, -0.39968008276959064845},
};

TEST(Green, ClosedFormReference) {
    for (const auto& r : kGreen) EXPECT_NEAR(green_closed(r.L, r.x1, r.x2), r.value, 1e-14);
}

TEST(Green, SymmetriesAndPeriodicity) {
    EXPECT_NEAR(green_closed(2.0, 0.3, 0.4), green_closed(2.0, -0.3, 0.4), 1e-15);
    EXPECT_NEAR(green_closed(2.0, 0.3, 0.4), green_closed(2.0, 0.3, -0.4), 1e-15);
    EXPECT_NEAR(green_closed(2.0, 0.3, 0.4), green_closed(2.0, 4.3, 0.4), 1e-13);
}

TEST(Green, NoOverflowFarAway) {
    const double g = green_closed(1.0, 0.2, 400.0);
    EXPECT_TRUE(std::isfinite(g));
    EXPECT_NEAR(g, -200.0, 1e-10);
}

TEST(Green, SingularPoint) {
    EXPECT_THROW(green_closed(1.0, 0.0, 0.0), SingularPointError);
    EXPECT_THROW(green_closed(1.0, 3.0, 0.0), SingularPointError);
    EXPECT_THROW(green_closed(-1.0, 0.2, 0.1), DomainError);
}

TEST(Green, SeriesConverges) {
    const auto s = green_series_auto(1.0, 0.3, 0.1, 1e-14);
    EXPECT_TRUE(s.converged);
    EXPECT_NEAR(s.value, kGreen[0].value, 1e-13);
    EXPECT_LE(s.tail_bound, 1e-14);
    EXPECT_EQ(s.terms, series_truncation(1.0, 0.1, 1e-14));
    EXPECT_THROW(green_series(1.0, 0.3, 0.0, 10), DomainError);
}

TEST(Green, AntiderivativeSecondDerivative) {
    const double L = 2.0, a = 0.37;
    for (double z : {-0.8, -0.05, 0.3, 1.4}) {
        const double h = 1e-3;
        const double d2 = (green_antiderivative2(L, a, z + h) - 2.0 * green_antiderivative2(L, a, z) +
                           green_antiderivative2(L, a, z - h)) / (h * h);
        EXPECT_NEAR(d2, green_closed(L, a, z), 2e-6) << z;
    }
    EXPECT_TRUE(std::isfinite(green_antiderivative2(L, 0.0, 0.0)));
    EXPECT_NEAR(green_antiderivative2(L, a, 0.4), green_antiderivative2(L, a, -0.4), 1e-14);
}

TEST(Green, DeltaIdentity) {
    const auto f = periodic_gaussian_bump(1.0, 0.1, -0.05, 2.0, 0.2);
    const auto r = check_delta_identity(1.0, f);
    EXPECT_LT(r.residual, 1e-6);
}
