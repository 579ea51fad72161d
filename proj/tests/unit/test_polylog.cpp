#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "layerstab/polylog.hpp"

using namespace layerstab;

// Li3(exp(-s + i theta)), frozen from a 40-digit mpmath evaluation.
struct Li3Ref {
    double s, theta, re, im;
};

constexpr Li3Ref kLi3[] = {
    {0.1, 0.3, 0.96680678298033369691, 0.36544626859167026304},
    {1.0, 2.0, -0.16245630423662182221, 0.32144384756201579371},
    {5.0, -1.0, 0.0036381554334270151112, -0.0056749487261874171757},
    {0.001, 0.001, 1.2004127543242566786, 0.0016368727184928576394},
    {0.0, 1.5, -0.047007401865106889579, 0.98150523262808095807},
    {2.5, 3.14159, -0.081262558947545806112, 2.1350589565835962738e-7},
};

TEST(Polylog, MatchesReference) {
    for (const auto& r : kLi3) {
        const auto v = trilog_exp({-r.s, r.theta});
        EXPECT_NEAR(v.real(), r.re, 1e-13 * std::max(1.0, std::abs(r.re))) << r.s << " " << r.theta;
        EXPECT_NEAR(v.imag(), r.im, 1e-13 * std::max(1.0, std::abs(r.im))) << r.s << " " << r.theta;
        EXPECT_NEAR(trilog_exp_real(r.s, r.theta), r.re, 1e-13);
    }
}

TEST(Polylog, ZetaThreeAtOne) {
    EXPECT_NEAR(trilog_exp({0.0, 2.0 * std::numbers::pi}).real(), 1.2020569031595942854, 1e-14);
}

TEST(Polylog, SwitchoverIsContinuous) {
    // the series/expansion switch must not leave a visible step
    for (double s = 0.2; s < 2.0; s += 0.01) {
        const double a = trilog_exp_real(s, 0.7);
        const double b = trilog_exp_real(s + 1e-9, 0.7);
        EXPECT_LT(std::abs(a - b), 1e-8);
    }
}
