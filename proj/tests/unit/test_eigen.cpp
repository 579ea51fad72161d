#include <gtest/gtest.h>

#include <cmath>

#include "layerstab/eigen.hpp"
#include "layerstab/error.hpp"

using namespace layerstab;

TEST(Eigen, KnownSpectrum) {
    SmallMatrix m(2);
    m(0, 0) = 2.0;
    m(1, 1) = 2.0;
    m(0, 1) = m(1, 0) = 1.0;
    const auto s = symmetric_eigen(m);
    EXPECT_NEAR(s.eigenvalues[0], 1.0, 1e-15);
    EXPECT_NEAR(s.eigenvalues[1], 3.0, 1e-15);
    EXPECT_NEAR(std::abs(s.eigenvectors[0][0]), M_SQRT1_2, 1e-15);
    EXPECT_GT(s.eigenvectors[1][0], 0.0);
}

TEST(Eigen, FourByFourResidual) {
    SmallMatrix m(4);
    const double v[4][4] = {{4, 1, -2, 0.5}, {1, 3, 0.2, 1}, {-2, 0.2, 5, -1}, {0.5, 1, -1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = v[i][j];
    const auto s = symmetric_eigen(m);
    double trace = 0.0;
    for (int k = 0; k < 4; ++k) {
        trace += s.eigenvalues[k];
        const auto mv = m.apply(s.eigenvectors[k]);
        for (int i = 0; i < 4; ++i) EXPECT_NEAR(mv[i], s.eigenvalues[k] * s.eigenvectors[k][i], 1e-13);
        if (k > 0) EXPECT_LE(s.eigenvalues[k - 1], s.eigenvalues[k]);
    }
    EXPECT_NEAR(trace, 13.0, 1e-13);
}

TEST(Eigen, RejectsAsymmetric) {
    SmallMatrix m(2);
    m(0, 1) = 1.0;
    EXPECT_THROW(symmetric_eigen(m), ValidationError);
}
