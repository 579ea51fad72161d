#pragma once

#include <array>
#include <vector>

#include "layerstab/eigen.hpp"
#include "layerstab/model.hpp"
#include "layerstab/perturb.hpp"

namespace layerstab {

using Vec4 = std::array<double, 4>;
using Vec3 = std::array<double, 3>;

/// Per-mode quadratic form. For j >= 1 the same matrix acts on the cosine
/// and on the sine coefficients: form(a, b) = a^T M a + b^T M b. For the
/// dimensionless reductions, scale * L is the factor relating them to the
/// dimensional form (2/pi for tilde B_1, 1/pi for hat M).
struct ModeForm {
    int j = 0;
    int dim = 0;
    SmallMatrix matrix;
    double scale = 1.0;
};

/// delta_b = cbrt(3/4 (d_uv + d_v0)), the optimal bilayer width in terms of
/// surface tensions.
double bilayer_width_from_tensions(double d_uv, double d_v0);
/// delta_m = cbrt(3/4 (d_u0 + d_uv + d_v0)).
double monolayer_width_from_tensions(double d_u0, double d_uv, double d_v0);

/// 4 delta (-a1^2 - a3^2 + a1 a2 + a3 a4 - 4 a1 a3 + 3 a2 a3 + 3 a1 a4 - 2 a2 a4).
double b0_form(const Vec4& a0, double delta_b);

/// Bilayer mode-j form (j >= 1) at the optimal width.
double bj_form(int j, const Vec4& a, const Vec4& b, double d_uv, double d_v0, double L);

/// Monolayer mode-j form; j = 0 gives delta_m (a1 - a3)^2.
double mj_form(int j, const Vec3& a, const Vec3& b, double d_u0, double d_uv, double d_v0, double L);

ModeForm b0_matrix(double delta_b);
ModeForm bj_matrix(int j, double d_uv, double d_v0, double L);
ModeForm mj_matrix(int j, double d_u0, double d_uv, double d_v0, double L);

/// Sum of the per-mode forms over the whole spectrum (structure must have
/// optimal width).
double second_variation_closed_form(const LayerStructure& s, const PerturbationSpectrum& spec,
                                    const InterfaceCoefficients& c);

/// First variation at the optimal structure: 2 delta_b^2 int (p1 + p3) for the
/// bilayer and delta_m^2 int (p3 - p1) for the monolayer.
double first_variation_closed_form(const LayerStructure& s, const PerturbationSpectrum& spec);

/// Dimensionless mode-1 bilayer matrix; B_1(x, 0) = (2L/pi) x^T M x.
/// Throws DomainError unless upsilon in (0,1) and zeta in [0,1].
ModeForm tilde_b1_matrix(double zeta, double upsilon);
/// Same with log(upsilon) given directly (preferred near upsilon = 1).
ModeForm tilde_b1_matrix_log(double zeta, double log_upsilon);
/// Direct evaluation of the tilde B_1 polynomial, independent of the matrix.
double tilde_b1_value(const Vec4& x, double zeta, double upsilon);

/// Dimensionless mode-1 monolayer matrix; M_1(x, 0) = (L/pi) x^T M x.
ModeForm hat_m_matrix(double rho, double sigma, double nu);
ModeForm hat_m_matrix_log(double rho, double sigma, double log_nu);

struct BilayerEigen {
    double g_minus = 0.0;
    double g_plus = 0.0;
    double h_minus = 0.0;
    double h_plus = 0.0;
    /// G_- and G_+ from the rational expressions (same quantities as g_minus,
    /// g_plus; g_minus is evaluated in factored form for accuracy).
    double g_minus_rational = 0.0;
    double g_plus_rational = 0.0;
    /// 2x2 form obtained by minimising tilde B_1 over (x2, x4).
    SmallMatrix maltese{2};
};

BilayerEigen bilayer_eigen_analytic(double zeta, double upsilon);
BilayerEigen bilayer_eigen_analytic_log(double zeta, double log_upsilon);

struct MonolayerEigen {
    double e1_poly = 0.0;  ///< e_1
    double e2_poly = 0.0;  ///< e_2
    double E1 = 0.0;
    double E2 = 0.0;
    double E3 = 0.0;  ///< the eigenvalue that can change sign
};

/// Throws UnsupportedCaseError unless rho == sigma (within 1e-12).
MonolayerEigen monolayer_eigen_analytic(double rho, double sigma, double nu);
MonolayerEigen monolayer_eigen_analytic(double sigma, double nu);
MonolayerEigen monolayer_eigen_analytic_log(double sigma, double log_nu);

}  // namespace layerstab
