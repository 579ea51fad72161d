#pragma once

#include <string>
#include <vector>

#include "layerstab/eigen.hpp"
#include "layerstab/model.hpp"

namespace layerstab {

/// Smallest and largest decay factor accepted by the boundary curves. Outside
/// this range the radical expressions lose too many digits to be trusted.
inline constexpr double kDecayMin = 1e-8;
inline constexpr double kDecayMax = 1.0 - 1e-4;

/// Verdicts closer than this to the boundary are flagged marginal.
inline constexpr double kMarginalBand = 1e-6;

struct CurvePair {
    double first = 0.0;
    double second = 0.0;
};

/// (zeta_1, zeta_2): G_- > 0 exactly for zeta_1 < zeta < zeta_2. Throws
/// DomainError outside [kDecayMin, kDecayMax].
CurvePair zeta12(double upsilon);
/// Same with l = log(upsilon); avoids rounding upsilon^j for high modes.
CurvePair zeta12_log(double l);
double zeta1(double upsilon);
double zeta2(double upsilon);

/// (sigma_1, sigma_2): E_3 >= 0 exactly for sigma_1 <= sigma <= sigma_2.
CurvePair sigma12(double nu);
CurvePair sigma12_log(double l);

struct ModeOneCurves {
    double f1 = 0.0;  ///< 1 - 2 sigma_2(exp(-2 pi / ell))
    double g1 = 0.0;  ///< zeta_1(exp(-2 pi / ell))
};

ModeOneCurves mode1_curves(double ell);

enum class CurveKind { Zeta1, Zeta2, Sigma1, Sigma2, F1, G1, FSup, GSup, MuTilde, ZetaTilde };

/// A named boundary curve. Zeta/sigma curves take upsilon or nu; the others
/// take ell = L/delta. mode_cap is used by the aggregated curves.
struct BoundaryCurve {
    CurveKind kind;
    int mode_cap = 100;

    double operator()(double x) const;
};

struct AggregateResult {
    double value = 0.0;
    int argmax_mode = 1;      ///< worst mode; ties go to the smallest j
    int modes_evaluated = 0;  ///< modes with decay factor >= kDecayMin
    double tail_value = 0.0;  ///< per-mode curve at the last evaluated mode
};

/// Bilayer: max_{j <= jmax} zeta_1(upsilon^j). Monolayer:
/// 1 - 2 min_j sigma_2(nu^j). Modes whose decay factor falls below
/// kDecayMin are replaced by the small-decay limits (0 and 1/2), which
/// never beat an evaluated mode.
AggregateResult aggregated_threshold(LayerKind kind, double ell, int jmax = 100);

/// max_{k <= kmax} f_1(ell/k), computed directly from f_1. Equals the
/// monolayer aggregated_threshold value.
double sup_f1(double ell, int kmax = 100);
/// max_{k <= kmax} g_1(ell/k).
double sup_g1(double ell, int kmax = 100);

struct StabilityVerdict {
    bool stable = false;
    bool marginal = false;
    int worst_mode = 1;
    /// Dimensionless eigenvalue that decides stability at the worst mode:
    /// G_- for the bilayer, E_3 for the monolayer.
    double min_eigenvalue = 0.0;
    /// zeta - zeta_tilde or mu - mu_tilde.
    double margin = 0.0;
    double threshold = 0.0;
};

/// Needs params.ell plus zeta (bilayer) or rho, sigma, mu (monolayer).
/// Throws UnsupportedCaseError for a monolayer with rho != sigma.
StabilityVerdict verdict(LayerKind kind, const DimensionlessParams& params, int jmax = 100);
StabilityVerdict verdict(const LayerStructure& s, const InterfaceCoefficients& c, int jmax = 100);

struct AlphaEstimate {
    double value = 0.0;
    double error_estimate = 0.0;  ///< difference to the half-size grid
    double argmax_upsilon = 0.0;
};

/// sup over upsilon of zeta_tilde(upsilon), on a grid log-spaced in 1 - upsilon
/// covering upsilon in [1e-6, 1 - 1e-4].
AlphaEstimate estimate_alpha(int jmax = 100, int grid = 2000);

struct ModeShape {
    std::string name;
    std::vector<double> vector;  ///< unit length
    double eigenvalue = 0.0;     ///< Rayleigh quotient with the mode matrix
    bool can_be_negative = false;
};

struct ModeShapeSet {
    LayerKind kind;
    SmallMatrix matrix;  ///< tilde B_1 or hat M the shapes belong to
    std::vector<ModeShape> shapes;
};

/// s1, s2, u1, u2 of the dimensionless bilayer matrix. Throws DomainError
/// when a square-root argument is negative.
ModeShapeSet bilayer_mode_shapes(double zeta, double upsilon);
/// s1 = (-1, 0, 1), s2 and u of hat M with rho = sigma.
ModeShapeSet monolayer_mode_shapes(double sigma, double nu);
ModeShapeSet mode_shapes(LayerKind kind, const DimensionlessParams& params);

/// Parameters used for the mode-shape pictures.
struct DemoParameters {
    SurfaceTensions tensions;
    double L = 5.0;
    double epsilon = 0.25;
};

/// Bilayer: d_uv = 0.7, d_v0 = 0.3 (d_u0 = 1 only fixes c0). Monolayer:
/// d_u0 = d_v0 = 1, d_uv = 0.7, since the eigenvector formulas need equal
/// U-0 and V-0 tensions.
DemoParameters demo_parameters(LayerKind kind);

}  // namespace layerstab
