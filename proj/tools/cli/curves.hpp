#pragma once

#include <string>
#include <vector>

#include "layerstab/model.hpp"

namespace layerstab::cli {

struct CurvesConfig {
    LayerKind kind = LayerKind::BilayerVUV;
    double ell_min = 0.5, ell_max = 60.0;
    int points = 600;
    int kmax = 20;   ///< number of k-family curves
    int jmax = 100;  ///< modes in the aggregated curve
    void validate() const;
};

struct Crossing {
    int k = 0;         ///< curves k and k+1 swap order
    double ell = 0.0;  ///< grid point just after the sign change
};

struct CurveTable {
    CurvesConfig config;
    std::vector<double> ell;
    /// family[k-1][i]: f_1(ell_i / k) (monolayer) or g_1(ell_i / k) (bilayer).
    std::vector<std::vector<double>> family;
    std::vector<double> aggregate;   ///< mu_tilde or zeta_tilde with jmax modes
    std::vector<int> dominant_mode;  ///< argmax mode of the aggregate
    std::vector<Crossing> crossings;
};

/// The mode-1 curve at ell, with the small-decay limit 0 where the decay
/// factor drops below the guarded range.
double mode1_or_limit(LayerKind kind, double ell);

CurveTable compute_curves(const CurvesConfig& config);

/// Columns: ell, k1..kK, aggregate, dominant_mode, and for the monolayer the
/// reference line 1/2.
std::string curves_csv(const CurveTable& t);
std::string curves_json(const CurveTable& t);
std::string curves_svg(const CurveTable& t);

}  // namespace layerstab::cli
