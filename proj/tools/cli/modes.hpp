#pragma once

#include <string>
#include <vector>

#include "layerstab/model.hpp"
#include "layerstab/stability.hpp"

namespace layerstab::cli {

struct ModesConfig {
    LayerKind kind = LayerKind::BilayerVUV;
    SurfaceTensions tensions;
    double L = 5.0;
    double epsilon = 0.25;
    int samples = 201;

    /// Config filled with the demo parameters for the given kind.
    static ModesConfig defaults(LayerKind kind);
};

struct ModeProfile {
    ModeShape shape;
    std::vector<double> x;
    /// heights[i][k]: interface i at x[k].
    std::vector<std::vector<double>> heights;
};

struct ModeProfiles {
    ModesConfig config;
    double width = 0.0;
    DimensionlessParams params;
    std::vector<ModeProfile> profiles;
};

/// Interfaces perturbed by p_i(x) = v_i cos(2 pi x / L) for every mode
/// shape v. Throws CrossingError if a profile makes interfaces touch.
ModeProfiles compute_modes(const ModesConfig& config);

std::string modes_csv(const ModeProfiles& m);
std::string modes_json(const ModeProfiles& m);
std::string modes_svg(const ModeProfiles& m);

}  // namespace layerstab::cli
