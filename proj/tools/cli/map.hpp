#pragma once

#include <string>
#include <vector>

#include "layerstab/model.hpp"

namespace layerstab::cli {

/// Horizontal axis of a stability map: the decay factor (upsilon or nu) or
/// ell = L / delta.
enum class MapAxis { Decay, Ell };

MapAxis parse_map_axis(const std::string& s);
std::string to_string(MapAxis a);

struct SweepConfig {
    LayerKind kind = LayerKind::BilayerVUV;
    MapAxis axis = MapAxis::Decay;
    double x_min = 0.005, x_max = 0.995;
    /// zeta for the bilayer, mu for the monolayer (clipped to [0, 1/2]).
    double y_min = 0.0, y_max = 1.0;
    int nx = 200, ny = 200;
    int jmax = 100;
    int threads = 1;

    /// Throws ValidationError for empty grids, inverted ranges or ranges
    /// outside the guarded domain.
    void validate() const;
};

struct MapCell {
    double x = 0.0;
    double y = 0.0;
    bool stable = false;
    bool marginal = false;
    int worst_mode = 1;
    double min_eig = 0.0;
    double margin = 0.0;
};

struct MapResult {
    SweepConfig config;
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> threshold;  ///< per x column
    std::vector<MapCell> cells;     ///< row-major over x: cells[i * ny + k]
    std::vector<std::string> warnings;
};

/// Grid point i of n on [lo, hi]; a single point sits at lo.
double grid_point(double lo, double hi, int i, int n);

/// Evaluates every cell with a work queue over x columns; the result does not
/// depend on the number of threads.
MapResult compute_map(const SweepConfig& config);

std::string map_csv(const MapResult& r);
std::string map_json(const MapResult& r);
std::string map_svg(const MapResult& r);
/// Sidecar report: warnings and counts of marginal cells, as JSON.
std::string map_report(const MapResult& r);

}  // namespace layerstab::cli
