#include "map.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "format.hpp"
#include "layerstab/error.hpp"
#include "layerstab/secondvar.hpp"
#include "layerstab/stability.hpp"
#include "svg.hpp"

namespace layerstab::cli {

namespace {

constexpr double kPi = std::numbers::pi;

double ell_of(const SweepConfig& c, double x) { return c.axis == MapAxis::Ell ? x : -2.0 * kPi / std::log(x); }

}  // namespace

MapAxis parse_map_axis(const std::string& s) {
    if (s == "decay" || s == "upsilon" || s == "nu") return MapAxis::Decay;
    if (s == "ell" || s == "length") return MapAxis::Ell;
    throw ValidationError("unknown axis '" + s + "' (decay, ell)");
}

std::string to_string(MapAxis a) { return a == MapAxis::Decay ? "decay" : "ell"; }

void SweepConfig::validate() const {
    if (nx < 1 || ny < 1) throw ValidationError("grid must have at least one cell in each direction");
    if (jmax < 1) throw ValidationError("jmax must be at least 1");
    if (threads < 1) throw ValidationError("threads must be at least 1");
    if (x_min > x_max || y_min > y_max) throw ValidationError("range minimum exceeds maximum");
    const double upper = kind == LayerKind::BilayerVUV ? 1.0 : 0.5;
    if (y_min < 0.0 || y_max > upper) {
        throw ValidationError(kind == LayerKind::BilayerVUV ? "zeta range must lie in [0, 1]"
                                                             : "mu range must lie in [0, 1/2]");
    }
    if (axis == MapAxis::Decay) {
        if (!(x_min > 0.0) || x_max > kDecayMax) {
            throw ValidationError("decay range must lie in (0, " + fmt17(kDecayMax) + "]");
        }
    } else {
        const double ell_max = -2.0 * kPi / std::log(kDecayMax);
        if (!(x_min > 0.0) || x_max > ell_max) {
            throw ValidationError("ell range must lie in (0, " + fmt17(ell_max) + "]");
        }
    }
}

double grid_point(double lo, double hi, int i, int n) {
    if (n <= 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

MapResult compute_map(const SweepConfig& c) {
    c.validate();
    MapResult r;
    r.config = c;
    for (int i = 0; i < c.nx; ++i) r.xs.push_back(grid_point(c.x_min, c.x_max, i, c.nx));
    for (int k = 0; k < c.ny; ++k) r.ys.push_back(grid_point(c.y_min, c.y_max, k, c.ny));
    r.threshold.assign(c.nx, 0.0);
    r.cells.assign(static_cast<size_t>(c.nx) * c.ny, MapCell{});
    std::vector<int> fallback(c.nx, 0);

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < c.nx; i = next++) {
            const double ell = ell_of(c, r.xs[i]);
            const double l = -2.0 * kPi / ell;
            const auto agg = aggregated_threshold(c.kind, ell, c.jmax);
            r.threshold[i] = agg.value;
            fallback[i] = agg.modes_evaluated == 0;
            for (int k = 0; k < c.ny; ++k) {
                auto& cell = r.cells[static_cast<size_t>(i) * c.ny + k];
                cell.x = r.xs[i];
                cell.y = r.ys[k];
                cell.margin = cell.y - agg.value;
                cell.stable = cell.margin >= 0.0;
                cell.marginal = std::abs(cell.margin) < kMarginalBand;
                cell.worst_mode = agg.argmax_mode;
                const double lj = agg.argmax_mode * l;
                if (c.kind == LayerKind::BilayerVUV) {
                    cell.min_eig = bilayer_eigen_analytic_log(cell.y, lj).g_minus;
                } else {
                    cell.min_eig = monolayer_eigen_analytic_log(0.5 * (1.0 - cell.y), lj).E3;
                }
            }
        }
    };
    const int n_threads = std::min(c.threads, c.nx);
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    int n_fallback = 0;
    for (int f : fallback) n_fallback += f;
    if (n_fallback > 0) {
        r.warnings.push_back(std::to_string(n_fallback) + " column(s) have decay factor below " + fmt17(kDecayMin) +
                             " for every mode; the threshold is the small-decay limit");
    }
    return r;
}

std::string map_csv(const MapResult& r) {
    std::string out = "x,y,stable,worst_mode,min_eig,margin\n";
    for (const auto& c : r.cells) {
        out += fmt17(c.x);
        out += ',';
        out += fmt17(c.y);
        out += c.stable ? ",1," : ",0,";
        out += std::to_string(c.worst_mode);
        out += ',';
        out += fmt17(c.min_eig);
        out += ',';
        out += fmt17(c.margin);
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::json config_json(const SweepConfig& c) {
    return {{"kind", to_string(c.kind)}, {"axis", to_string(c.axis)}, {"x_min", c.x_min}, {"x_max", c.x_max},
            {"y_min", c.y_min},          {"y_max", c.y_max},          {"nx", c.nx},        {"ny", c.ny},
            {"jmax", c.jmax}};
}

}  // namespace

std::string map_json(const MapResult& r) {
    nlohmann::json j;
    j["config"] = config_json(r.config);
    j["x"] = r.xs;
    j["y"] = r.ys;
    j["threshold"] = r.threshold;
    auto& cells = j["cells"] = nlohmann::json::array();
    for (const auto& c : r.cells) {
        cells.push_back({{"x", c.x},
                         {"y", c.y},
                         {"stable", c.stable},
                         {"marginal", c.marginal},
                         {"worst_mode", c.worst_mode},
                         {"min_eig", c.min_eig},
                         {"margin", c.margin}});
    }
    j["warnings"] = r.warnings;
    return j.dump(1) + "\n";
}

std::string map_svg(const MapResult& r) {
    const auto& c = r.config;
    Axes a;
    a.x_min = c.x_min;
    a.x_max = c.x_max > c.x_min ? c.x_max : c.x_min + 1.0;
    a.y_min = c.y_min;
    a.y_max = c.y_max > c.y_min ? c.y_max : c.y_min + 1.0;
    const bool bi = c.kind == LayerKind::BilayerVUV;
    a.x_label = c.axis == MapAxis::Ell ? (bi ? "L/delta_b" : "L/delta_m") : (bi ? "upsilon" : "nu");
    a.y_label = bi ? "zeta" : "mu";
    a.title = std::string(bi ? "bilayer" : "monolayer") + " stability (light = stable)";
    std::vector<bool> stable;
    stable.reserve(r.cells.size());
    for (const auto& cell : r.cells) stable.push_back(cell.stable);
    Polyline boundary;
    boundary.x = r.xs;
    boundary.y = r.threshold;
    boundary.color = "#222";
    return svg_heatmap(a, c.nx, c.ny, stable, "#d9e7f5", "#e8a39a", {boundary});
}

std::string map_report(const MapResult& r) {
    int marginal = 0, stable = 0;
    for (const auto& c : r.cells) {
        marginal += c.marginal;
        stable += c.stable;
    }
    nlohmann::json j;
    j["config"] = config_json(r.config);
    j["cells"] = r.cells.size();
    j["stable_cells"] = stable;
    j["marginal_cells"] = marginal;
    j["marginal_band"] = kMarginalBand;
    j["warnings"] = r.warnings;
    return j.dump(1) + "\n";
}

}  // namespace layerstab::cli
