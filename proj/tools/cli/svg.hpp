#pragma once

#include <string>
#include <vector>

namespace layerstab::cli {

struct Polyline {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f4e9c";
    double width = 1.2;
    bool dashed = false;
    std::string label;
};

struct Axes {
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    std::string x_label;
    std::string y_label;
    std::string title;
};

/// Two-tone heatmap of a row-major nx*ny grid (cell (i, k) at x index i,
/// y index k). true cells are drawn in `on`, false in `off`.
std::string svg_heatmap(const Axes& axes, int nx, int ny, const std::vector<bool>& cells,
                        const std::string& on = "#d9e7f5", const std::string& off = "#e8a39a",
                        const std::vector<Polyline>& overlay = {});

std::string svg_lines(const Axes& axes, const std::vector<Polyline>& lines);

/// Several line plots stacked vertically in one document.
std::string svg_panels(const std::vector<Axes>& axes, const std::vector<std::vector<Polyline>>& lines);

}  // namespace layerstab::cli
