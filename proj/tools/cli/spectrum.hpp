#pragma once

#include <optional>
#include <string>
#include <vector>

#include "layerstab/model.hpp"
#include "layerstab/perturb.hpp"

namespace layerstab::cli {

/// JSON form of a spectrum:
///   {"L": 5, "J": 3, "a": [[a_10, .., a_1J], ...], "b": [[0, b_11, .., b_1J], ...]}
/// One inner array per interface; b[i][0] is ignored.
std::string spectrum_to_json(const PerturbationSpectrum& s);
PerturbationSpectrum spectrum_from_json(const std::string& text);

struct SpectrumConfig {
    LayerKind kind = LayerKind::BilayerVUV;
    SurfaceTensions tensions{1.0, 0.3, 0.7};
    double L = 5.0;
    int J = 10;
    /// Optional perturbation to evaluate mode by mode.
    std::optional<PerturbationSpectrum> input;
    /// Also evaluate the input with the energy oracle (finite differences).
    bool oracle = false;
};

struct ModeRow {
    int j = 0;
    std::vector<double> eigenvalues;  ///< ascending
    std::optional<double> form_value; ///< closed-form B_j / M_j of the input
};

struct SpectrumReport {
    SpectrumConfig config;
    double width = 0.0;
    std::vector<ModeRow> modes;
    std::optional<double> second_variation;
    std::optional<double> first_variation;
    std::optional<double> oracle_second_variation;
};

SpectrumReport compute_spectrum(const SpectrumConfig& config);

std::string spectrum_csv(const SpectrumReport& r);
std::string spectrum_json(const SpectrumReport& r);

}  // namespace layerstab::cli
