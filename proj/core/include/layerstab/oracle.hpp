#pragma once

#include "layerstab/model.hpp"
#include "layerstab/perturb.hpp"

namespace layerstab {

struct OracleSettings {
    /// Points of the periodic trapezoidal rule in x1 (and y1). Must be even.
    int grid = 256;
    /// Also evaluate on grid/2 and report the difference.
    bool estimate_error = true;
    /// Evaluate the H^-1 term; off gives the interfacial energy only.
    bool include_nonlocal = true;
};

struct EnergyBreakdown {
    double interfacial = 0.0;
    double nonlocal = 0.0;
    double total = 0.0;
    double quadrature_error_estimate = 0.0;
};

/// Surface-tension weighted arc length of the perturbed interfaces,
/// sum d_k int_0^L sqrt(1 + eps^2 p_k'^2).
double interfacial_energy(const LayerStructure& s, const PerturbationSpectrum& spec, double eps,
                          const InterfaceCoefficients& c, const OracleSettings& settings = {});

struct NonlocalValue {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// ||u_eps - v_eps||^2 in H^-1 on the strip. Writing w = u - v as a sum of
/// jumps c_i H(x2 - h_i(x1)), the x2 and y2 integrals are done exactly with
/// the second x2-antiderivative of G, leaving a smooth periodic double
/// integral over (x1, y1) done with the trapezoidal rule. The self-interaction
/// terms carry a weak singularity on the diagonal; its leading trapezoid
/// error is removed analytically.
NonlocalValue h1m_energy(const LayerStructure& s, const PerturbationSpectrum& spec, double eps,
                         const OracleSettings& settings = {});

EnergyBreakdown energy(const LayerStructure& s, const PerturbationSpectrum& spec, double eps,
                       const InterfaceCoefficients& c, const OracleSettings& settings = {});

struct FdSettings {
    /// Step as a multiple of the layer width; the second, halved step is used
    /// for Richardson extrapolation.
    double step = 1e-2;
    bool richardson = true;
    OracleSettings oracle{.grid = 256, .estimate_error = false, .include_nonlocal = true};
};

struct FdResult {
    double value = 0.0;        ///< best estimate (Richardson-combined if enabled)
    double coarse = 0.0;       ///< estimate with the larger step alone
    double step = 0.0;         ///< larger step actually used (after gap clamping)
    double noise_floor = 0.0;  ///< rounding-level uncertainty of value
};

/// Step actually used: settings.step * width, reduced if needed so that
/// step * ||p||_inf < 0.2 width.
double safe_step(const LayerStructure& s, const PerturbationSpectrum& spec, double relative_step);

/// Central difference (F(e) - F(-e)) / (2 e). With richardson enabled the
/// O(e^2) error is eliminated using e/2; otherwise value == coarse.
FdResult fd_first_variation(const LayerStructure& s, const PerturbationSpectrum& spec,
                            const InterfaceCoefficients& c, const FdSettings& settings = {});

/// Central second difference (F(e) - 2F(0) + F(-e)) / e^2 with Richardson
/// combination (4 D(e/2) - D(e)) / 3.
FdResult fd_second_variation(const LayerStructure& s, const PerturbationSpectrum& spec,
                             const InterfaceCoefficients& c, const FdSettings& settings = {});

}  // namespace layerstab
