#pragma once

#include <optional>
#include <string>
#include <vector>

namespace layerstab {

/// Absolute slack used in every admissibility inequality.
inline constexpr double kValidationSlack = 1e-12;

/// Surface tensions of the three interface types U-0, V-0 and U-V.
struct SurfaceTensions {
    double d_u0 = 0.0;
    double d_v0 = 0.0;
    double d_uv = 0.0;

    /// True when 0 <= d_kl <= d_kj + d_jl holds for every index triple.
    bool satisfies_triangle_conditions(double slack = kValidationSlack) const;
};

/// Interface penalisation coefficients (c0, cu, cv) of the sharp-interface
/// energy. All three are non-negative and at least one is positive.
class InterfaceCoefficients {
public:
    /// Throws ValidationError when the triple is inadmissible.
    InterfaceCoefficients(double c0, double cu, double cv);

    /// Builds the coefficients from surface tensions by inverting
    /// d_u0 = c0+cu, d_v0 = c0+cv, d_uv = cu+cv.
    static InterfaceCoefficients from_tensions(const SurfaceTensions& d);

    double c0() const noexcept { return c0_; }
    double cu() const noexcept { return cu_; }
    double cv() const noexcept { return cv_; }

private:
    double c0_;
    double cu_;
    double cv_;
};

SurfaceTensions surface_tensions(const InterfaceCoefficients& c);

enum class LayerKind { Monolayer, BilayerVUV };

std::string to_string(LayerKind kind);
/// Accepts "monolayer"/"mono" and "bilayer"/"bi"/"vuv".
LayerKind parse_layer_kind(const std::string& text);

struct StripGeometry {
    double length;

    explicit StripGeometry(double L);
};

/// Width minimising energy per unit mass: cbrt(3/4 (c0+cu+2cv)) for the VUV
/// bilayer, cbrt(3/2 (c0+cu+cv)) for the monolayer.
double optimal_width(LayerKind kind, const InterfaceCoefficients& c);

/// Non-fatal remarks about a parameter choice (currently: monolayer with
/// cu != cv, which the stability theory does not cover).
std::vector<std::string> admissibility_warnings(LayerKind kind, const InterfaceCoefficients& c);

/// Straight monolayer (U on [0, w], V on [w, 2w]) or VUV bilayer
/// (U on [-w, w], V on [-2w, -w] and [w, 2w]) on the periodic strip.
class LayerStructure {
public:
    LayerStructure(LayerKind kind, StripGeometry geometry, double width, bool optimal = false);

    /// Structure with the optimal width for the given coefficients.
    static LayerStructure optimal(LayerKind kind, double L, const InterfaceCoefficients& c);

    LayerKind kind() const noexcept { return kind_; }
    double length() const noexcept { return geometry_.length; }
    double width() const noexcept { return width_; }
    bool is_optimal() const noexcept { return optimal_; }
    int interface_count() const noexcept { return kind_ == LayerKind::Monolayer ? 3 : 4; }

    /// Unperturbed x2 positions in interface order: monolayer (0, w, 2w),
    /// bilayer (w, 2w, -w, -2w) i.e. p1..p4.
    std::vector<double> interface_positions() const;

    /// Positions sorted ascending in x2: monolayer (0, w, 2w), bilayer
    /// (-2w, -w, w, 2w).
    std::vector<double> sorted_interface_positions() const;

private:
    LayerKind kind_;
    StripGeometry geometry_;
    double width_;
    bool optimal_;
};

struct ReferenceEnergyMass {
    double energy;
    double mass;
};

/// Closed-form energy and U-mass of the straight structure.
ReferenceEnergyMass reference_energy_mass(const LayerStructure& s, const InterfaceCoefficients& c);

/// Dimensionless groups. Bilayer fields are set for the bilayer and
/// monolayer fields for the monolayer; the rest stay empty.
struct DimensionlessParams {
    double ell = 0.0;  ///< L / width

    // bilayer
    std::optional<double> upsilon;
    std::optional<double> log_upsilon;
    std::optional<double> zeta;

    // monolayer
    std::optional<double> nu;
    std::optional<double> log_nu;
    std::optional<double> rho;
    std::optional<double> sigma;
    std::optional<double> mu;
};

DimensionlessParams dimensionless(const LayerStructure& s, const InterfaceCoefficients& c);

}  // namespace layerstab
