#include "layerstab/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "layerstab/error.hpp"

namespace layerstab {

namespace {

double clamp_tiny_negative(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw ValidationError(std::string("coefficient ") + name + " is not finite");
    }
    if (x < -kValidationSlack) {
        std::ostringstream os;
        os << "coefficient " << name << " = " << x << " is negative";
        throw ValidationError(os.str());
    }
    return std::max(x, 0.0);
}

}  // namespace

bool SurfaceTensions::satisfies_triangle_conditions(double slack) const {
    const double d[3] = {d_u0, d_v0, d_uv};
    for (int k = 0; k < 3; ++k) {
        if (!(d[k] >= -slack)) return false;
        if (d[k] > d[(k + 1) % 3] + d[(k + 2) % 3] + slack) return false;
    }
    return true;
}

InterfaceCoefficients::InterfaceCoefficients(double c0, double cu, double cv)
    : c0_(clamp_tiny_negative(c0, "c0")),
      cu_(clamp_tiny_negative(cu, "cu")),
      cv_(clamp_tiny_negative(cv, "cv")) {
    if (c0_ + cu_ + cv_ <= kValidationSlack) {
        throw ValidationError("at least one interface coefficient must be positive");
    }
}

InterfaceCoefficients InterfaceCoefficients::from_tensions(const SurfaceTensions& d) {
    if (!d.satisfies_triangle_conditions()) {
        throw ValidationError("surface tensions violate 0 <= d_kl <= d_kj + d_jl");
    }
    return InterfaceCoefficients(0.5 * (d.d_u0 + d.d_v0 - d.d_uv),
                                 0.5 * (d.d_u0 + d.d_uv - d.d_v0),
                                 0.5 * (d.d_v0 + d.d_uv - d.d_u0));
}

SurfaceTensions surface_tensions(const InterfaceCoefficients& c) {
    return {c.c0() + c.cu(), c.c0() + c.cv(), c.cu() + c.cv()};
}

std::string to_string(LayerKind kind) {
    return kind == LayerKind::Monolayer ? "monolayer" : "bilayer";
}

LayerKind parse_layer_kind(const std::string& text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (t == "monolayer" || t == "mono") return LayerKind::Monolayer;
    if (t == "bilayer" || t == "bi" || t == "vuv") return LayerKind::BilayerVUV;
    throw ValidationError("unknown layer kind '" + text + "'");
}

StripGeometry::StripGeometry(double L) : length(L) {
    if (!(L > 0.0) || !std::isfinite(L)) throw ValidationError("strip length must be positive");
}

double optimal_width(LayerKind kind, const InterfaceCoefficients& c) {
    if (kind == LayerKind::BilayerVUV) {
        return std::cbrt(0.75 * (c.c0() + c.cu() + 2.0 * c.cv()));
    }
    return std::cbrt(1.5 * (c.c0() + c.cu() + c.cv()));
}

std::vector<std::string> admissibility_warnings(LayerKind kind, const InterfaceCoefficients& c) {
    std::vector<std::string> out;
    if (kind == LayerKind::Monolayer && std::abs(c.cu() - c.cv()) > kValidationSlack) {
        out.emplace_back(
            "monolayer with cu != cv: second variation is available but the stability "
            "criterion assumes equal U-0 and V-0 tensions");
    }
    return out;
}

LayerStructure::LayerStructure(LayerKind kind, StripGeometry geometry, double width, bool optimal)
    : kind_(kind), geometry_(geometry), width_(width), optimal_(optimal) {
    if (!(width > 0.0) || !std::isfinite(width)) throw ValidationError("layer width must be positive");
}

LayerStructure LayerStructure::optimal(LayerKind kind, double L, const InterfaceCoefficients& c) {
    return LayerStructure(kind, StripGeometry(L), optimal_width(kind, c), true);
}

std::vector<double> LayerStructure::interface_positions() const {
    const double w = width_;
    if (kind_ == LayerKind::Monolayer) return {0.0, w, 2.0 * w};
    return {w, 2.0 * w, -w, -2.0 * w};
}

std::vector<double> LayerStructure::sorted_interface_positions() const {
    auto p = interface_positions();
    std::sort(p.begin(), p.end());
    return p;
}

ReferenceEnergyMass reference_energy_mass(const LayerStructure& s, const InterfaceCoefficients& c) {
    const double L = s.length();
    const double w = s.width();
    if (s.kind() == LayerKind::BilayerVUV) {
        return {2.0 * L * (c.c0() + c.cu() + 2.0 * c.cv()) + 4.0 / 3.0 * L * w * w * w, 2.0 * L * w};
    }
    return {2.0 * L * (c.c0() + c.cu() + c.cv()) + 2.0 / 3.0 * L * w * w * w, L * w};
}

DimensionlessParams dimensionless(const LayerStructure& s, const InterfaceCoefficients& c) {
    const auto d = surface_tensions(c);
    DimensionlessParams p;
    p.ell = s.length() / s.width();
    const double log_decay = -2.0 * std::numbers::pi * s.width() / s.length();
    if (s.kind() == LayerKind::BilayerVUV) {
        p.log_upsilon = log_decay;
        p.upsilon = std::exp(log_decay);
        p.zeta = d.d_uv / (d.d_uv + d.d_v0);
    } else {
        const double total = d.d_u0 + d.d_uv + d.d_v0;
        p.log_nu = log_decay;
        p.nu = std::exp(log_decay);
        p.rho = d.d_u0 / total;
        p.sigma = d.d_v0 / total;
        p.mu = d.d_uv / total;
    }
    return p;
}

}  // namespace layerstab
