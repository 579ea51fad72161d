#include "modes.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "format.hpp"
#include "layerstab/error.hpp"
#include "layerstab/perturb.hpp"
#include "map.hpp"
#include "svg.hpp"

namespace layerstab::cli {

ModesConfig ModesConfig::defaults(LayerKind kind) {
    const auto d = demo_parameters(kind);
    ModesConfig c;
    c.kind = kind;
    c.tensions = d.tensions;
    c.L = d.L;
    c.epsilon = d.epsilon;
    return c;
}

ModeProfiles compute_modes(const ModesConfig& c) {
    if (c.samples < 2) throw ValidationError("samples must be at least 2");
    if (c.epsilon < 0.0) throw ValidationError("epsilon must be non-negative");
    const auto coeff = InterfaceCoefficients::from_tensions(c.tensions);
    const auto s = LayerStructure::optimal(c.kind, c.L, coeff);
    ModeProfiles out;
    out.config = c;
    out.width = s.width();
    out.params = dimensionless(s, coeff);
    const auto set = mode_shapes(c.kind, out.params);
    const int n = s.interface_count();
    for (const auto& shape : set.shapes) {
        PerturbationSpectrum spec(n, 1, c.L);
        for (int i = 0; i < n; ++i) spec.set_a(i, 1, shape.vector[i] * std::sqrt(c.L / 2.0));
        const auto curves = perturbed_interfaces(s, spec, c.epsilon);
        ModeProfile p;
        p.shape = shape;
        p.heights.assign(n, {});
        for (int k = 0; k < c.samples; ++k) {
            const double x = grid_point(0.0, c.L, k, c.samples);
            p.x.push_back(x);
            for (int i = 0; i < n; ++i) p.heights[i].push_back(curves.position(i, x));
        }
        out.profiles.push_back(std::move(p));
    }
    return out;
}

std::string modes_csv(const ModeProfiles& m) {
    const int n = m.profiles.empty() ? 0 : static_cast<int>(m.profiles[0].heights.size());
    std::string out = "shape,x";
    for (int i = 1; i <= n; ++i) out += ",h" + std::to_string(i);
    out += '\n';
    for (const auto& p : m.profiles) {
        for (size_t k = 0; k < p.x.size(); ++k) {
            out += p.shape.name + ',' + fmt17(p.x[k]);
            for (const auto& h : p.heights) out += ',' + fmt17(h[k]);
            out += '\n';
        }
    }
    return out;
}

std::string modes_json(const ModeProfiles& m) {
    nlohmann::json j;
    const auto& c = m.config;
    j["kind"] = to_string(c.kind);
    j["tensions"] = {{"d_u0", c.tensions.d_u0}, {"d_v0", c.tensions.d_v0}, {"d_uv", c.tensions.d_uv}};
    j["L"] = c.L;
    j["epsilon"] = c.epsilon;
    j["width"] = m.width;
    j["ell"] = m.params.ell;
    auto& shapes = j["shapes"] = nlohmann::json::array();
    for (const auto& p : m.profiles) {
        shapes.push_back({{"name", p.shape.name},
                          {"vector", p.shape.vector},
                          {"eigenvalue", p.shape.eigenvalue},
                          {"can_be_negative", p.shape.can_be_negative},
                          {"x", p.x},
                          {"heights", p.heights}});
    }
    return j.dump(1) + "\n";
}

std::string modes_svg(const ModeProfiles& m) {
    std::vector<Axes> axes;
    std::vector<std::vector<Polyline>> lines;
    double lo = 0.0, hi = 0.0;
    for (const auto& p : m.profiles) {
        for (const auto& h : p.heights) {
            lo = std::min(lo, *std::min_element(h.begin(), h.end()));
            hi = std::max(hi, *std::max_element(h.begin(), h.end()));
        }
    }
    const double pad = 0.1 * (hi - lo + 1e-12);
    for (const auto& p : m.profiles) {
        Axes a;
        a.x_min = 0.0;
        a.x_max = m.config.L;
        a.y_min = lo - pad;
        a.y_max = hi + pad;
        a.x_label = "x1";
        a.y_label = "x2";
        a.title = p.shape.name + " (eigenvalue " + fmt17(p.shape.eigenvalue).substr(0, 10) + ")";
        axes.push_back(a);
        std::vector<Polyline> ls;
        for (const auto& h : p.heights) {
            Polyline l;
            l.x = p.x;
            l.y = h;
            ls.push_back(std::move(l));
        }
        lines.push_back(std::move(ls));
    }
    return svg_panels(axes, lines);
}

}  // namespace layerstab::cli
