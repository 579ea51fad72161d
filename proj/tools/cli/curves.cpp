#include "curves.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "format.hpp"
#include "layerstab/error.hpp"
#include "layerstab/stability.hpp"
#include "map.hpp"
#include "svg.hpp"

namespace layerstab::cli {

void CurvesConfig::validate() const {
    if (points < 1 || kmax < 1 || jmax < 1) throw ValidationError("points, kmax and jmax must be positive");
    const double ell_cap = -2.0 * std::numbers::pi / std::log(kDecayMax);
    if (!(ell_min > 0.0) || ell_min > ell_max || ell_max > ell_cap) {
        throw ValidationError("ell range must satisfy 0 < ell_min <= ell_max <= " + fmt17(ell_cap));
    }
}

double mode1_or_limit(LayerKind kind, double ell) {
    if (-2.0 * std::numbers::pi / ell < std::log(kDecayMin)) return 0.0;
    const auto m = mode1_curves(ell);
    return kind == LayerKind::BilayerVUV ? m.g1 : m.f1;
}

CurveTable compute_curves(const CurvesConfig& c) {
    c.validate();
    CurveTable t;
    t.config = c;
    for (int i = 0; i < c.points; ++i) t.ell.push_back(grid_point(c.ell_min, c.ell_max, i, c.points));
    t.family.assign(c.kmax, std::vector<double>(t.ell.size()));
    for (int k = 1; k <= c.kmax; ++k) {
        for (size_t i = 0; i < t.ell.size(); ++i) t.family[k - 1][i] = mode1_or_limit(c.kind, t.ell[i] / k);
    }
    for (double ell : t.ell) {
        const auto a = aggregated_threshold(c.kind, ell, c.jmax);
        t.aggregate.push_back(a.value);
        t.dominant_mode.push_back(a.argmax_mode);
    }
    for (int k = 1; k < c.kmax; ++k) {
        const auto& lo = t.family[k - 1];
        const auto& hi = t.family[k];
        for (size_t i = 1; i < t.ell.size(); ++i) {
            const double d0 = lo[i - 1] - hi[i - 1], d1 = lo[i] - hi[i];
            if ((d0 > 0.0 && d1 < 0.0) || (d0 < 0.0 && d1 > 0.0)) t.crossings.push_back({k, t.ell[i]});
        }
    }
    return t;
}

std::string curves_csv(const CurveTable& t) {
    const bool mono = t.config.kind == LayerKind::Monolayer;
    std::string out = "ell";
    for (int k = 1; k <= t.config.kmax; ++k) out += ",k" + std::to_string(k);
    out += ",aggregate,dominant_mode";
    if (mono) out += ",half";
    out += '\n';
    for (size_t i = 0; i < t.ell.size(); ++i) {
        out += fmt17(t.ell[i]);
        for (const auto& f : t.family) out += ',' + fmt17(f[i]);
        out += ',' + fmt17(t.aggregate[i]) + ',' + std::to_string(t.dominant_mode[i]);
        if (mono) out += ",0.5";
        out += '\n';
    }
    return out;
}

std::string curves_json(const CurveTable& t) {
    nlohmann::json j;
    j["kind"] = to_string(t.config.kind);
    j["kmax"] = t.config.kmax;
    j["jmax"] = t.config.jmax;
    j["ell"] = t.ell;
    j["family"] = t.family;
    j["aggregate"] = t.aggregate;
    j["dominant_mode"] = t.dominant_mode;
    auto& cr = j["crossings"] = nlohmann::json::array();
    for (const auto& c : t.crossings) cr.push_back({{"k", c.k}, {"ell", c.ell}});
    if (t.config.kind == LayerKind::Monolayer) j["reference_line"] = 0.5;
    return j.dump(1) + "\n";
}

std::string curves_svg(const CurveTable& t) {
    const bool mono = t.config.kind == LayerKind::Monolayer;
    Axes a;
    a.x_min = t.config.ell_min;
    a.x_max = t.config.ell_max > t.config.ell_min ? t.config.ell_max : t.config.ell_min + 1.0;
    a.y_min = 0.0;
    a.y_max = 0.7;
    a.x_label = mono ? "L/delta_m" : "L/delta_b";
    a.y_label = mono ? "f1(L/(k delta_m))" : "g1(L/(k delta_b))";
    a.title = std::string(mono ? "monolayer" : "bilayer") + " boundary curves, k = 1.." + std::to_string(t.config.kmax);
    std::vector<Polyline> lines;
    for (size_t k = 0; k < t.family.size(); ++k) {
        Polyline p;
        p.x = t.ell;
        p.y = t.family[k];
        p.color = k % 2 ? "#1f4e9c" : "#7a9cc6";
        p.width = 1.0;
        lines.push_back(std::move(p));
    }
    Polyline agg;
    agg.x = t.ell;
    agg.y = t.aggregate;
    agg.color = "#b22222";
    agg.width = 1.6;
    lines.push_back(std::move(agg));
    if (mono) {
        Polyline half;
        half.x = {a.x_min, a.x_max};
        half.y = {0.5, 0.5};
        half.color = "#444";
        half.dashed = true;
        lines.push_back(std::move(half));
    }
    return svg_lines(a, lines);
}

}  // namespace layerstab::cli
