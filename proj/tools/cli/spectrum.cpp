#include "spectrum.hpp"

#include <json.hpp>

#include "format.hpp"
#include "layerstab/eigen.hpp"
#include "layerstab/error.hpp"
#include "layerstab/oracle.hpp"
#include "layerstab/secondvar.hpp"

namespace layerstab::cli {

std::string spectrum_to_json(const PerturbationSpectrum& s) {
    nlohmann::json j;
    j["L"] = s.length();
    j["J"] = s.order();
    auto& a = j["a"] = nlohmann::json::array();
    auto& b = j["b"] = nlohmann::json::array();
    for (int i = 0; i < s.interfaces(); ++i) {
        std::vector<double> ai, bi{0.0};
        for (int m = 0; m <= s.order(); ++m) ai.push_back(s.a(i, m));
        for (int m = 1; m <= s.order(); ++m) bi.push_back(s.b(i, m));
        a.push_back(ai);
        b.push_back(bi);
    }
    return j.dump(1) + "\n";
}

PerturbationSpectrum spectrum_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("spectrum JSON: ") + e.what());
    }
    try {
        const double L = j.at("L").get<double>();
        const int J = j.at("J").get<int>();
        const auto a = j.at("a").get<std::vector<std::vector<double>>>();
        std::vector<std::vector<double>> b;
        if (j.contains("b")) b = j.at("b").get<std::vector<std::vector<double>>>();
        const int n = static_cast<int>(a.size());
        if (!b.empty() && static_cast<int>(b.size()) != n) throw ValidationError("spectrum JSON: a and b differ in length");
        PerturbationSpectrum s(n, J, L);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(a[i].size()) != J + 1) throw ValidationError("spectrum JSON: a rows need J+1 entries");
            for (int m = 0; m <= J; ++m) s.set_a(i, m, a[i][m]);
            if (!b.empty()) {
                if (static_cast<int>(b[i].size()) != J + 1) {
                    throw ValidationError("spectrum JSON: b rows need J+1 entries");
                }
                for (int m = 1; m <= J; ++m) s.set_b(i, m, b[i][m]);
            }
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("spectrum JSON: ") + e.what());
    }
}

SpectrumReport compute_spectrum(const SpectrumConfig& c) {
    if (c.J < 0) throw ValidationError("J must be non-negative");
    const auto coeff = InterfaceCoefficients::from_tensions(c.tensions);
    const auto s = LayerStructure::optimal(c.kind, c.L, coeff);
    const auto& d = c.tensions;
    SpectrumReport r;
    r.config = c;
    r.width = s.width();
    const bool bi = c.kind == LayerKind::BilayerVUV;
    if (c.input) {
        if (c.input->interfaces() != s.interface_count()) {
            throw ValidationError("input spectrum has the wrong number of interfaces for this layer kind");
        }
        if (std::abs(c.input->length() - c.L) > 1e-12 * c.L) {
            throw ValidationError("input spectrum length differs from L");
        }
    }
    const int J = c.input ? std::max(c.J, c.input->order()) : c.J;
    for (int j = 0; j <= J; ++j) {
        const ModeForm f = bi ? (j == 0 ? b0_matrix(s.width()) : bj_matrix(j, d.d_uv, d.d_v0, c.L))
                              : mj_matrix(j, d.d_u0, d.d_uv, d.d_v0, c.L);
        ModeRow row;
        row.j = j;
        row.eigenvalues = symmetric_eigen(f.matrix).eigenvalues;
        if (c.input && j <= c.input->order()) {
            std::vector<double> a, b;
            for (int i = 0; i < s.interface_count(); ++i) {
                a.push_back(c.input->a(i, j));
                b.push_back(j > 0 ? c.input->b(i, j) : 0.0);
            }
            row.form_value = f.matrix.quadratic(a) + (j > 0 ? f.matrix.quadratic(b) : 0.0);
        }
        r.modes.push_back(std::move(row));
    }
    if (c.input) {
        r.second_variation = second_variation_closed_form(s, *c.input, coeff);
        r.first_variation = first_variation_closed_form(s, *c.input);
        if (c.oracle) r.oracle_second_variation = fd_second_variation(s, *c.input, coeff).value;
    }
    return r;
}

std::string spectrum_csv(const SpectrumReport& r) {
    const size_t n = r.modes.empty() ? 0 : r.modes[0].eigenvalues.size();
    std::string out = "j";
    for (size_t k = 1; k <= n; ++k) out += ",lambda" + std::to_string(k);
    out += ",form_value\n";
    for (const auto& m : r.modes) {
        out += std::to_string(m.j);
        for (double e : m.eigenvalues) out += ',' + fmt17(e);
        out += ',';
        if (m.form_value) out += fmt17(*m.form_value);
        out += '\n';
    }
    return out;
}

std::string spectrum_json(const SpectrumReport& r) {
    nlohmann::json j;
    const auto& c = r.config;
    j["kind"] = to_string(c.kind);
    j["tensions"] = {{"d_u0", c.tensions.d_u0}, {"d_v0", c.tensions.d_v0}, {"d_uv", c.tensions.d_uv}};
    j["L"] = c.L;
    j["width"] = r.width;
    auto& modes = j["modes"] = nlohmann::json::array();
    for (const auto& m : r.modes) {
        nlohmann::json row{{"j", m.j}, {"eigenvalues", m.eigenvalues}};
        if (m.form_value) row["form_value"] = *m.form_value;
        modes.push_back(row);
    }
    if (r.second_variation) j["second_variation"] = *r.second_variation;
    if (r.first_variation) j["first_variation"] = *r.first_variation;
    if (r.oracle_second_variation) j["oracle_second_variation"] = *r.oracle_second_variation;
    return j.dump(1) + "\n";
}

}  // namespace layerstab::cli
