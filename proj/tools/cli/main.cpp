#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "checks.hpp"
#include "curves.hpp"
#include "format.hpp"
#include "layerstab/error.hpp"
#include "map.hpp"
#include "modes.hpp"
#include "params.hpp"
#include "spectrum.hpp"

using namespace layerstab;
using namespace layerstab::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

const std::set<std::string> kKnownKeys = {
    "kind",  "jmax",    "grid",    "out",     "format",  "threads", "axis", "x_min", "x_max", "y_min",
    "y_max", "ell_min", "ell_max", "points",  "kmax",    "d_u0",    "d_v0", "d_uv",  "L",     "epsilon",
    "samples", "J",     "input",   "oracle",  "only",    "seed",    "skew_dv0"};

struct Common {
    std::string kind = "bilayer";
    int jmax = 100;
    std::string grid;
    std::string out;
    std::string format = "csv";
    std::string params;
    int threads = 0;
};

// Fills `value` from the params file unless the flag was given explicitly.
template <class T>
void from_file(const ParamFile& pf, CLI::Option* opt, const std::string& key, T& value) {
    if (opt && opt->count() > 0) return;
    if constexpr (std::is_same_v<T, std::string>) {
        if (auto v = pf.get(key)) value = *v;
    } else if constexpr (std::is_same_v<T, int>) {
        if (auto v = pf.integer(key)) value = *v;
    } else if constexpr (std::is_same_v<T, bool>) {
        if (auto v = pf.get(key)) value = (*v == "1" || *v == "true" || *v == "yes");
    } else {
        if (auto v = pf.number(key)) value = *v;
    }
}

std::pair<int, int> parse_grid(const std::string& g, std::pair<int, int> fallback) {
    if (g.empty()) return fallback;
    const auto x = g.find('x');
    try {
        if (x == std::string::npos) {
            const int n = std::stoi(g);
            return {n, n};
        }
        return {std::stoi(g.substr(0, x)), std::stoi(g.substr(x + 1))};
    } catch (const std::exception&) {
        throw ValidationError("grid must look like N or NXxNY, got '" + g + "'");
    }
}

std::pair<double, double> parse_range(const std::string& r) {
    const auto c = r.find(':');
    if (c == std::string::npos) throw ValidationError("range must look like min:max, got '" + r + "'");
    try {
        return {std::stod(r.substr(0, c)), std::stod(r.substr(c + 1))};
    } catch (const std::exception&) {
        throw ValidationError("range must look like min:max, got '" + r + "'");
    }
}

int default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string sidecar_path(const std::string& out) {
    const auto dot = out.find_last_of('.');
    const auto slash = out.find_last_of('/');
    const std::string stem = (dot != std::string::npos && (slash == std::string::npos || dot > slash)) ? out.substr(0, dot) : out;
    return stem + ".report.json";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"layerstab: linear stability of mono- and bilayers on a periodic strip"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "layerstab 0.1.0");

    Common cm;
    auto add_common = [&](CLI::App* sub, bool with_grid) {
        std::map<std::string, CLI::Option*> o;
        o["kind"] = sub->add_option("--kind", cm.kind, "monolayer | bilayer")->capture_default_str();
        o["jmax"] = sub->add_option("--jmax", cm.jmax, "Fourier modes in aggregated thresholds")->capture_default_str();
        if (with_grid) o["grid"] = sub->add_option("--grid", cm.grid, "grid size N or NXxNY");
        o["out"] = sub->add_option("--out", cm.out, "output file (default stdout)");
        o["format"] = sub->add_option("--format", cm.format, "csv | json | svg")->capture_default_str();
        sub->add_option("--params", cm.params, "key=value parameter file; flags override it");
        o["threads"] = sub->add_option("--threads", cm.threads, "worker threads (default: hardware)");
        return o;
    };

    // map
    auto* map_cmd = app.add_subcommand("map", "stability verdict over a parameter grid");
    auto map_opts = add_common(map_cmd, true);
    std::string axis = "decay", x_range, y_range;
    map_opts["axis"] = map_cmd->add_option("--axis", axis, "horizontal axis: decay (upsilon/nu) or ell")->capture_default_str();
    auto* xr_opt = map_cmd->add_option("--x-range", x_range, "min:max of the horizontal axis");
    auto* yr_opt = map_cmd->add_option("--y-range", y_range, "min:max of zeta (bilayer) or mu (monolayer)");

    // curves
    auto* curves_cmd = app.add_subcommand("curves", "boundary curves f1(ell/k), g1(ell/k) and their aggregate");
    auto curves_opts = add_common(curves_cmd, true);
    std::string ell_range;
    int kmax = 20;
    auto* er_opt = curves_cmd->add_option("--ell-range", ell_range, "min:max of ell = L/delta");
    curves_opts["kmax"] = curves_cmd->add_option("--kmax", kmax, "number of k-family curves")->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "oracle-vs-closed-form verification campaign");
    std::string only, verify_out, verify_params;
    double skew = 0.0;
    bool all = false;
    long long seed = 20240611;
    verify_cmd->add_option("--only", only, "comma-separated groups or check ids");
    verify_cmd->add_flag("--all", all, "run every acceptance check, not only the oracle campaign");
    verify_cmd->add_option("--skew-dv0", skew, "relative error injected into d_v0 in the closed forms");
    verify_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--out", verify_out, "JSON report file (default stdout)");
    verify_cmd->add_option("--params", verify_params, "key=value parameter file");

    // modes
    auto* modes_cmd = app.add_subcommand("modes", "interface profiles of the first-order mode shapes");
    auto modes_opts = add_common(modes_cmd, false);
    double d_u0 = NAN, d_v0 = NAN, d_uv = NAN, L = NAN, eps = NAN;
    int samples = 201;
    modes_opts["d_u0"] = modes_cmd->add_option("--d-u0", d_u0, "U-0 surface tension");
    modes_opts["d_v0"] = modes_cmd->add_option("--d-v0", d_v0, "V-0 surface tension");
    modes_opts["d_uv"] = modes_cmd->add_option("--d-uv", d_uv, "U-V surface tension");
    modes_opts["L"] = modes_cmd->add_option("--L", L, "strip period");
    modes_opts["epsilon"] = modes_cmd->add_option("--epsilon", eps, "perturbation amplitude");
    modes_opts["samples"] = modes_cmd->add_option("--samples", samples, "points per profile")->capture_default_str();

    // spectrum
    auto* spec_cmd = app.add_subcommand("spectrum", "per-mode eigenvalues of the second variation");
    auto spec_opts = add_common(spec_cmd, false);
    double s_u0 = 1.0, s_v0 = 0.3, s_uv = 0.7, s_L = 5.0;
    int J = 10;
    std::string input;
    bool oracle = false;
    spec_opts["d_u0"] = spec_cmd->add_option("--d-u0", s_u0, "U-0 surface tension")->capture_default_str();
    spec_opts["d_v0"] = spec_cmd->add_option("--d-v0", s_v0, "V-0 surface tension")->capture_default_str();
    spec_opts["d_uv"] = spec_cmd->add_option("--d-uv", s_uv, "U-V surface tension")->capture_default_str();
    spec_opts["L"] = spec_cmd->add_option("--L", s_L, "strip period")->capture_default_str();
    spec_opts["J"] = spec_cmd->add_option("--J", J, "highest mode")->capture_default_str();
    spec_opts["input"] = spec_cmd->add_option("--input", input, "spectrum JSON to evaluate");
    spec_opts["oracle"] = spec_cmd->add_flag("--oracle", oracle, "also evaluate the input with the energy oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        auto apply_common = [&](const ParamFile& pf, std::map<std::string, CLI::Option*>& o) {
            for (const auto& [k, v] : pf.values()) {
                if (!kKnownKeys.count(k)) throw ValidationError("unknown key '" + k + "' in params file");
            }
            from_file(pf, o["kind"], "kind", cm.kind);
            from_file(pf, o["jmax"], "jmax", cm.jmax);
            from_file(pf, o.count("grid") ? o["grid"] : nullptr, "grid", cm.grid);
            from_file(pf, o["out"], "out", cm.out);
            from_file(pf, o["format"], "format", cm.format);
            from_file(pf, o["threads"], "threads", cm.threads);
        };
        const ParamFile pf = cm.params.empty() ? ParamFile{} : ParamFile::load(cm.params);

        if (map_cmd->parsed()) {
            apply_common(pf, map_opts);
            from_file(pf, map_opts["axis"], "axis", axis);
            SweepConfig c;
            c.kind = parse_layer_kind(cm.kind);
            c.axis = parse_map_axis(axis);
            c.jmax = cm.jmax;
            c.threads = cm.threads > 0 ? cm.threads : default_threads();
            if (c.axis == MapAxis::Ell) {
                c.x_min = 0.5;
                c.x_max = 60.0;
            }
            if (c.kind == LayerKind::Monolayer) c.y_max = 0.5;
            std::tie(c.nx, c.ny) = parse_grid(cm.grid, {200, 200});
            if (xr_opt->count()) std::tie(c.x_min, c.x_max) = parse_range(x_range);
            if (yr_opt->count()) std::tie(c.y_min, c.y_max) = parse_range(y_range);
            from_file(pf, xr_opt, "x_min", c.x_min);
            from_file(pf, xr_opt, "x_max", c.x_max);
            from_file(pf, yr_opt, "y_min", c.y_min);
            from_file(pf, yr_opt, "y_max", c.y_max);
            const auto fmt = parse_format(cm.format);
            const auto r = compute_map(c);
            const std::string text = fmt == OutputFormat::Csv ? map_csv(r) : fmt == OutputFormat::Json ? map_json(r) : map_svg(r);
            write_output(cm.out, text);
            for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
            if (!r.warnings.empty() && !cm.out.empty() && cm.out != "-") write_output(sidecar_path(cm.out), map_report(r));
            return kExitOk;
        }

        if (curves_cmd->parsed()) {
            apply_common(pf, curves_opts);
            from_file(pf, curves_opts["kmax"], "kmax", kmax);
            CurvesConfig c;
            c.kind = parse_layer_kind(cm.kind);
            c.jmax = cm.jmax;
            c.kmax = kmax;
            c.points = parse_grid(cm.grid, {600, 600}).first;
            if (er_opt->count()) std::tie(c.ell_min, c.ell_max) = parse_range(ell_range);
            from_file(pf, er_opt, "ell_min", c.ell_min);
            from_file(pf, er_opt, "ell_max", c.ell_max);
            from_file(pf, nullptr, "points", c.points);
            const auto fmt = parse_format(cm.format);
            const auto t = compute_curves(c);
            write_output(cm.out, fmt == OutputFormat::Csv ? curves_csv(t) : fmt == OutputFormat::Json ? curves_json(t) : curves_svg(t));
            return kExitOk;
        }

        if (modes_cmd->parsed()) {
            apply_common(pf, modes_opts);
            auto c = ModesConfig::defaults(parse_layer_kind(cm.kind));
            if (!std::isnan(d_u0)) c.tensions.d_u0 = d_u0;
            if (!std::isnan(d_v0)) c.tensions.d_v0 = d_v0;
            if (!std::isnan(d_uv)) c.tensions.d_uv = d_uv;
            if (!std::isnan(L)) c.L = L;
            if (!std::isnan(eps)) c.epsilon = eps;
            c.samples = samples;
            from_file(pf, modes_opts["d_u0"], "d_u0", c.tensions.d_u0);
            from_file(pf, modes_opts["d_v0"], "d_v0", c.tensions.d_v0);
            from_file(pf, modes_opts["d_uv"], "d_uv", c.tensions.d_uv);
            from_file(pf, modes_opts["L"], "L", c.L);
            from_file(pf, modes_opts["epsilon"], "epsilon", c.epsilon);
            from_file(pf, modes_opts["samples"], "samples", c.samples);
            const auto fmt = parse_format(cm.format);
            const auto m = compute_modes(c);
            write_output(cm.out, fmt == OutputFormat::Csv ? modes_csv(m) : fmt == OutputFormat::Json ? modes_json(m) : modes_svg(m));
            return kExitOk;
        }

        if (spec_cmd->parsed()) {
            apply_common(pf, spec_opts);
            SpectrumConfig c;
            from_file(pf, spec_opts["d_u0"], "d_u0", s_u0);
            from_file(pf, spec_opts["d_v0"], "d_v0", s_v0);
            from_file(pf, spec_opts["d_uv"], "d_uv", s_uv);
            from_file(pf, spec_opts["L"], "L", s_L);
            from_file(pf, spec_opts["J"], "J", J);
            from_file(pf, spec_opts["input"], "input", input);
            from_file(pf, spec_opts["oracle"], "oracle", oracle);
            c.kind = parse_layer_kind(cm.kind);
            c.tensions = {s_u0, s_v0, s_uv};
            c.L = s_L;
            c.J = J;
            c.oracle = oracle;
            if (!input.empty()) c.input = spectrum_from_json(slurp(input));
            const auto fmt = parse_format(cm.format);
            if (fmt == OutputFormat::Svg) throw ValidationError("spectrum supports csv and json output");
            const auto r = compute_spectrum(c);
            write_output(cm.out, fmt == OutputFormat::Csv ? spectrum_csv(r) : spectrum_json(r));
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            if (!verify_params.empty()) {
                const auto vp = ParamFile::load(verify_params);
                for (const auto& [k, v] : vp.values()) {
                    if (!kKnownKeys.count(k)) throw ValidationError("unknown key '" + k + "' in params file");
                }
                if (only.empty()) from_file(vp, nullptr, "only", only);
                if (skew == 0.0) from_file(vp, nullptr, "skew_dv0", skew);
                if (verify_out.empty()) from_file(vp, nullptr, "out", verify_out);
            }
            std::set<std::string> wanted;
            std::stringstream ss(only);
            for (std::string t; std::getline(ss, t, ',');) {
                if (!t.empty()) wanted.insert(t);
            }
            for (const auto& w : wanted) {
                bool known = false;
                for (const auto& c : all_checks()) known = known || w == c.group || w == c.id;
                if (!known) throw ValidationError("unknown check or group '" + w + "'");
            }
            CheckOptions opts;
            opts.dv0_skew = skew;
            opts.seed = static_cast<std::uint64_t>(seed);
            nlohmann::json report;
            report["checks"] = nlohmann::json::array();
            bool ok = true;
            for (const auto& spec : all_checks()) {
                const bool selected = wanted.empty() ? (all || spec.in_verify) : (wanted.count(spec.group) || wanted.count(spec.id));
                if (!selected) continue;
                const auto r = run_check(spec, opts);
                ok = ok && r.passed;
                std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.detail << '\n';
                report["checks"].push_back({{"criterion", r.criterion},
                                            {"id", r.id},
                                            {"group", r.group},
                                            {"passed", r.passed},
                                            {"achieved", r.achieved},
                                            {"tolerance", r.tolerance},
                                            {"detail", r.detail},
                                            {"seconds", r.seconds}});
            }
            report["passed"] = ok;
            write_output(verify_out, report.dump(1) + "\n");
            return ok ? kExitOk : kExitVerifyFailed;
        }
    } catch (const ValidationError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}
