#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "curves.hpp"
#include "format.hpp"
#include "layerstab/layerstab.hpp"
#include "map.hpp"

namespace layerstab::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fix(double v, int digits = 6) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. int G (-Laplace phi) = phi(0, 0) for three smooth periodic test functions.
CheckResult green_identity(const CheckOptions&) {
    const auto t0 = std::chrono::steady_clock::now();
    const double L = 2.0;
    const std::vector<TestFunction> fs = {
        periodic_gaussian_bump(L, 0.0, 0.0, 1.5, 0.2),
        periodic_gaussian_bump(L, 0.2, -0.1, 0.8, 0.35),
        combine(periodic_gaussian_bump(L, -0.15, 0.1, 2.5, 0.12), 1.0, periodic_gaussian_bump(L, 0.3, -0.25, 1.0, 0.25),
                -0.6),
    };
    CheckResult r;
    r.tolerance = 1e-4;
    std::ostringstream d;
    for (size_t k = 0; k < fs.size(); ++k) {
        const auto res = check_delta_identity(L, fs[k]);
        r.achieved = std::max(r.achieved, res.residual);
        d << "phi" << k + 1 << " residual " << sci(res.residual) << "; ";
    }
    const double secs = elapsed(t0);
    d << "runtime " << fix(secs, 2) << " s (limit 30 s)";
    r.detail = d.str();
    r.passed = r.achieved <= r.tolerance && secs <= 30.0;
    return r;
}

// 2. Truncated series vs closed form, and int_0^L G dx1 = -|x2|/2.
CheckResult green_series_check(const CheckOptions& o) {
    const double L = 1.7;
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> ux(0.0, L), uz(0.05 * L, 2.0 * L);
    std::bernoulli_distribution sign(0.5);
    double worst = 0.0;
    int max_terms = 0;
    for (int k = 0; k < 1000; ++k) {
        const double x1 = ux(rng);
        const double x2 = sign(rng) ? uz(rng) : -uz(rng);
        const auto s = green_series_auto(L, x1, x2, 1e-12);
        worst = std::max(worst, std::abs(s.value - green_closed(L, x1, x2)));
        max_terms = std::max(max_terms, s.terms);
    }
    double line = 0.0;
    for (double x2 : {0.05 * L, 0.3 * L, -1.1 * L}) {
        const int N = 2048;
        double sum = 0.0;
        for (int k = 0; k < N; ++k) sum += green_closed(L, L * k / N, x2);
        sum *= L / N;
        const double exact = -std::abs(x2) / 2.0;
        line = std::max(line, std::abs(sum - exact) / std::abs(exact));
    }
    CheckResult r;
    r.achieved = worst;
    r.tolerance = 1e-10;
    r.passed = worst <= 1e-10 && line <= 1e-8;
    r.detail = "max |series - closed| " + sci(worst) + " over 1000 points (up to " + std::to_string(max_terms) +
               " terms); line integral rel. error " + sci(line) + " (limit 1e-8)";
    return r;
}

// 3. Oracle energy of the straight optimal structures.
CheckResult reference_energies(const CheckOptions&) {
    CheckResult r;
    r.tolerance = 1e-6;
    std::ostringstream d;
    const std::vector<InterfaceCoefficients> cs = {{0.3, 0.4, 0.2}, {1.0, 0.1, 0.6}};
    for (auto kind : {LayerKind::BilayerVUV, LayerKind::Monolayer}) {
        for (const auto& c : cs) {
            for (double L : {1.5, 4.0}) {
                const auto s = LayerStructure::optimal(kind, L, c);
                const PerturbationSpectrum zero(s.interface_count(), 2, L);
                const double e = energy(s, zero, 0.0, c).total;
                const double ref = reference_energy_mass(s, c).energy;
                r.achieved = std::max(r.achieved, std::abs(e - ref) / ref);
            }
        }
    }
    d << "max relative error " << sci(r.achieved) << " over 8 structures";
    r.detail = d.str();
    r.passed = r.achieved <= r.tolerance;
    return r;
}

PerturbationSpectrum random_spectrum(std::mt19937_64& rng, int n, int J, double L, PerturbationClass cls) {
    std::normal_distribution<double> g(0.0, 1.0);
    PerturbationSpectrum s(n, J, L);
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j <= J; ++j) {
            s.set_a(i, j, g(rng) / j);
            s.set_b(i, j, g(rng) / j);
        }
    }
    const double m0 = g(rng), m1 = g(rng);
    switch (cls) {
        case PerturbationClass::PbM:
            s.set_a(0, 0, m0);
            s.set_a(2, 0, -m0);
            s.set_a(1, 0, m1);
            s.set_a(3, 0, -m1);
            break;
        case PerturbationClass::PmM:
            for (int i = 0; i < n; ++i) s.set_a(i, 0, m0);
            break;
        default:
            for (int i = 0; i < n; ++i) s.set_a(i, 0, g(rng));
    }
    return s.scaled(1.0 / s.sup_norm());
}

// 4. Stationarity of the optimal structures under mass-preserving spectra,
// and the first variation for a spectrum that changes the mass.
CheckResult stationarity(const CheckOptions& o) {
    std::mt19937_64 rng(o.seed + 4);
    const InterfaceCoefficients c(0.3, 0.4, 0.2);
    const double L = 3.0;
    double worst_order = 1e9;
    std::ostringstream d;
    for (auto kind : {LayerKind::BilayerVUV, LayerKind::Monolayer}) {
        const auto s = LayerStructure::optimal(kind, L, c);
        const auto cls = kind == LayerKind::BilayerVUV ? PerturbationClass::PbM : PerturbationClass::PmM;
        for (int k = 0; k < 5; ++k) {
            const auto spec = random_spectrum(rng, s.interface_count(), 3, L, cls);
            FdSettings fs;
            fs.richardson = false;
            fs.step = 0.2;
            const double d1 = std::abs(fd_first_variation(s, spec, c, fs).value);
            fs.step = 0.1;
            const double d2 = std::abs(fd_first_variation(s, spec, c, fs).value);
            worst_order = std::min(worst_order, std::log2(d1 / d2));
        }
    }
    // bilayer spectrum with int (p1 + p3) != 0
    const auto s = LayerStructure::optimal(LayerKind::BilayerVUV, L, c);
    auto spec = random_spectrum(rng, 4, 3, L, PerturbationClass::Pb);
    spec.set_a(0, 0, 0.8);
    spec.set_a(2, 0, 0.3);
    spec = spec.scaled(1.0 / spec.sup_norm());
    const double fd = fd_first_variation(s, spec, c).value;
    const double closed = first_variation_closed_form(s, spec);
    const double rel = std::abs(fd - closed) / std::abs(closed);

    CheckResult r;
    r.achieved = worst_order;
    r.tolerance = 1.8;
    r.passed = worst_order >= 1.8 && rel <= 1e-3;
    d << "min observed order " << fix(worst_order, 3) << " over 10 mass-preserving spectra (need >= 1.8); "
      << "first variation rel. error " << sci(rel) << " (limit 1e-3)";
    r.detail = d.str();
    return r;
}

// 5. Oracle second variation vs the per-mode closed forms.
CheckResult second_variation(const CheckOptions& o) {
    std::mt19937_64 rng(o.seed + 5);
    std::normal_distribution<double> g(0.0, 1.0);
    const InterfaceCoefficients c(0.3, 0.4, 0.2);
    const auto d = surface_tensions(c);
    const double dv0 = d.d_v0 * (1.0 + o.dv0_skew);
    const double L = 3.0;
    CheckResult r;
    r.tolerance = 1e-3;
    std::ostringstream det;
    for (auto kind : {LayerKind::BilayerVUV, LayerKind::Monolayer}) {
        const auto s = LayerStructure::optimal(kind, L, c);
        const int n = s.interface_count();
        for (int j = 0; j <= 3; ++j) {
            const ModeForm form = kind == LayerKind::BilayerVUV
                                      ? (j == 0 ? b0_matrix(bilayer_width_from_tensions(d.d_uv, dv0))
                                                : bj_matrix(j, d.d_uv, dv0, L))
                                      : mj_matrix(j, d.d_u0, d.d_uv, dv0, L);
            for (int rep = 0; rep < 2; ++rep) {
                // draw until the form is not accidentally close to zero
                std::vector<double> a(n), b(n, 0.0);
                double closed = 0.0;
                for (int tries = 0; tries < 100; ++tries) {
                    for (auto& x : a) x = g(rng);
                    if (j > 0) {
                        for (auto& x : b) x = g(rng);
                    } else if (kind == LayerKind::BilayerVUV) {
                        a[3] = 2.0 * (a[0] + a[2]) - a[1];  // equal-mass condition
                    } else {
                        a[1] = 0.5 * (a[0] + a[2]);
                    }
                    double norm = 0.0;
                    for (int i = 0; i < n; ++i) norm += a[i] * a[i] + b[i] * b[i];
                    for (int i = 0; i < n; ++i) {
                        a[i] /= std::sqrt(norm);
                        b[i] /= std::sqrt(norm);
                    }
                    closed = form.matrix.quadratic(a) + (j > 0 ? form.matrix.quadratic(b) : 0.0);
                    if (std::abs(closed) >= 0.1 * form.matrix.max_abs()) break;
                }
                PerturbationSpectrum spec(n, 3, L);
                for (int i = 0; i < n; ++i) {
                    spec.set_a(i, j, a[i]);
                    if (j > 0) spec.set_b(i, j, b[i]);
                }
                const double fd = fd_second_variation(s, spec, c).value;
                const double rel = std::abs(fd - closed) / std::abs(closed);
                r.achieved = std::max(r.achieved, rel);
            }
        }
    }
    det << "max relative error " << sci(r.achieved) << " over modes 0-3, both layer kinds, 2 vectors each";
    if (o.dv0_skew != 0.0) det << " (closed form uses d_v0 skewed by " << o.dv0_skew << ")";
    r.detail = det.str();
    r.passed = r.achieved <= r.tolerance;
    return r;
}

// 6. Eigenvalue reductions of the dimensionless mode-1 matrices.
CheckResult eigen_reductions(const CheckOptions&) {
    const int n = 200;
    int sign_mismatch = 0, skipped = 0, gpm_bad = 0, e12_bad = 0;
    double e_diff = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = 0.005 + 0.99 * i / (n - 1);
        const double z1 = zeta1(u);
        for (int k = 0; k < n; ++k) {
            const double zeta = static_cast<double>(k) / (n - 1);
            const auto be = bilayer_eigen_analytic(zeta, u);
            if (!(be.g_plus - be.g_minus > 0.0)) ++gpm_bad;
            if (std::abs(zeta - z1) < 1e-6) {
                ++skipped;
                continue;
            }
            const double lmin = symmetric_eigen(tilde_b1_matrix(zeta, u).matrix).eigenvalues[0];
            if ((lmin >= 0.0) != (zeta >= z1)) ++sign_mismatch;
        }
    }
    for (int i = 0; i < n; ++i) {
        const double nu = 0.005 + 0.99 * i / (n - 1);
        for (int k = 0; k < n; ++k) {
            const double sigma = 0.25 + 0.25 * k / (n - 1);
            const auto me = monolayer_eigen_analytic(sigma, nu);
            if (!(me.E1 > 0.0 && me.E2 > 0.0)) ++e12_bad;
            auto ev = symmetric_eigen(hat_m_matrix(sigma, sigma, nu).matrix).eigenvalues;
            std::vector<double> an = {me.E1, me.E2, me.E3};
            std::sort(an.begin(), an.end());
            for (int m = 0; m < 3; ++m) e_diff = std::max(e_diff, std::abs(an[m] - ev[m]));
        }
    }
    CheckResult r;
    r.achieved = e_diff;
    r.tolerance = 1e-10;
    r.passed = sign_mismatch == 0 && gpm_bad == 0 && e12_bad == 0 && e_diff <= 1e-10;
    r.detail = "sign mismatches " + std::to_string(sign_mismatch) + " (" + std::to_string(skipped) +
               " in dead band); G+ <= G- at " + std::to_string(gpm_bad) + " points; E1/E2 <= 0 at " +
               std::to_string(e12_bad) + " points; max |E - Jacobi| " + sci(e_diff);
    return r;
}

// 7. Limits of the boundary curves.
CheckResult limit_values(const CheckOptions&) {
    const double z_lim = 2.5 - 0.5 * std::sqrt(13.8);
    const double a = std::abs(zeta1(0.999) - z_lim);
    const double b = zeta1(1e-6);
    const double c = std::abs(sigma12(1e-6).second - 0.5);
    const double d = std::abs(sigma12(0.999).second - 0.2);
    double min_z2 = 1e9, max_s1 = -1e9;
    for (int i = 0; i < 1000; ++i) {
        const double l = std::log(kDecayMin) + (std::log(kDecayMax) - std::log(kDecayMin)) * i / 999.0;
        min_z2 = std::min(min_z2, zeta12_log(l).second);
        max_s1 = std::max(max_s1, sigma12_log(l).first);
    }
    CheckResult r;
    r.achieved = std::max({a / 2e-2, b / 1e-2, c / 1e-2, d / 2e-2});
    r.tolerance = 1.0;
    r.passed = a <= 2e-2 && b <= 1e-2 && c <= 1e-2 && d <= 2e-2 && min_z2 > 1.0 && max_s1 < 0.0;
    r.detail = "|zeta1(0.999) - lim| " + sci(a) + ", zeta1(1e-6) " + sci(b) + ", |sigma2(1e-6) - 1/2| " + sci(c) +
               ", |sigma2(0.999) - 1/5| " + sci(d) + ", min zeta2 " + fix(min_z2, 8) + ", max sigma1 " + sci(max_s1);
    return r;
}

// 8. E_3 near nu = 1.
CheckResult e3_asymptotics(const CheckOptions&) {
    const double nu = 0.99;
    double lo = 1e9, hi = -1e9;
    std::ostringstream d;
    for (double sigma : {0.3, 0.4, 0.5}) {
        const double e3 = monolayer_eigen_analytic(sigma, nu).E3;
        const double model = 4.0 / 45.0 * (1.0 - 5.0 * sigma) * std::pow(1.0 - nu, 5);
        const double ratio = e3 / model;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        d << (d.tellp() > 0 ? "; " : "") << "sigma " << sigma << ": ratio " << fix(ratio, 5);
    }
    CheckResult r;
    r.achieved = std::max(std::abs(lo - 1.0), std::abs(hi - 1.0));
    r.tolerance = 0.1;
    r.passed = lo >= 0.9 && hi <= 1.1;
    r.detail = d.str() + " (window [0.9, 1.1])";
    return r;
}

// 9. Uniform bilayer threshold alpha.
CheckResult alpha_threshold(const CheckOptions&) {
    const auto a = estimate_alpha(100, 2000);
    CheckResult r;
    r.achieved = std::abs(a.value - 0.65);
    r.tolerance = 0.02;
    r.passed = r.achieved <= 0.02 && a.value < 1.0;
    r.detail = "alpha = " + fix(a.value, 6) + " (grid refinement " + sci(a.error_estimate) + ", attained at upsilon " +
               fix(a.argmax_upsilon, 6) + ")";
    return r;
}

// 10. Smallest ell with mu_tilde > 1/2.
CheckResult monolayer_cutoff(const CheckOptions&) {
    auto above = [](double ell) { return aggregated_threshold(LayerKind::Monolayer, ell, 100).value > 0.5; };
    double lo = 1.0, hi = -1.0;
    for (double ell = 1.0; ell <= 12.0; ell += 0.01) {
        if (above(ell)) {
            hi = ell;
            break;
        }
        lo = ell;
    }
    CheckResult r;
    r.tolerance = 0.5;
    if (hi < 0.0) {
        r.achieved = 1e9;
        r.detail = "mu_tilde stays below 1/2 on [1, 12]";
        return r;
    }
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (above(mid) ? hi : lo) = mid;
    }
    r.achieved = std::abs(hi - 6.0);
    r.passed = hi >= 5.5 && hi <= 6.5;
    r.detail = "mu_tilde exceeds 1/2 from ell = " + fix(hi, 6) + " (expected in [5.5, 6.5])";
    return r;
}

// 11. Different Fourier modes dominate inside the zoom window.
CheckResult mode_crossing(const CheckOptions&) {
    const double w0 = 20.0, w1 = 60.0;
    int max_mode = 1;
    double first = -1.0;
    for (double ell = w0; ell <= w1; ell += 0.01) {
        const int m = aggregated_threshold(LayerKind::BilayerVUV, ell, 100).argmax_mode;
        if (m > 1 && first < 0.0) first = ell;
        max_mode = std::max(max_mode, m);
    }
    CurvesConfig cc;
    cc.ell_min = w0;
    cc.ell_max = w1;
    cc.points = 801;
    const auto table = compute_curves(cc);
    CheckResult r;
    r.achieved = max_mode;
    r.tolerance = 2;
    r.passed = max_mode > 1 && !table.crossings.empty();
    r.detail = "window ell in [20, 60]: argmax mode reaches " + std::to_string(max_mode) + " (first > 1 at ell " +
               fix(first, 2) + "); " + std::to_string(table.crossings.size()) + " crossings of g1(ell/k), g1(ell/(k+1))";
    return r;
}

// 12. Mode shapes are eigenvectors.
CheckResult mode_shape_check(const CheckOptions&) {
    double worst = 0.0;
    int count = 0;
    bool s1_exact = true;
    auto residual = [&](const ModeShapeSet& set) {
        for (const auto& sh : set.shapes) {
            const auto mv = set.matrix.apply(sh.vector);
            double res = 0.0;
            for (size_t i = 0; i < mv.size(); ++i) res += std::pow(mv[i] - sh.eigenvalue * sh.vector[i], 2);
            worst = std::max(worst, std::sqrt(res));
            ++count;
        }
    };
    for (double zeta : {0.0, 0.3, 0.6, 0.9, 1.0}) {
        for (double u : {0.05, 0.2, 0.4, 0.6, 0.8, 0.95}) residual(bilayer_mode_shapes(zeta, u));
    }
    for (double sigma : {0.25, 0.3, 0.4, 0.5}) {
        for (double nu : {0.05, 0.2, 0.4, 0.6, 0.8, 0.95}) {
            const auto set = monolayer_mode_shapes(sigma, nu);
            residual(set);
            const auto& v = set.shapes[0].vector;
            s1_exact = s1_exact && v[1] == 0.0 && v[0] == -v[2] && v[0] < 0.0;
        }
    }
    for (auto kind : {LayerKind::BilayerVUV, LayerKind::Monolayer}) {
        const auto demo = demo_parameters(kind);
        const auto c = InterfaceCoefficients::from_tensions(demo.tensions);
        residual(mode_shapes(kind, dimensionless(LayerStructure::optimal(kind, demo.L, c), c)));
    }
    CheckResult r;
    r.achieved = worst;
    r.tolerance = 1e-8;
    r.passed = worst <= 1e-8 && s1_exact;
    r.detail = "max eigen-residual " + sci(worst) + " over " + std::to_string(count) + " vectors; monolayer s1 " +
               (s1_exact ? "is" : "is not") + " exactly along (-1, 0, 1)";
    return r;
}

// 13. B_0 >= 0 on the equal-mass subspace.
CheckResult b0_positivity(const CheckOptions& o) {
    std::mt19937_64 rng(o.seed + 13);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> w(0.1, 3.0);
    double worst = 1e300;
    for (int k = 0; k < 100000; ++k) {
        Vec4 a{g(rng), g(rng), g(rng), 0.0};
        a[3] = 2.0 * (a[0] + a[2]) - a[1];
        double n = 0.0;
        for (double x : a) n += x * x;
        for (double& x : a) x /= std::sqrt(n);
        worst = std::min(worst, b0_form(a, w(rng)));
    }
    CheckResult r;
    r.achieved = worst;
    r.tolerance = -1e-12;
    r.passed = worst >= -1e-12;
    r.detail = "min B0 over 1e5 unit vectors " + sci(worst);
    return r;
}

// 14. Map output is byte-identical between runs.
CheckResult map_determinism(const CheckOptions&) {
    SweepConfig c;
    c.nx = 60;
    c.ny = 40;
    c.threads = 4;
    const auto a = map_csv(compute_map(c));
    const auto b = map_csv(compute_map(c));
    c.threads = 1;
    const auto serial = map_csv(compute_map(c));
    CheckResult r;
    r.achieved = a == b && a == serial ? 0.0 : 1.0;
    r.tolerance = 0.0;
    r.passed = r.achieved == 0.0;
    r.detail = std::to_string(a.size()) + " bytes; repeated 4-thread runs " + (a == b ? "identical" : "DIFFER") +
               ", serial run " + (a == serial ? "identical" : "DIFFERS");
    return r;
}

}  // namespace

const std::vector<CheckSpec>& all_checks() {
    static const std::vector<CheckSpec> checks = {
        {1, "green-identity", "green", green_identity, true},
        {2, "green-series", "green", green_series_check, true},
        {3, "reference-energies", "energy", reference_energies, true},
        {4, "stationarity", "stationarity", stationarity, true},
        {5, "second-variation", "secondvar", second_variation, true},
        {6, "eigen-reductions", "eigen", eigen_reductions, true},
        {7, "limit-values", "limits", limit_values, false},
        {8, "e3-asymptotics", "limits", e3_asymptotics, false},
        {9, "alpha", "threshold", alpha_threshold, false},
        {10, "monolayer-cutoff", "threshold", monolayer_cutoff, false},
        {11, "mode-crossing", "threshold", mode_crossing, false},
        {12, "mode-shapes", "eigen", mode_shape_check, true},
        {13, "b0-positivity", "eigen", b0_positivity, true},
        {14, "map-determinism", "determinism", map_determinism, false},
    };
    return checks;
}

CheckResult run_check(const CheckSpec& spec, const CheckOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = spec.fn(opts);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.criterion = spec.criterion;
    r.id = spec.id;
    r.group = spec.group;
    r.seconds = elapsed(t0);
    return r;
}

std::vector<std::string> check_groups() {
    std::vector<std::string> g;
    for (const auto& c : all_checks()) {
        if (std::find(g.begin(), g.end(), c.group) == g.end()) g.push_back(c.group);
    }
    return g;
}

}  // namespace layerstab::cli
