#include "layerstab/oracle.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "layerstab/error.hpp"
#include "layerstab/green.hpp"

namespace layerstab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta3 = 1.2020569031595942854;

std::vector<double> interface_tensions(const LayerStructure& s, const InterfaceCoefficients& c) {
    const auto d = surface_tensions(c);
    if (s.kind() == LayerKind::BilayerVUV) return {d.d_uv, d.d_v0, d.d_uv, d.d_v0};
    return {d.d_u0, d.d_uv, d.d_v0};
}

double nonlocal_on_grid(const PerturbedInterfaces& curves, double L, int N) {
    const int n = curves.count();
    std::vector<double> p, dp;
    curves.spectrum().sample(N, p, dp);
    // Interface heights on the grid.
    std::vector<double> h(static_cast<size_t>(n) * N);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < N; ++k) {
            h[static_cast<size_t>(i) * N + k] =
                curves.base(i) + curves.orientation(i) * curves.epsilon() * p[static_cast<size_t>(i) * N + k];
        }
    }
    const double hx = L / N;
    std::vector<double> offsets(N);
    for (int d = 0; d < N; ++d) offsets[d] = hx * d;

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double* hi = &h[static_cast<size_t>(i) * N];
        for (int j = i; j < n; ++j) {
            const double* hj = &h[static_cast<size_t>(j) * N];
            double sum = 0.0;
            if (i == j) {
                // Diagonal k == m contributes Gamma(0, 0); off-diagonal pairs twice.
                const double g00 = L * L * kZeta3 / (8.0 * kPi * kPi * kPi);
                sum += N * g00;
                for (int k = 0; k < N; ++k) {
                    double row = 0.0;
                    for (int m = k + 1; m < N; ++m) {
                        row += green_antiderivative2(L, offsets[m - k], hi[k] - hj[m]);
                    }
                    sum += 2.0 * row;
                }
            } else {
                for (int k = 0; k < N; ++k) {
                    double row = 0.0;
                    for (int m = 0; m < N; ++m) {
                        const int d = k >= m ? k - m : k - m + N;
                        row += green_antiderivative2(L, offsets[d], hi[k] - hj[m]);
                    }
                    sum += row;
                }
                sum *= 2.0;
            }
            total += curves.jump(i) * curves.jump(j) * sum;
        }
    }
    double value = -total * hx * hx;

    // Gamma(a, z) carries a term |z| |a| L / (8 pi) at a = 0 for z != 0, so the
    // cross terms have a kink on x = y. Trapezoid error of a kink with
    // derivative jump J is -J h^2 / 12; here J(x) = sum_{i != j} c_i c_j |h_i - h_j| / 2.
    double kink = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double gap = 0.0;
            for (int k = 0; k < N; ++k) gap += std::abs(h[static_cast<size_t>(i) * N + k] - h[static_cast<size_t>(j) * N + k]);
            kink += curves.jump(i) * curves.jump(j) * gap * hx;
        }
    }
    value += hx * hx / 12.0 * kink;

    // Self terms: a^2 log|a| on the diagonal with weight (1 - h'^2) relative to
    // the straight case, whose trapezoid error is exactly zeta(3) L^4 / (8 pi^3 N^3).
    const double eps = curves.epsilon();
    double self = 0.0;
    for (int i = 0; i < n; ++i) {
        double weight = 0.0;
        for (int k = 0; k < N; ++k) {
            const double slope = eps * dp[static_cast<size_t>(i) * N + k];
            weight += 1.0 - slope * slope;
        }
        self += curves.jump(i) * curves.jump(i) * weight / N;
    }
    value += self * std::pow(L, 4) * kZeta3 / (8.0 * kPi * kPi * kPi * std::pow(static_cast<double>(N), 3));
    return value;
}

void check_grid(const OracleSettings& settings) {
    if (settings.grid < 8 || settings.grid % 2 != 0) {
        throw ValidationError("oracle grid must be an even number >= 8");
    }
}

}  // namespace

double interfacial_energy(const LayerStructure& s, const PerturbationSpectrum& spec, double eps,
                          const InterfaceCoefficients& c, const OracleSettings& settings) {
    check_grid(settings);
    perturbed_interfaces(s, spec, eps);  // crossing check
    const auto tension = interface_tensions(s, c);
    const int N = std::max(settings.grid, 8 * (spec.order() + 1));
    std::vector<double> p, dp;
    spec.sample(N, p, dp);
    const double hx = s.length() / N;
    double total = 0.0;
    for (int i = 0; i < spec.interfaces(); ++i) {
        double len = 0.0;
        for (int k = 0; k < N; ++k) {
            const double slope = eps * dp[static_cast<size_t>(i) * N + k];
            len += std::sqrt(1.0 + slope * slope);
        }
        total += tension[i] * len * hx;
    }
    return total;
}

NonlocalValue h1m_energy(const LayerStructure& s, const PerturbationSpectrum& spec, double eps,
                         const OracleSettings& settings) {
    check_grid(settings);
    const auto curves = perturbed_interfaces(s, spec, eps);
    NonlocalValue out;
    out.value = nonlocal_on_grid(curves, s.length(), settings.grid);
    if (settings.estimate_error) {
        out.error_estimate = std::abs(out.value - nonlocal_on_grid(curves, s.length(), settings.grid / 2));
    }
    return out;
}

EnergyBreakdown energy(const LayerStructure& s, const PerturbationSpectrum& spec, double eps,
                       const InterfaceCoefficients& c, const OracleSettings& settings) {
    EnergyBreakdown e;
    e.interfacial = interfacial_energy(s, spec, eps, c, settings);
    if (settings.include_nonlocal) {
        const auto nl = h1m_energy(s, spec, eps, settings);
        e.nonlocal = nl.value;
        e.quadrature_error_estimate = nl.error_estimate;
    }
    e.total = e.interfacial + e.nonlocal;
    return e;
}

double safe_step(const LayerStructure& s, const PerturbationSpectrum& spec, double relative_step) {
    if (!(relative_step > 0.0)) throw ValidationError("finite-difference step must be positive");
    double step = relative_step * s.width();
    const double sup = spec.sup_norm();
    if (sup > 0.0) step = std::min(step, 0.999 * 0.2 * s.width() / sup);
    return step;
}

namespace {

double total_energy(const LayerStructure& s, const PerturbationSpectrum& spec, double eps,
                    const InterfaceCoefficients& c, const OracleSettings& o) {
    return energy(s, spec, eps, c, o).total;
}

}  // namespace

FdResult fd_first_variation(const LayerStructure& s, const PerturbationSpectrum& spec,
                            const InterfaceCoefficients& c, const FdSettings& settings) {
    const double e = safe_step(s, spec, settings.step);
    FdResult r;
    r.step = e;
    const double fp = total_energy(s, spec, e, c, settings.oracle);
    const double fm = total_energy(s, spec, -e, c, settings.oracle);
    r.coarse = (fp - fm) / (2.0 * e);
    const double scale = std::max(std::abs(fp), std::abs(fm));
    r.noise_floor = 64.0 * DBL_EPSILON * scale / e;
    r.value = r.coarse;
    if (settings.richardson) {
        const double h = 0.5 * e;
        const double fine =
            (total_energy(s, spec, h, c, settings.oracle) - total_energy(s, spec, -h, c, settings.oracle)) /
            (2.0 * h);
        r.value = (4.0 * fine - r.coarse) / 3.0;
        r.noise_floor = 64.0 * DBL_EPSILON * scale / h;
    }
    return r;
}

FdResult fd_second_variation(const LayerStructure& s, const PerturbationSpectrum& spec,
                             const InterfaceCoefficients& c, const FdSettings& settings) {
    const double e = safe_step(s, spec, settings.step);
    FdResult r;
    r.step = e;
    const double f0 = total_energy(s, spec, 0.0, c, settings.oracle);
    const double fp = total_energy(s, spec, e, c, settings.oracle);
    const double fm = total_energy(s, spec, -e, c, settings.oracle);
    r.coarse = (fp - 2.0 * f0 + fm) / (e * e);
    const double scale = std::max({std::abs(f0), std::abs(fp), std::abs(fm)});
    r.noise_floor = 4.0 * 64.0 * DBL_EPSILON * scale / (e * e);
    r.value = r.coarse;
    if (settings.richardson) {
        const double h = 0.5 * e;
        const double fine = (total_energy(s, spec, h, c, settings.oracle) - 2.0 * f0 +
                             total_energy(s, spec, -h, c, settings.oracle)) /
                            (h * h);
        r.value = (4.0 * fine - r.coarse) / 3.0;
        r.noise_floor = 4.0 * 64.0 * DBL_EPSILON * scale / (h * h) * 5.0 / 3.0;
    }
    return r;
}

}  // namespace layerstab
