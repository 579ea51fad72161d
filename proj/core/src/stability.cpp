#include "layerstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "detail/kernels.hpp"
#include "layerstab/error.hpp"
#include "layerstab/secondvar.hpp"

namespace layerstab {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLogMin = std::log(kDecayMin);
const double kLogMax = std::log1p(-1e-4);

// Small-decay limits of zeta_1 and sigma_2.
constexpr double kZeta1Limit = 0.0;
constexpr double kSigma2Limit = 0.5;

void require_decay_log(double l, const char* name) {
    // a few ulps of slack so that j*l computed for exact endpoints passes
    const double slack = 1e-12;
    if (!(l >= kLogMin * (1.0 + slack) && l <= kLogMax * (1.0 - slack))) {
        std::ostringstream os;
        os << name << " = " << std::exp(l) << " outside [" << kDecayMin << ", " << kDecayMax << "]";
        throw DomainError(os.str());
    }
}

double decay_log(double x, const char* name) {
    if (!(x > 0.0 && x < 1.0)) {
        std::ostringstream os;
        os << name << " = " << x << " outside [" << kDecayMin << ", " << kDecayMax << "]";
        throw DomainError(os.str());
    }
    return std::log(x);
}

double ell_log(double ell) {
    if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("ell must be positive");
    return -2.0 * kPi / ell;
}

bool in_range(double l) { return l >= kLogMin; }

void require_ell(double ell) { ell_log(ell); }

std::vector<double> normalized(std::vector<double> v) {
    double n = 0.0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    for (double& x : v) x /= n;
    return v;
}

ModeShape make_shape(const char* name, const SmallMatrix& m, std::vector<double> v, bool can_be_negative) {
    ModeShape s;
    s.name = name;
    s.vector = normalized(std::move(v));
    s.eigenvalue = m.quadratic(s.vector);
    s.can_be_negative = can_be_negative;
    return s;
}

double checked_sqrt(double radicand, const char* name, double p, const char* pname, double decay,
                    const char* dname) {
    if (radicand < 0.0) {
        std::ostringstream os;
        os << "negative radicand " << name << " = " << radicand << " at " << pname << " = " << p << ", "
           << dname << " = " << decay;
        throw DomainError(os.str());
    }
    return std::sqrt(radicand);
}

}  // namespace

CurvePair zeta12_log(double l) {
    require_decay_log(l, "upsilon");
    const auto r = detail::zeta_roots(l);
    return {r.first, r.second};
}

CurvePair zeta12(double upsilon) { return zeta12_log(decay_log(upsilon, "upsilon")); }
double zeta1(double upsilon) { return zeta12(upsilon).first; }
double zeta2(double upsilon) { return zeta12(upsilon).second; }

CurvePair sigma12_log(double l) {
    require_decay_log(l, "nu");
    const auto r = detail::sigma_roots(l);
    return {r.first, r.second};
}

CurvePair sigma12(double nu) { return sigma12_log(decay_log(nu, "nu")); }

ModeOneCurves mode1_curves(double ell) {
    const double l = ell_log(ell);
    return {1.0 - 2.0 * sigma12_log(l).second, zeta12_log(l).first};
}

double BoundaryCurve::operator()(double x) const {
    switch (kind) {
        case CurveKind::Zeta1: return zeta12(x).first;
        case CurveKind::Zeta2: return zeta12(x).second;
        case CurveKind::Sigma1: return sigma12(x).first;
        case CurveKind::Sigma2: return sigma12(x).second;
        case CurveKind::F1: return mode1_curves(x).f1;
        case CurveKind::G1: return mode1_curves(x).g1;
        case CurveKind::FSup: return sup_f1(x, mode_cap);
        case CurveKind::GSup: return sup_g1(x, mode_cap);
        case CurveKind::MuTilde: return aggregated_threshold(LayerKind::Monolayer, x, mode_cap).value;
        case CurveKind::ZetaTilde: return aggregated_threshold(LayerKind::BilayerVUV, x, mode_cap).value;
    }
    throw DomainError("unknown curve kind");
}

AggregateResult aggregated_threshold(LayerKind kind, double ell, int jmax) {
    if (jmax < 1) throw ValidationError("jmax must be at least 1");
    const double l = ell_log(ell);
    AggregateResult r;
    const bool bilayer = kind == LayerKind::BilayerVUV;
    // Running extremum of the per-mode curve: max zeta_1 or min sigma_2.
    double best = bilayer ? kZeta1Limit : kSigma2Limit;
    for (int j = 1; j <= jmax; ++j) {
        const double lj = j * l;
        if (!in_range(lj)) break;  // decay only gets smaller with j
        const double v = bilayer ? zeta12_log(lj).first : sigma12_log(lj).second;
        ++r.modes_evaluated;
        r.tail_value = v;
        if (bilayer ? v > best : v < best) {
            best = v;
            r.argmax_mode = j;
        }
    }
    r.value = bilayer ? best : 1.0 - 2.0 * best;
    return r;
}

double sup_f1(double ell, int kmax) {
    require_ell(ell);
    double best = 1.0 - 2.0 * kSigma2Limit;
    for (int k = 1; k <= kmax; ++k) {
        if (!in_range(ell_log(ell / k))) break;
        best = std::max(best, mode1_curves(ell / k).f1);
    }
    return best;
}

double sup_g1(double ell, int kmax) {
    require_ell(ell);
    double best = kZeta1Limit;
    for (int k = 1; k <= kmax; ++k) {
        if (!in_range(ell_log(ell / k))) break;
        best = std::max(best, mode1_curves(ell / k).g1);
    }
    return best;
}

StabilityVerdict verdict(LayerKind kind, const DimensionlessParams& p, int jmax) {
    StabilityVerdict v;
    const double l = ell_log(p.ell);
    const auto agg = aggregated_threshold(kind, p.ell, jmax);
    v.threshold = agg.value;
    v.worst_mode = agg.argmax_mode;
    if (kind == LayerKind::BilayerVUV) {
        if (!p.zeta) throw ValidationError("bilayer verdict needs zeta");
        v.margin = *p.zeta - agg.value;
        v.min_eigenvalue = bilayer_eigen_analytic_log(*p.zeta, v.worst_mode * l).g_minus;
    } else {
        if (!p.sigma || !p.mu) throw ValidationError("monolayer verdict needs sigma and mu");
        if (p.rho && std::abs(*p.rho - *p.sigma) > kValidationSlack) {
            throw UnsupportedCaseError("monolayer stability criterion requires rho == sigma (c_u == c_v)");
        }
        v.margin = *p.mu - agg.value;
        v.min_eigenvalue = monolayer_eigen_analytic_log(*p.sigma, v.worst_mode * l).E3;
    }
    v.stable = v.margin >= 0.0;
    v.marginal = std::abs(v.margin) < kMarginalBand;
    return v;
}

StabilityVerdict verdict(const LayerStructure& s, const InterfaceCoefficients& c, int jmax) {
    return verdict(s.kind(), dimensionless(s, c), jmax);
}

namespace {

struct GridMax {
    double value;
    double upsilon;
};

GridMax alpha_on_grid(int jmax, int n) {
    // 1 - upsilon runs log-uniformly from 1e-4 to 1 - 1e-6
    const double a = std::log(1e-4), b = std::log1p(-1e-6);
    GridMax best{-1.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const double s = std::exp(n == 1 ? a : a + (b - a) * i / (n - 1));
        const double l = std::log1p(-s);
        double z = kZeta1Limit;
        for (int j = 1; j <= jmax && in_range(j * l); ++j) z = std::max(z, zeta12_log(j * l).first);
        if (z > best.value) best = {z, 1.0 - s};
    }
    return best;
}

}  // namespace

AlphaEstimate estimate_alpha(int jmax, int grid) {
    if (jmax < 1 || grid < 2) throw ValidationError("estimate_alpha needs jmax >= 1 and grid >= 2");
    const auto fine = alpha_on_grid(jmax, grid);
    const auto coarse = alpha_on_grid(jmax, std::max(2, grid / 2));
    return {fine.value, std::abs(fine.value - coarse.value), fine.upsilon};
}

ModeShapeSet bilayer_mode_shapes(double zeta, double upsilon) {
    const auto form = tilde_b1_matrix(zeta, upsilon);
    const double u = upsilon, u2 = u * u, u4 = u2 * u2;
    const double l = std::log(u), l3 = l * l * l;
    const double z3 = (-4.0 + 8.0 * zeta) * l3;
    const double f1 = -9.0 - 12.0 * u2 + 3.0 * u4 - 12.0 * l + z3;
    const double f2 = -9.0 - 3.0 * u2 * (6.0 + u2) - 12.0 * l + z3;
    const double f3 = 15.0 + 3.0 * u2 * (4.0 + u2) - 12.0 * l + z3;
    const double common = 8.0 * l * (-3.0 + (-1.0 + 2.0 * zeta) * l * l);
    const double f4 = 9.0 * (9.0 + 40.0 * u2 + 42.0 * u4 + 8.0 * u4 * u2 + u4 * u4) +
                      common * (3.0 * (-3.0 - 4.0 * u2 + u4) - 6.0 * l + (-2.0 + 4.0 * zeta) * l3);
    const double g1 = -9.0 + 12.0 * u2 - 3.0 * u4 - 12.0 * l + z3;
    const double g2 = 9.0 - 3.0 * u2 * (2.0 + u2) + 12.0 * l - z3;
    const double g3 = -15.0 + 3.0 * u2 * (4.0 + u2) + 12.0 * l - z3;
    const double g4 = 9.0 * (u2 - 1.0) * (u2 - 1.0) * (1.0 + u2) * (9.0 + u2) +
                      common * (-3.0 * (3.0 - 4.0 * u2 + u4) - 6.0 * l + (-2.0 + 4.0 * zeta) * l3);
    const double sf = checked_sqrt(f4, "f4", zeta, "zeta", u, "upsilon");
    const double sg = checked_sqrt(g4, "g4", zeta, "zeta", u, "upsilon");
    const double cf = 12.0 * u * (1.0 + u2), cg = 12.0 * u * (u2 - 1.0);

    ModeShapeSet set{LayerKind::BilayerVUV, form.matrix, {}};
    const auto& m = form.matrix;
    set.shapes.push_back(make_shape("s1", m, {(f1 - sf) / cf, 1.0, 2.0 / u * (f2 - sf) / (f3 + sf), 1.0}, false));
    set.shapes.push_back(make_shape("s2", m, {(g1 - sg) / cg, -1.0, 2.0 / u * (g2 + sg) / (g3 - sg), 1.0}, false));
    set.shapes.push_back(make_shape("u1", m, {(f1 + sf) / cf, 1.0, 2.0 / u * (f2 + sf) / (f3 - sf), 1.0}, true));
    // the sign in front of sqrt(g4) in the third entry is minus; with plus the
    // vector is not an eigenvector
    set.shapes.push_back(make_shape("u2", m, {(g1 + sg) / cg, -1.0, 2.0 / u * (g2 - sg) / (g3 + sg), 1.0}, true));
    return set;
}

ModeShapeSet monolayer_mode_shapes(double sigma, double nu) {
    const auto form = hat_m_matrix(sigma, sigma, nu);
    const double n2 = nu * nu;
    const double l = std::log(nu), l3 = l * l * l;
    const double h1 = -9.0 + 3.0 * n2 - 12.0 * l + (4.0 - 12.0 * sigma) * l3;
    const double h2 = 9.0 * (9.0 + 26.0 * n2 + n2 * n2) + 8.0 * l * (3.0 + (-1.0 + 3.0 * sigma) * l * l) *
                                                              (9.0 - 3.0 * n2 + 6.0 * l + (-2.0 + 6.0 * sigma) * l3);
    const double sh = checked_sqrt(h2, "h2", sigma, "sigma", nu, "nu");

    ModeShapeSet set{LayerKind::Monolayer, form.matrix, {}};
    const auto& m = form.matrix;
    set.shapes.push_back(make_shape("s1", m, {-1.0, 0.0, 1.0}, false));
    // h1 - sqrt(h2) belongs to the larger eigenvalue E_2, h1 + sqrt(h2) to E_3
    set.shapes.push_back(make_shape("s2", m, {1.0, (h1 - sh) / (12.0 * nu), 1.0}, false));
    set.shapes.push_back(make_shape("u", m, {1.0, (h1 + sh) / (12.0 * nu), 1.0}, true));
    // keep s1 exact after normalisation
    const double r = 1.0 / std::sqrt(2.0);
    set.shapes[0].vector = {-r, 0.0, r};
    return set;
}

ModeShapeSet mode_shapes(LayerKind kind, const DimensionlessParams& p) {
    if (kind == LayerKind::BilayerVUV) {
        if (!p.zeta || !p.upsilon) throw ValidationError("bilayer mode shapes need zeta and upsilon");
        return bilayer_mode_shapes(*p.zeta, *p.upsilon);
    }
    if (!p.sigma || !p.nu) throw ValidationError("monolayer mode shapes need sigma and nu");
    if (p.rho && std::abs(*p.rho - *p.sigma) > kValidationSlack) {
        throw UnsupportedCaseError("monolayer mode shapes require rho == sigma (c_u == c_v)");
    }
    return monolayer_mode_shapes(*p.sigma, *p.nu);
}

DemoParameters demo_parameters(LayerKind kind) {
    DemoParameters d;
    if (kind == LayerKind::BilayerVUV) {
        d.tensions = {1.0, 0.3, 0.7};
    } else {
        d.tensions = {1.0, 1.0, 0.7};
    }
    return d;
}

}  // namespace layerstab
