#include "layerstab/secondvar.hpp"

#include <cmath>
#include <numbers>

#include "detail/kernels.hpp"
#include "layerstab/error.hpp"

namespace layerstab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_length(double L) {
    if (!(L > 0.0)) throw DomainError("strip length must be positive");
}

void require_mode(int j, int min) {
    if (j < min) throw DomainError("mode index " + std::to_string(j) + " not allowed here");
}

void require_log_decay(double l, const char* name) {
    if (!(l < 0.0) || !std::isfinite(l)) throw DomainError(std::string(name) + " must lie in (0, 1)");
}

double from_log_check(double x, const char* name) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError(std::string(name) + " must lie in (0, 1)");
    return std::log(x);
}

}  // namespace

double bilayer_width_from_tensions(double d_uv, double d_v0) { return std::cbrt(0.75 * (d_uv + d_v0)); }

double monolayer_width_from_tensions(double d_u0, double d_uv, double d_v0) {
    return std::cbrt(0.75 * (d_u0 + d_uv + d_v0));
}

ModeForm b0_matrix(double delta_b) {
    ModeForm f;
    f.j = 0;
    f.dim = 4;
    f.matrix = SmallMatrix(4);
    auto& m = f.matrix;
    const double s = 4.0 * delta_b;
    m(0, 0) = -s;
    m(2, 2) = -s;
    m(0, 1) = m(1, 0) = 0.5 * s;
    m(2, 3) = m(3, 2) = 0.5 * s;
    m(0, 2) = m(2, 0) = -2.0 * s;
    m(1, 2) = m(2, 1) = 1.5 * s;
    m(0, 3) = m(3, 0) = 1.5 * s;
    m(1, 3) = m(3, 1) = -1.0 * s;
    return f;
}

double b0_form(const Vec4& a, double delta_b) {
    return 4.0 * delta_b *
           (-a[0] * a[0] - a[2] * a[2] + a[0] * a[1] + a[2] * a[3] - 4.0 * a[0] * a[2] + 3.0 * a[1] * a[2] +
            3.0 * a[0] * a[3] - 2.0 * a[1] * a[3]);
}

ModeForm bj_matrix(int j, double d_uv, double d_v0, double L) {
    require_mode(j, 1);
    require_positive_length(L);
    const double delta = bilayer_width_from_tensions(d_uv, d_v0);
    const double k2 = 4.0 * kPi * kPi * j * j / (L * L);
    const double pre = L / (kPi * j);
    const double t = 2.0 * kPi * delta * j / L;
    const double e1 = std::exp(-t), e2 = std::exp(-2.0 * t), e3 = std::exp(-3.0 * t), e4 = std::exp(-4.0 * t);
    ModeForm f;
    f.j = j;
    f.dim = 4;
    f.matrix = SmallMatrix(4);
    auto& m = f.matrix;
    m(0, 0) = m(2, 2) = k2 * d_uv + pre * 2.0 * (1.0 - t);
    m(1, 1) = m(3, 3) = k2 * d_v0 + pre * 0.5;
    m(0, 1) = m(1, 0) = m(2, 3) = m(3, 2) = -pre * e1;
    m(0, 2) = m(2, 0) = 2.0 * pre * e2;
    m(0, 3) = m(3, 0) = m(1, 2) = m(2, 1) = -pre * e3;
    m(1, 3) = m(3, 1) = 0.5 * pre * e4;
    return f;
}

double bj_form(int j, const Vec4& a, const Vec4& b, double d_uv, double d_v0, double L) {
    require_mode(j, 1);
    require_positive_length(L);
    const double delta = bilayer_width_from_tensions(d_uv, d_v0);
    const double k2 = 4.0 * kPi * kPi * j * j / (L * L);
    const double pre = L / (kPi * j);
    const double t = 2.0 * kPi * delta * j / L;
    const auto sq = [](double x) { return x * x; };
    const double interfacial = k2 * (d_uv * (sq(a[0]) + sq(a[2]) + sq(b[0]) + sq(b[2])) +
                                     d_v0 * (sq(a[1]) + sq(a[3]) + sq(b[1]) + sq(b[3])));
    const double nonlocal =
        2.0 * (1.0 - t) * (sq(a[0]) + sq(a[2]) + sq(b[0]) + sq(b[2])) +
        0.5 * (sq(a[1]) + sq(a[3]) + sq(b[1]) + sq(b[3])) -
        2.0 * (a[0] * a[1] + a[2] * a[3] + b[0] * b[1] + b[2] * b[3]) * std::exp(-t) +
        4.0 * (a[0] * a[2] + b[0] * b[2]) * std::exp(-2.0 * t) -
        2.0 * (a[0] * a[3] + a[1] * a[2] + b[0] * b[3] + b[1] * b[2]) * std::exp(-3.0 * t) +
        (a[1] * a[3] + b[1] * b[3]) * std::exp(-4.0 * t);
    return interfacial + pre * nonlocal;
}

ModeForm mj_matrix(int j, double d_u0, double d_uv, double d_v0, double L) {
    require_mode(j, 0);
    require_positive_length(L);
    const double delta = monolayer_width_from_tensions(d_u0, d_uv, d_v0);
    ModeForm f;
    f.j = j;
    f.dim = 3;
    f.matrix = SmallMatrix(3);
    auto& m = f.matrix;
    if (j == 0) {
        m(0, 0) = m(2, 2) = delta;
        m(0, 2) = m(2, 0) = -delta;
        return f;
    }
    const double k2 = 4.0 * kPi * kPi * j * j / (L * L);
    const double pre = L / (kPi * j);
    const double t = 2.0 * kPi * delta * j / L;
    m(0, 0) = k2 * d_u0 + 0.5 * pre;
    m(1, 1) = k2 * d_uv + 2.0 * pre * (1.0 - t);
    m(2, 2) = k2 * d_v0 + 0.5 * pre;
    m(0, 1) = m(1, 0) = m(1, 2) = m(2, 1) = -pre * std::exp(-t);
    m(0, 2) = m(2, 0) = 0.5 * pre * std::exp(-2.0 * t);
    return f;
}

double mj_form(int j, const Vec3& a, const Vec3& b, double d_u0, double d_uv, double d_v0, double L) {
    require_mode(j, 0);
    require_positive_length(L);
    const double delta = monolayer_width_from_tensions(d_u0, d_uv, d_v0);
    if (j == 0) return delta * (a[0] - a[2]) * (a[0] - a[2]);
    const double k2 = 4.0 * kPi * kPi * j * j / (L * L);
    const double pre = L / (kPi * j);
    const double t = 2.0 * kPi * delta * j / L;
    const auto sq = [](double x) { return x * x; };
    const double interfacial =
        k2 * (d_u0 * (sq(a[0]) + sq(b[0])) + d_uv * (sq(a[1]) + sq(b[1])) + d_v0 * (sq(a[2]) + sq(b[2])));
    const double nonlocal = 2.0 * (1.0 - t) * (sq(a[1]) + sq(b[1])) +
                            0.5 * (sq(a[0]) + sq(a[2]) + sq(b[0]) + sq(b[2])) -
                            2.0 * (a[0] * a[1] + a[1] * a[2] + b[0] * b[1] + b[1] * b[2]) * std::exp(-t) +
                            (a[0] * a[2] + b[0] * b[2]) * std::exp(-2.0 * t);
    return interfacial + pre * nonlocal;
}

namespace {

void require_optimal(const LayerStructure& s, const InterfaceCoefficients& c) {
    const double w = optimal_width(s.kind(), c);
    if (std::abs(s.width() - w) > 1e-12 * w) {
        throw ValidationError("closed-form variations are only available at the optimal width");
    }
}

}  // namespace

double second_variation_closed_form(const LayerStructure& s, const PerturbationSpectrum& spec,
                                    const InterfaceCoefficients& c) {
    require_optimal(s, c);
    if (spec.interfaces() != s.interface_count()) throw ValidationError("spectrum does not match structure");
    const auto d = surface_tensions(c);
    const double L = s.length();
    double total = 0.0;
    if (s.kind() == LayerKind::BilayerVUV) {
        total += b0_form({spec.a(0, 0), spec.a(1, 0), spec.a(2, 0), spec.a(3, 0)}, s.width());
        for (int j = 1; j <= spec.order(); ++j) {
            Vec4 a{}, b{};
            for (int i = 0; i < 4; ++i) {
                a[i] = spec.a(i, j);
                b[i] = spec.b(i, j);
            }
            total += bj_form(j, a, b, d.d_uv, d.d_v0, L);
        }
    } else {
        total += mj_form(0, {spec.a(0, 0), spec.a(1, 0), spec.a(2, 0)}, {}, d.d_u0, d.d_uv, d.d_v0, L);
        for (int j = 1; j <= spec.order(); ++j) {
            Vec3 a{}, b{};
            for (int i = 0; i < 3; ++i) {
                a[i] = spec.a(i, j);
                b[i] = spec.b(i, j);
            }
            total += mj_form(j, a, b, d.d_u0, d.d_uv, d.d_v0, L);
        }
    }
    return total;
}

double first_variation_closed_form(const LayerStructure& s, const PerturbationSpectrum& spec) {
    if (spec.interfaces() != s.interface_count()) throw ValidationError("spectrum does not match structure");
    const double w2 = s.width() * s.width();
    if (s.kind() == LayerKind::BilayerVUV) return 2.0 * w2 * (spec.integral(0) + spec.integral(2));
    return w2 * (spec.integral(2) - spec.integral(0));
}

ModeForm tilde_b1_matrix_log(double zeta, double l) {
    require_log_decay(l, "upsilon");
    if (!(zeta >= -kValidationSlack && zeta <= 1.0 + kValidationSlack)) {
        throw DomainError("zeta must lie in [0, 1]");
    }
    const double u = std::exp(l);
    const double l3 = l * l * l;
    ModeForm f;
    f.j = 1;
    f.dim = 4;
    f.matrix = SmallMatrix(4);
    auto& m = f.matrix;
    m(0, 0) = m(2, 2) = -zeta / 3.0 * l3 + 1.0 + l;
    m(1, 1) = m(3, 3) = -(1.0 - zeta) / 3.0 * l3 + 0.25;
    m(0, 1) = m(1, 0) = m(2, 3) = m(3, 2) = -0.5 * u;
    m(0, 2) = m(2, 0) = u * u;
    m(0, 3) = m(3, 0) = m(1, 2) = m(2, 1) = -0.5 * u * u * u;
    m(1, 3) = m(3, 1) = 0.25 * u * u * u * u;
    f.scale = 2.0 / kPi;
    return f;
}

ModeForm tilde_b1_matrix(double zeta, double upsilon) {
    return tilde_b1_matrix_log(zeta, from_log_check(upsilon, "upsilon"));
}

double tilde_b1_value(const Vec4& x, double zeta, double upsilon) {
    const double l = from_log_check(upsilon, "upsilon");
    const double l3 = l * l * l;
    const double u = upsilon;
    return -l3 / 3.0 * (zeta * (x[0] * x[0] + x[2] * x[2]) + (1.0 - zeta) * (x[1] * x[1] + x[3] * x[3])) +
           (1.0 + l) * (x[0] * x[0] + x[2] * x[2]) + 0.25 * (x[1] * x[1] + x[3] * x[3]) -
           (x[0] * x[1] + x[2] * x[3]) * u + 2.0 * x[0] * x[2] * u * u -
           (x[0] * x[3] + x[1] * x[2]) * u * u * u + 0.5 * x[1] * x[3] * u * u * u * u;
}

ModeForm hat_m_matrix_log(double rho, double sigma, double l) {
    require_log_decay(l, "nu");
    const double nu = std::exp(l);
    const double l3 = l * l * l;
    ModeForm f;
    f.j = 1;
    f.dim = 3;
    f.matrix = SmallMatrix(3);
    auto& m = f.matrix;
    m(0, 0) = -2.0 / 3.0 * rho * l3 + 0.5;
    m(1, 1) = -2.0 / 3.0 * (1.0 - rho - sigma) * l3 + 2.0 * (1.0 + l);
    m(2, 2) = -2.0 / 3.0 * sigma * l3 + 0.5;
    m(0, 1) = m(1, 0) = m(1, 2) = m(2, 1) = -nu;
    m(0, 2) = m(2, 0) = 0.5 * nu * nu;
    f.scale = 1.0 / kPi;
    return f;
}

ModeForm hat_m_matrix(double rho, double sigma, double nu) {
    return hat_m_matrix_log(rho, sigma, from_log_check(nu, "nu"));
}

BilayerEigen bilayer_eigen_analytic_log(double zeta, double l) {
    require_log_decay(l, "upsilon");
    if (!(zeta >= -kValidationSlack && zeta <= 1.0 + kValidationSlack)) {
        throw DomainError("zeta must lie in [0, 1]");
    }
    const double u = std::exp(l);
    const double u2 = u * u, u4 = u2 * u2;
    const double l2 = l * l, l3 = l2 * l, l4 = l2 * l2, l6 = l3 * l3;
    const double d_minus = 3.0 * std::expm1(4.0 * l) - 4.0 * (zeta - 1.0) * l3;
    const double d_plus = 3.0 * (1.0 + u4) + 4.0 * (zeta - 1.0) * l3;
    if (!(d_minus < 0.0) || !(d_plus > 0.0)) {
        throw DomainError("bilayer eigenvalue denominators vanish for these parameters");
    }
    BilayerEigen e;
    const auto roots = detail::zeta_roots(l);
    e.h_minus = 4.0 / 3.0 * l6 * (zeta - roots.first) * (zeta - roots.second);
    e.g_minus = e.h_minus / d_minus;
    e.h_plus = -(4.0 / 3.0 * l6) * zeta * zeta + (4.0 / 3.0 * l6 + 4.0 * l4 + (3.0 + 4.0 * u2 - u4) * l3) * zeta +
               3.0 * (1.0 - u4) + 3.0 * (1.0 + u4) * l - 4.0 * (1.0 + u2) * l3 - 4.0 * l4;
    e.g_plus = e.h_plus / d_plus;
    const double base = l - zeta / 3.0 * l3;
    e.g_minus_rational = 1.0 - u2 + base + 3.0 * u2 * (u2 - 1.0) * (u2 - 1.0) / d_minus;
    e.g_plus_rational = 1.0 + u2 + base - 3.0 * u2 * (1.0 + u2) * (1.0 + u2) / d_plus;
    const double zm1 = zeta - 1.0;
    const double den = 9.0 * std::expm1(8.0 * l) + 8.0 * zm1 * (-3.0 - 2.0 * zm1 * l3) * l3;
    const double diag = base - (3.0 * (u2 - 1.0) - 4.0 * zm1 * l3) * (3.0 * (u4 * u2 - 1.0) - 4.0 * zm1 * l3) / den;
    const double offn = 3.0 * u * (u2 - 1.0) - 4.0 * u * zm1 * l3;
    e.maltese(0, 0) = e.maltese(1, 1) = diag;
    e.maltese(0, 1) = e.maltese(1, 0) = -offn * offn / den;
    return e;
}

BilayerEigen bilayer_eigen_analytic(double zeta, double upsilon) {
    return bilayer_eigen_analytic_log(zeta, from_log_check(upsilon, "upsilon"));
}

MonolayerEigen monolayer_eigen_analytic_log(double sigma, double l) {
    require_log_decay(l, "nu");
    const double nu = std::exp(l);
    const double nu2 = nu * nu;
    const double l2 = l * l, l3 = l2 * l, l4 = l2 * l2, l6 = l3 * l3;
    MonolayerEigen e;
    e.e1_poly = 15.0 + 3.0 * nu2 + (12.0 - 4.0 * l2 + 4.0 * sigma * l2) * l;
    e.e2_poly = 81.0 + 234.0 * nu2 + 9.0 * nu2 * nu2 + 216.0 * l - 72.0 * nu2 * l + 144.0 * l2 - 72.0 * l3 +
                24.0 * nu2 * l3 - 96.0 * l4 + 16.0 * l6 +
                (216.0 * l3 - 72.0 * nu2 * l3 + 288.0 * l4 - 96.0 * l6) * sigma + 144.0 * l6 * sigma * sigma;
    e.E1 = (3.0 - 3.0 * nu2 - 4.0 * sigma * l3) / 6.0;
    // (e1^2 - e2)/16 in factored form, then E3 = (e1 - sqrt(e2))/12 rationalised.
    const auto roots = detail::sigma_roots(l);
    const double quarter_gap = -8.0 * l6 * (sigma - roots.first) * (sigma - roots.second);
    const double e2 = std::max(0.0, e.e1_poly * e.e1_poly - 16.0 * quarter_gap);
    e.E3 = 4.0 * quarter_gap / (3.0 * (e.e1_poly + std::sqrt(e2)));
    e.E2 = (e.e1_poly + std::sqrt(e2)) / 12.0;
    return e;
}

MonolayerEigen monolayer_eigen_analytic(double sigma, double nu) {
    return monolayer_eigen_analytic_log(sigma, from_log_check(nu, "nu"));
}

MonolayerEigen monolayer_eigen_analytic(double rho, double sigma, double nu) {
    if (std::abs(rho - sigma) > kValidationSlack) {
        throw UnsupportedCaseError("monolayer eigenvalue formulas require rho == sigma (c_u == c_v)");
    }
    return monolayer_eigen_analytic(sigma, nu);
}

}  // namespace layerstab
