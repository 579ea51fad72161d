#include "layerstab/green.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

#include "layerstab/error.hpp"
#include "layerstab/polylog.hpp"

namespace layerstab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_length(double L) {
    if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("strip length must be positive");
}

// x mod L in [0, L)
double wrap(double x, double L) {
    double r = std::fmod(x, L);
    if (r < 0.0) r += L;
    if (r >= L) r -= L;
    return r;
}

using Gauss = boost::math::quadrature::gauss<double, 20>;

// Smooth transition: 1 for t <= 0, 0 for t >= 1.
double smooth_step_down(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double a = std::exp(-1.0 / (1.0 - t));
    const double b = std::exp(-1.0 / t);
    return a / (a + b);
}

}  // namespace

double green_closed(double L, double x1, double x2) {
    require_length(L);
    const double k = 2.0 * kPi / L;
    const double az = std::abs(x2);
    const double theta = k * wrap(x1, L);
    const double r = std::exp(-k * az);
    const double one_minus_r = -std::expm1(-k * az);
    const double s = std::sin(0.5 * theta);
    // 1 - 2 r cos(theta) + r^2 = (1-r)^2 + 4 r sin^2(theta/2)
    const double arg = one_minus_r * one_minus_r + 4.0 * r * s * s;
    if (arg == 0.0) throw SingularPointError("Green's function evaluated at its singular point");
    return -az / (2.0 * L) - std::log(arg) / (4.0 * kPi);
}

int series_truncation(double L, double x2, double tol) {
    require_length(L);
    const double k = 2.0 * kPi / L;
    const double r = std::exp(-k * std::abs(x2));
    const double one_minus_r = -std::expm1(-k * std::abs(x2));
    double rq = r;  // r^(Q+1) with Q = 0
    for (int Q = 1; Q <= kMaxSeriesTerms; ++Q) {
        rq *= r;
        const double bound = rq / ((Q + 1.0) * one_minus_r) / (2.0 * kPi);
        if (bound < tol) return Q;
    }
    return kMaxSeriesTerms;
}

SeriesValue green_series(double L, double x1, double x2, int Q) {
    require_length(L);
    if (x2 == 0.0) throw DomainError("Fourier series of G does not converge absolutely on x2 = 0");
    if (std::abs(x2) < 1e-6 * L) throw DomainError("series evaluation refused for |x2| < 1e-6 L");
    if (Q < 1) throw DomainError("series truncation must be at least 1");
    const double k = 2.0 * kPi / L;
    const double az = std::abs(x2);
    const double r = std::exp(-k * az);
    const double one_minus_r = -std::expm1(-k * az);
    const double theta = k * wrap(x1, L);
    const double c1 = std::cos(theta);
    const double s1 = std::sin(theta);
    // Rotate (cos q theta, sin q theta) by recurrence; renormalise occasionally.
    double cq = c1, sq = s1, rq = r, sum = 0.0;
    for (int q = 1; q <= Q; ++q) {
        sum += rq * cq / q;
        rq *= r;
        if (rq == 0.0) break;
        const double cn = cq * c1 - sq * s1;
        const double sn = sq * c1 + cq * s1;
        cq = cn;
        sq = sn;
        if (q % 64 == 0) {
            cq = std::cos((q + 1) * theta);
            sq = std::sin((q + 1) * theta);
        }
    }
    SeriesValue out;
    out.value = -az / (2.0 * L) + sum / (2.0 * kPi);
    out.tail_bound = std::pow(r, Q + 1.0) / ((Q + 1.0) * one_minus_r) / (2.0 * kPi);
    out.terms = Q;
    return out;
}

SeriesValue green_series_auto(double L, double x1, double x2, double tol) {
    if (!(tol > 0.0)) throw DomainError("series tolerance must be positive");
    if (x2 == 0.0) throw DomainError("Fourier series of G does not converge absolutely on x2 = 0");
    if (std::abs(x2) < 1e-6 * L) throw DomainError("series evaluation refused for |x2| < 1e-6 L");
    const int Q = series_truncation(L, x2, tol);
    SeriesValue v = green_series(L, x1, x2, Q);
    v.converged = v.tail_bound < tol;
    return v;
}

SeriesValue green_series(const GreenEval& ev, double x1, double x2) {
    if (ev.truncation > 0) return green_series(ev.L, x1, x2, ev.truncation);
    return green_series_auto(ev.L, x1, x2, ev.tol);
}

double green_mode(double L, int q, double r) {
    require_length(L);
    if (q < 0) throw DomainError("mode index must be non-negative");
    if (q == 0) return -std::abs(r) / (2.0 * std::sqrt(L));
    return std::sqrt(L) / (4.0 * kPi * q) * std::exp(-2.0 * kPi * std::abs(r) * q / L);
}

double green_antiderivative2(double L, double a, double z) {
    require_length(L);
    const double k = 2.0 * kPi / L;
    const double az = std::abs(z);
    const double theta = k * wrap(a, L);  // [0, 2 pi)
    // sum_q cos(q theta)/q^2 on [0, 2 pi]
    const double c2 = kPi * kPi / 6.0 - 0.5 * kPi * theta + 0.25 * theta * theta;
    const double li3 = trilog_exp_real(k * az, theta);
    return -az * az * az / (12.0 * L) + L * L / (8.0 * kPi * kPi * kPi) * li3 +
           az * L / (4.0 * kPi * kPi) * c2;
}

TestFunction periodic_gaussian_bump(double L, double x0, double y0, double beta, double s) {
    require_length(L);
    if (!(s > 0.0)) throw DomainError("bump width must be positive");
    const double k = 2.0 * kPi / L;
    TestFunction f;
    f.phi = [=](double x1, double x2) {
        const double d = x2 - y0;
        return std::exp(beta * (std::cos(k * (x1 - x0)) - 1.0)) * std::exp(-d * d / (2.0 * s * s));
    };
    f.laplacian = [=](double x1, double x2) {
        const double c = std::cos(k * (x1 - x0));
        const double sn = std::sin(k * (x1 - x0));
        const double A = std::exp(beta * (c - 1.0));
        const double App = (beta * beta * k * k * sn * sn - beta * k * k * c) * A;
        const double d = x2 - y0;
        const double B = std::exp(-d * d / (2.0 * s * s));
        const double Bpp = (d * d / (s * s * s * s) - 1.0 / (s * s)) * B;
        return App * B + A * Bpp;
    };
    f.x2_min = y0 - 10.0 * s;
    f.x2_max = y0 + 10.0 * s;
    return f;
}

TestFunction combine(const TestFunction& f, double alpha, const TestFunction& g, double beta) {
    TestFunction h;
    h.phi = [=](double x1, double x2) { return alpha * f.phi(x1, x2) + beta * g.phi(x1, x2); };
    h.laplacian = [=](double x1, double x2) {
        return alpha * f.laplacian(x1, x2) + beta * g.laplacian(x1, x2);
    };
    h.x2_min = std::min(f.x2_min, g.x2_min);
    h.x2_max = std::max(f.x2_max, g.x2_max);
    return h;
}

namespace {

double delta_integral(double L, const TestFunction& f, const DeltaQuadrature& q, int refine) {
    const double eps0 = q.excision_radius * L;
    const double R = q.outer_radius * L;
    const double R_inner = 0.5 * R;
    const double k = 2.0 * kPi / L;
    const auto cutoff = [&](double r) { return smooth_step_down((r - R_inner) / (R - R_inner)); };

    // Disc: free-space kernel -(1/2pi) log(k r) integrated against the value
    // of -Laplace phi at the origin.
    const double disc = -f.laplacian(0.0, 0.0) *
                        (eps0 * eps0 / 4.0 - eps0 * eps0 / 2.0 * std::log(k * eps0));

    // Polar patch eps0 <= r <= R weighted by the cutoff.
    const int n_theta = q.angular_points * refine;
    const int n_rpan = q.radial_panels * refine;
    const double ratio = std::pow(R / eps0, 1.0 / n_rpan);
    double polar = 0.0;
    double r0 = eps0;
    for (int p = 0; p < n_rpan; ++p) {
        const double r1 = r0 * ratio;
        polar += Gauss::integrate(
            [&](double r) {
                double ring = 0.0;
                for (int t = 0; t < n_theta; ++t) {
                    const double th = 2.0 * kPi * t / n_theta;
                    const double x1 = r * std::cos(th);
                    const double x2 = r * std::sin(th);
                    ring += green_closed(L, x1, x2) * -f.laplacian(x1, x2);
                }
                return r * cutoff(r) * ring * (2.0 * kPi / n_theta);
            },
            r0, r1);
        r0 = r1;
    }

    // Rectangle: periodic trapezoid in x1 over [-L/2, L/2), Gauss panels in x2,
    // integrand weighted by (1 - cutoff).
    const int n_x1 = q.x1_points * refine;
    const int n_x2pan = q.x2_panels * refine;
    const double ylo = std::min(f.x2_min, -R);
    const double yhi = std::max(f.x2_max, R);
    const double hy = (yhi - ylo) / n_x2pan;
    double rect = 0.0;
    for (int p = 0; p < n_x2pan; ++p) {
        rect += Gauss::integrate(
            [&](double x2) {
                double row = 0.0;
                for (int i = 0; i < n_x1; ++i) {
                    const double x1 = -0.5 * L + L * i / n_x1;
                    const double r = std::hypot(x1, x2);
                    const double w = 1.0 - cutoff(r);
                    if (w == 0.0) continue;
                    row += w * green_closed(L, x1, x2) * -f.laplacian(x1, x2);
                }
                return row * (L / n_x1);
            },
            ylo + p * hy, ylo + (p + 1) * hy);
    }
    return disc + polar + rect;
}

}  // namespace

DeltaIdentityResult check_delta_identity(double L, const TestFunction& f, const DeltaQuadrature& quad) {
    require_length(L);
    if (!(quad.outer_radius > quad.excision_radius) || quad.outer_radius >= 0.5) {
        throw DomainError("delta-identity quadrature needs excision < outer radius < L/2");
    }
    const double fine = delta_integral(L, f, quad, 2);
    const double coarse = delta_integral(L, f, quad, 1);
    DeltaIdentityResult res;
    res.integral = fine;
    res.phi_at_origin = f.phi(0.0, 0.0);
    res.residual = std::abs(fine - res.phi_at_origin);
    res.error_estimate = std::abs(fine - coarse);
    if (res.error_estimate > quad.tolerance) {
        throw ConvergenceError("delta-identity quadrature did not converge", res.error_estimate);
    }
    return res;
}

}  // namespace layerstab
