#pragma once

#include <functional>

namespace layerstab {

/// Series evaluation settings: either a fixed truncation Q or a tolerance
/// from which Q is chosen.
struct GreenEval {
    double L = 1.0;
    int truncation = 0;  ///< Q; 0 means "choose from tol"
    double tol = 1e-14;
};

inline constexpr int kMaxSeriesTerms = 1'000'000;

/// Closed-form periodic-strip Green's function of -Laplace,
/// -(1/4pi) log(2 cosh(2 pi x2/L) - 2 cos(2 pi x1/L)), evaluated in the
/// overflow-safe form -|x2|/(2L) - (1/4pi) log(1 - 2 r cos + r^2).
/// Throws SingularPointError at the origin (mod L) and DomainError for L <= 0.
double green_closed(double L, double x1, double x2);

struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;  ///< bound on |value - G|
    int terms = 0;            ///< Q actually used
    bool converged = true;    ///< false when the term cap was hit before tol
};

/// Partial Fourier sum -|x2|/(2L) + (1/2pi) sum_{q<=Q} r^q cos(q k x1)/q with
/// the geometric tail bound. x2 = 0 throws DomainError; |x2| < 1e-6 L is
/// refused because the series is practically non-convergent there.
SeriesValue green_series(double L, double x1, double x2, int Q);

/// Same, with Q the smallest truncation whose tail bound is below tol
/// (capped at kMaxSeriesTerms).
SeriesValue green_series_auto(double L, double x1, double x2, double tol);

SeriesValue green_series(const GreenEval& ev, double x1, double x2);

/// Smallest Q whose tail bound is below tol for the given |x2|.
int series_truncation(double L, double x2, double tol);

/// Fourier transform in x1 with respect to the normalised basis:
/// -|r|/(2 sqrt L) for q = 0, sqrt(L)/(4 pi q) exp(-2 pi |r| q/L) for q >= 1.
double green_mode(double L, int q, double r);

/// Even second antiderivative of G in x2:
/// d^2/dz^2 green_antiderivative2(L, a, z) = G(a, z) away from the origin.
/// Continuous everywhere (including z = 0), L-periodic and even in a, even
/// in z. Used by the energy oracle to do the x2 integrals in closed form.
double green_antiderivative2(double L, double a, double z);

/// Smooth test function on the strip together with its Laplacian.
struct TestFunction {
    std::function<double(double, double)> phi;
    std::function<double(double, double)> laplacian;
    double x2_min = 0.0;  ///< phi is negligible (below 1e-20) outside [x2_min, x2_max]
    double x2_max = 0.0;
};

/// exp(beta (cos(2 pi (x1-x0)/L) - 1)) * exp(-(x2-y0)^2 / (2 s^2)), with its
/// exact Laplacian. Effective x2-support is y0 +- 10 s.
TestFunction periodic_gaussian_bump(double L, double x0, double y0, double beta, double s);

/// Linear combination alpha f + beta g.
TestFunction combine(const TestFunction& f, double alpha, const TestFunction& g, double beta);

struct DeltaQuadrature {
    double excision_radius = 1e-3;  ///< fraction of L
    double outer_radius = 0.25;     ///< fraction of L; polar patch radius
    int radial_panels = 14;         ///< geometric panels on [excision, outer]
    int angular_points = 128;
    int x1_points = 256;            ///< periodic trapezoid in x1
    int x2_panels = 48;             ///< Gauss-Legendre panels in x2
    double tolerance = 1e-6;        ///< max accepted refinement difference
};

struct DeltaIdentityResult {
    double integral = 0.0;        ///< int G (-Laplace phi)
    double phi_at_origin = 0.0;
    double residual = 0.0;        ///< |integral - phi(0,0)|
    double error_estimate = 0.0;  ///< |I(full) - I(half resolution)|
};

/// Checks that G is a fundamental solution: int G (-Laplace phi) = phi(0,0).
/// The disc of radius excision_radius*L around the singularity is handled
/// with the free-space logarithmic kernel, a smooth cutoff splits the rest
/// into a polar patch and a periodic rectangle. Throws ConvergenceError with
/// the achieved estimate when the refinement difference exceeds tolerance.
DeltaIdentityResult check_delta_identity(double L, const TestFunction& f,
                                         const DeltaQuadrature& quad = {});

}  // namespace layerstab
