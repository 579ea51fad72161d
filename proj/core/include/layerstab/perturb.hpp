#pragma once

#include <functional>
#include <string>
#include <vector>

#include "layerstab/model.hpp"

namespace layerstab {

/// Admissible perturbation classes: equal-mass bilayer (Pb), mass-preserving
/// bilayer (PbM), and the monolayer analogues (Pm, PmM).
enum class PerturbationClass { Pb, PbM, Pm, PmM };

std::string to_string(PerturbationClass cls);

/// Truncated Fourier spectra of the interface displacements p_1..p_n in the
/// normalised basis 1/sqrt(L), sqrt(2/L) cos(2 pi j x/L), sqrt(2/L) sin(...).
/// Interface indices are 0-based in the API (i = 0 is p_1).
class PerturbationSpectrum {
public:
    PerturbationSpectrum(int n_interfaces, int J, double L);

    int interfaces() const noexcept { return n_; }
    int order() const noexcept { return J_; }
    double length() const noexcept { return L_; }

    /// Cosine coefficient a_{i,j}, j = 0..J.
    double a(int i, int j) const;
    /// Sine coefficient b_{i,j}, j = 1..J.
    double b(int i, int j) const;
    void set_a(int i, int j, double value);
    void set_b(int i, int j, double value);

    /// Displacements p_i(x1) for every interface.
    std::vector<double> synthesize(double x1) const;
    /// Derivatives p_i'(x1).
    std::vector<double> synthesize_derivative(double x1) const;

    /// p_i and p_i' on the uniform grid x_k = k L / N, k = 0..N-1; returned
    /// row-major as [i * N + k].
    void sample(int N, std::vector<double>& values, std::vector<double>& derivatives) const;

    /// int_0^L p_i = sqrt(L) a_{i,0}.
    double integral(int i) const;
    /// max over sampled points of |p_i| over all interfaces.
    double sup_norm() const;

    PerturbationSpectrum scaled(double factor) const;

private:
    int n_;
    int J_;
    double L_;
    std::vector<double> a_;  // n * (J+1)
    std::vector<double> b_;  // n * (J+1), column 0 unused
};

/// Fourier coefficients of uniformly sampled periodic profiles
/// (samples[i][k] = p_i(k L / N)). Needs N >= 4J, else AliasingError.
PerturbationSpectrum from_profiles(const std::vector<std::vector<double>>& samples, double L, int J);

struct ClassVerdict {
    bool ok = true;
    std::string violated;  ///< empty when ok
    double residual = 0.0;
};

/// Checks the mass constraints of a class with absolute tolerance
/// 1e-12 sqrt(L).
ClassVerdict validate(const PerturbationSpectrum& spec, PerturbationClass cls);

/// Interface graphs of a perturbed structure. Bilayer: d+e p1, 2d+e p2,
/// -d-e p3, -2d-e p4. Monolayer: e p1, d+e p2, 2d+e p3.
class PerturbedInterfaces {
public:
    /// Interface i (0-based, same order as the spectrum) at x1.
    double position(int i, double x1) const;
    int count() const noexcept { return static_cast<int>(base_.size()); }
    double epsilon() const noexcept { return eps_; }
    /// Jump of w = u - v across interface i going upward in x2.
    double jump(int i) const { return jump_[i]; }
    /// Orientation: the curve is base_i + orientation_i * eps * p_i.
    double orientation(int i) const { return orient_[i]; }
    double base(int i) const { return base_[i]; }
    const PerturbationSpectrum& spectrum() const { return spec_; }

private:
    friend PerturbedInterfaces perturbed_interfaces(const LayerStructure&, const PerturbationSpectrum&,
                                                    double);
    PerturbedInterfaces(PerturbationSpectrum spec, double eps) : spec_(std::move(spec)), eps_(eps) {}

    PerturbationSpectrum spec_;
    double eps_;
    std::vector<double> base_;
    std::vector<double> orient_;
    std::vector<double> jump_;
};

/// Throws ValidationError on interface-count or length mismatch and
/// CrossingError (with the offending x1) if neighbouring curves touch.
PerturbedInterfaces perturbed_interfaces(const LayerStructure& s, const PerturbationSpectrum& spec,
                                         double eps);

/// Minimum vertical gap between neighbouring interfaces, together with the x1
/// where it is attained.
struct GapInfo {
    double gap;
    double x1;
};
GapInfo minimum_gap(const PerturbedInterfaces& curves);

}  // namespace layerstab
