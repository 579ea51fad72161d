#include "layerstab/polylog.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "layerstab/error.hpp"

namespace layerstab {

namespace {

constexpr int kExpansionTerms = 45;

// Coefficients of mu^(2m+2), m = 1..kExpansionTerms, in the expansion of
// Li3(e^mu) about mu = 0. They equal zeta(1-2m)/(2m+2)!.
const std::array<double, kExpansionTerms + 1>& expansion_coefficients() {
    static const auto table = [] {
        std::array<double, kExpansionTerms + 1> c{};
        const double two_pi = 2.0 * std::numbers::pi;
        for (int m = 1; m <= kExpansionTerms; ++m) {
            const double n = 2.0 * m;
            double val = 2.0 * std::riemann_zeta(n) / (n * (n + 1.0) * (n + 2.0));
            val /= std::pow(two_pi, n);
            c[m] = (m % 2 == 1) ? -val : val;
        }
        return c;
    }();
    return table;
}

constexpr double kZeta3 = 1.2020569031595942854;

}  // namespace

std::complex<double> trilog_exp(std::complex<double> mu) {
    using C = std::complex<double>;
    if (mu.real() > 0.0) throw DomainError("trilog_exp requires Re(mu) <= 0");
    // Reduce the imaginary part to (-pi, pi].
    const double two_pi = 2.0 * std::numbers::pi;
    double im = std::remainder(mu.imag(), two_pi);
    mu = C(mu.real(), im);

    if (mu.real() < -2.0) {
        const C w = std::exp(mu);
        C sum = 0.0;
        C wp = w;
        for (int q = 1; q < 200; ++q) {
            const C term = wp / (static_cast<double>(q) * q * q);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
            wp *= w;
        }
        return sum;
    }

    if (std::abs(mu) == 0.0) return kZeta3;

    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    const C mu2 = mu * mu;
    C sum = kZeta3 + zeta2 * mu + 0.5 * mu2 * (1.5 - std::log(-mu)) - mu2 * mu / 12.0;
    const auto& c = expansion_coefficients();
    C power = mu2 * mu2;
    for (int m = 1; m <= kExpansionTerms; ++m) {
        const C term = c[m] * power;
        sum += term;
        if (std::abs(term) < 1e-18) break;
        power *= mu2;
    }
    return sum;
}

double trilog_exp_real(double s, double theta) {
    return trilog_exp(std::complex<double>(-s, theta)).real();
}

}  // namespace layerstab
