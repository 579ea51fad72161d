#include "detail/kernels.hpp"

#include <cmath>
#include <iterator>

namespace layerstab::detail {

namespace {

// Taylor coefficients of tanh(x) - x + x^3/3 for x^5, x^7, ..., x^33.
constexpr double kTanhTail[] = {
    0.13333333333333333,     -0.05396825396825397,    0.021869488536155203,   -0.008863235529902197,
    0.003592128036572481,    -0.0014558343870513183,  0.000590027440945586,   -0.00023912911424355248,
    9.691537956929451e-05,   -3.927832388331683e-05,  1.5918905069328964e-05, -6.451689215655431e-06,
    2.6147711512907546e-06,  -1.0597268320104654e-06, 4.294911078273806e-07,
};

constexpr double kSeriesCut = 0.5;

}  // namespace

double tanh_remainder(double l) {
    if (std::abs(l) >= kSeriesCut) return std::tanh(l) - l + l * l * l / 3.0;
    const double l2 = l * l;
    double sum = 0.0;
    for (int k = static_cast<int>(std::size(kTanhTail)) - 1; k >= 0; --k) sum = sum * l2 + kTanhTail[k];
    return sum * l2 * l2 * l;
}

double bilayer_p(double l) {
    if (std::abs(l) >= kSeriesCut) {
        const double u2 = std::exp(2.0 * l);
        return 9.0 - 12.0 * u2 + 3.0 * u2 * u2 + 12.0 * l + 4.0 * l * l * l;
    }
    // Coefficient of l^k for k >= 4 is (3*4^k - 12*2^k)/k!; for k = 3 it is 20.
    double sum = 20.0 * l * l * l;
    double p4 = 4.0 * 4.0 * 4.0, p2 = 8.0, lk = l * l * l, fact = 6.0;
    for (int k = 4; k <= 40; ++k) {
        p4 *= 4.0;
        p2 *= 2.0;
        lk *= l;
        fact *= k;
        const double term = (3.0 * p4 - 12.0 * p2) / fact * lk;
        sum += term;
        if (std::abs(term) < 1e-19 * std::abs(sum)) break;
    }
    return sum;
}

double monolayer_f_core(double l) {
    if (std::abs(l) >= kSeriesCut) return 6.0 * std::expm1(2.0 * l) - 12.0 * l + 4.0 * l * l * l;
    // 6 sum_{k>=2} (2l)^k/k! + 4 l^3
    double sum = 4.0 * l * l * l;
    double pk = 2.0 * l, fact = 1.0;
    for (int k = 2; k <= 40; ++k) {
        pk *= 2.0 * l;
        fact *= k;
        const double term = 6.0 * pk / fact;
        sum += term;
        if (std::abs(term) < 1e-19 * std::abs(sum)) break;
    }
    return sum;
}

RootPair zeta_roots(double l) {
    const double l3 = l * l * l;
    const double P = bilayer_p(l);
    const double T = tanh_remainder(l);
    const double e4 = std::expm1(4.0 * l);  // upsilon^4 - 1
    const double a = P - 8.0 * l3;
    const double Q = a * a + 144.0 * e4 * T;
    const double sq = std::sqrt(Q);
    // Q - P^2 without forming either square.
    const double q_minus_p2 = -16.0 * l3 * (P - 4.0 * l3) + 144.0 * e4 * T;
    RootPair r;
    r.first = q_minus_p2 / (8.0 * l3 * (sq - P));
    r.second = (P - sq) / (8.0 * l3);
    return r;
}

RootPair sigma_roots(double l) {
    const double l3 = l * l * l;
    const double l6 = l3 * l3;
    const double f = l3 * monolayer_f_core(l);
    const double T = tanh_remainder(l);
    const double nu2p1 = 1.0 + std::exp(2.0 * l);
    const double g = f * f - 288.0 * l6 * nu2p1 * T;
    const double sg = std::sqrt(g);
    RootPair r;
    if (f >= 0.0) {
        r.second = (f + sg) / (16.0 * l6);
        r.first = 18.0 * nu2p1 * T / (f + sg);
    } else {
        r.first = (f - sg) / (16.0 * l6);
        r.second = -18.0 * nu2p1 * T / (sg - f);
    }
    return r;
}

}  // namespace layerstab::detail
