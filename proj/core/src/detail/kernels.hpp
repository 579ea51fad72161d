#pragma once

// Cancellation-free building blocks for the mode-1 boundary curves. All
// functions take l = log(upsilon) or log(nu) (< 0) directly.

namespace layerstab::detail {

/// tanh(l) - l + l^3/3
double tanh_remainder(double l);

/// 9 - 12 e^{2l} + 3 e^{4l} + 12 l + 4 l^3 (the "P" polynomial of zeta_{1,2}).
double bilayer_p(double l);

/// 6 (e^{2l} - 1) - 12 l + 4 l^3, so that f(nu) = l^3 * monolayer_f_core(l).
double monolayer_f_core(double l);

struct RootPair {
    double first;   ///< smaller root
    double second;  ///< larger root
};

/// (zeta_1, zeta_2) at log(upsilon) = l.
RootPair zeta_roots(double l);

/// (sigma_1, sigma_2) at log(nu) = l.
RootPair sigma_roots(double l);

}  // namespace layerstab::detail
