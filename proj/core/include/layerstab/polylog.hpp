#pragma once

#include <complex>

namespace layerstab {

/// Trilogarithm Li3(exp(mu)) for Re(mu) <= 0, mu != 0 unless Im(mu) is a
/// nonzero multiple of 2*pi. Uses the direct power series when |exp(mu)| is
/// small and the logarithmic expansion around mu = 0 otherwise.
std::complex<double> trilog_exp(std::complex<double> mu);

/// Real part of Li3(exp(-s + i*theta)) for s >= 0.
double trilog_exp_real(double s, double theta);

}  // namespace layerstab
