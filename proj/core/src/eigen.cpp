#include "layerstab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "layerstab/error.hpp"

namespace layerstab {

SmallMatrix::SmallMatrix(int n) : n_(n) {
    if (n < 0 || n > 4) throw ValidationError("SmallMatrix supports orders up to 4");
}

double SmallMatrix::quadratic(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_) throw ValidationError("vector length does not match matrix");
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s += x[i] * (*this)(i, j) * x[j];
    return s;
}

std::vector<double> SmallMatrix::apply(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_) throw ValidationError("vector length does not match matrix");
    std::vector<double> y(n_, 0.0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

double SmallMatrix::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j)));
    return m;
}

double SmallMatrix::asymmetry() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m;
}

Spectrum symmetric_eigen(const SmallMatrix& input) {
    const int n = input.size();
    const double scale = input.max_abs();
    if (input.asymmetry() > 1e-12 * std::max(scale, 1e-300)) {
        throw ValidationError("symmetric_eigen called with a non-symmetric matrix");
    }
    SmallMatrix a(n), v(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + input(j, i));
        v(i, i) = 1.0;
    }
    auto off = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };
    bool converged = false;
    for (int sweep = 0; sweep < 50; ++sweep) {
        if (off() <= 1e-300 || off() <= 1e-17 * scale) {
            converged = true;
            break;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged && off() > 1e-14 * scale) {
        throw ConvergenceError("Jacobi iteration did not converge in 50 sweeps", off());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });
    Spectrum out;
    for (int k : order) {
        out.eigenvalues.push_back(a(k, k));
        std::vector<double> col(n);
        int imax = 0;
        for (int i = 0; i < n; ++i) {
            col[i] = v(i, k);
            if (std::abs(col[i]) > std::abs(col[imax]) + 1e-14) imax = i;
        }
        if (col[imax] < 0.0)
            for (double& x : col) x = -x;
        out.eigenvectors.push_back(std::move(col));
    }
    return out;
}

}  // namespace layerstab
