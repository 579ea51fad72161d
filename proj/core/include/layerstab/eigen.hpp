#pragma once

#include <array>
#include <vector>

namespace layerstab {

/// Dense square matrix of order at most 4, row-major.
class SmallMatrix {
public:
    explicit SmallMatrix(int n = 0);

    int size() const noexcept { return n_; }
    double& operator()(int i, int j) { return m_[i * 4 + j]; }
    double operator()(int i, int j) const { return m_[i * 4 + j]; }

    /// Quadratic form x^T M x.
    double quadratic(const std::vector<double>& x) const;
    std::vector<double> apply(const std::vector<double>& x) const;
    double max_abs() const;
    /// Largest |M(i,j) - M(j,i)|.
    double asymmetry() const;

private:
    int n_;
    std::array<double, 16> m_{};
};

struct Spectrum {
    std::vector<double> eigenvalues;                ///< ascending
    std::vector<std::vector<double>> eigenvectors;  ///< eigenvectors[k] belongs to eigenvalues[k]
};

/// Cyclic Jacobi rotations for symmetric matrices of order <= 4 (at most 50
/// sweeps). Eigenvectors are orthonormal with their largest-magnitude
/// component positive. Throws ValidationError when |M - M^T| > 1e-12 max|M|
/// and ConvergenceError if the sweeps do not annihilate the off-diagonal.
Spectrum symmetric_eigen(const SmallMatrix& m);

}  // namespace layerstab
