#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <vector>

#include "foel/spin_algebra.hpp"

namespace foel::linalg {

/// Ascending eigenvalues of a real symmetric matrix.
VectorXd symmetric_eigenvalues(const MatrixXd& a);

/// Orthonormal basis (columns) of ker(b), b being rows x cols.
///
/// Singular values below rel_tol * (largest singular value) count as zero.
/// With rows == 0 the whole space is the kernel.
MatrixXd kernel_basis(const MatrixXd& b, double rel_tol = 1e-8);

/// Dense submatrix a[rows, cols].
MatrixXd restrict(const SparseMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);
inline MatrixXd restrict(const SparseMatrix& a, const std::vector<std::size_t>& idx) { return restrict(a, idx, idx); }

/// Eigenvalues of a general real matrix, sorted by real part.
/// Throws NumericalError if any imaginary part exceeds imag_tol.
VectorXd real_spectrum(const MatrixXd& a, double imag_tol = 1e-8);

struct LanczosResult {
  double eigenvalue = 0.0;
  VectorXd eigenvector;
  double residual = 0.0;
  int iterations = 0;
};

using MatVec = std::function<VectorXd(const VectorXd&)>;

/// Smallest eigenvalue of a symmetric operator by Lanczos with full
/// reorthogonalization. Converged when ||A v - lambda v|| <= tol.
/// Throws NumericalError when max_iter is reached first.
LanczosResult lanczos_smallest(const MatVec& apply, std::size_t dim, double tol = 1e-10, int max_iter = 500,
                               unsigned seed = 12345);

/// Gershgorin bound on the spectral radius.
double gershgorin_radius(const SparseMatrix& a);

}  // namespace foel::linalg
