#include "foel/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

#include "foel/errors.hpp"

namespace foel::linalg {

VectorXd symmetric_eigenvalues(const MatrixXd& a) {
  if (a.rows() == 0) return VectorXd();
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
  return solver.eigenvalues();
}

MatrixXd kernel_basis(const MatrixXd& b, double rel_tol) {
  const Eigen::Index n = b.cols();
  if (b.rows() == 0 || n == 0) return MatrixXd::Identity(n, n);
  Eigen::BDCSVD<MatrixXd> svd(b, Eigen::ComputeFullV);
  const VectorXd& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  if (largest > 0.0)
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > rel_tol * largest) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

MatrixXd restrict(const SparseMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  MatrixXd out = MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  std::vector<Eigen::Index> col_pos(static_cast<std::size_t>(a.cols()), -1);
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos[cols[j]] = static_cast<Eigen::Index>(j);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (SparseMatrix::InnerIterator it(a, static_cast<Eigen::Index>(rows[i])); it; ++it) {
      const Eigen::Index j = col_pos[static_cast<std::size_t>(it.col())];
      if (j >= 0) out(static_cast<Eigen::Index>(i), j) = it.value();
    }
  }
  return out;
}

VectorXd real_spectrum(const MatrixXd& a, double imag_tol) {
  if (a.rows() == 0) return VectorXd();
  Eigen::EigenSolver<MatrixXd> solver(a, false);
  if (solver.info() != Eigen::Success) throw NumericalError("general eigensolver failed");
  const Eigen::VectorXcd ev = solver.eigenvalues();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  VectorXd out(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i).imag()) > imag_tol * scale) throw NumericalError("spectrum has a non-real eigenvalue");
    out(i) = ev(i).real();
  }
  std::sort(out.begin(), out.end());
  return out;
}

double gershgorin_radius(const SparseMatrix& a) {
  double radius = 0.0;
  for (Eigen::Index k = 0; k < a.outerSize(); ++k) {
    double row = 0.0;
    for (SparseMatrix::InnerIterator it(a, k); it; ++it) row += std::abs(it.value());
    radius = std::max(radius, row);
  }
  return radius;
}

LanczosResult lanczos_smallest(const MatVec& apply, std::size_t dim, double tol, int max_iter, unsigned seed) {
  if (dim == 0) throw InputError("lanczos on empty space");
  const auto n = static_cast<Eigen::Index>(dim);
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
  v.normalize();

  const int krylov_max = std::min<int>(max_iter, static_cast<int>(dim));
  MatrixXd basis(n, krylov_max);
  std::vector<double> alpha;
  std::vector<double> beta;
  LanczosResult result;

  for (int j = 0; j < krylov_max; ++j) {
    basis.col(j) = v;
    VectorXd w = apply(v);
    const double a = v.dot(w);
    alpha.push_back(a);
    // Full reorthogonalization, twice for stability.
    for (int pass = 0; pass < 2; ++pass) w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
    const double b = w.norm();

    const int m = j + 1;
    MatrixXd tri = MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      tri(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<MatrixXd> small(tri);
    const double theta = small.eigenvalues()(0);
    const VectorXd y = small.eigenvectors().col(0);
    result.eigenvalue = theta;
    result.iterations = m;
    // Residual of the Ritz pair is |beta_m * y_m|.
    const double ritz_residual = std::abs(b * y(m - 1));
    if (ritz_residual <= tol || b <= 1e-14 || m == krylov_max) {
      result.eigenvector = basis.leftCols(m) * y;
      result.eigenvector.normalize();
      result.residual = (apply(result.eigenvector) - theta * result.eigenvector).norm();
      if (result.residual <= tol) return result;
      if (m == krylov_max) break;
    }
    beta.push_back(b);
    v = w / b;
  }
  throw NumericalError("lanczos did not converge: residual " + std::to_string(result.residual));
}

}  // namespace foel::linalg
