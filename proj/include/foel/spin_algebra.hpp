#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstddef>
#include <string>
#include <vector>

#include "foel/half_int.hpp"

namespace foel {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Standard spin-s matrices in the S^3 eigenbasis |s>, |s-1>, ..., |-s>.
///
/// S^1 and S^2 are never formed; transverse terms go through the ladder
/// operators so every operator in the library stays real.
struct LocalSpinOps {
  HalfInt s;
  MatrixXd sz;
  MatrixXd splus;
  MatrixXd sminus;
};

LocalSpinOps spin_matrices(HalfInt s);

/// Local dimensions 2s_x+1 of a tensor-product Hilbert space.
///
/// Site 0 is the slowest-varying tensor index; local index a carries
/// S^3 eigenvalue s_x - a.
class HilbertShape {
 public:
  HilbertShape() = default;
  explicit HilbertShape(std::vector<int> local_dims);
  static HilbertShape from_spins(const std::vector<HalfInt>& spins);

  const std::vector<int>& local_dims() const { return local_dims_; }
  std::size_t num_sites() const { return local_dims_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t stride(std::size_t site) const { return strides_[site]; }
  int digit(std::size_t index, std::size_t site) const {
    return static_cast<int>((index / strides_[site]) % static_cast<std::size_t>(local_dims_[site]));
  }
  HalfInt spin(std::size_t site) const { return HalfInt::from_twice(local_dims_[site] - 1); }
  std::vector<HalfInt> spins() const;
  /// Sum of s_x.
  HalfInt max_spin() const;
  /// Twice the total S^3 eigenvalue of a product-basis state.
  int twice_m(std::size_t index) const;

  bool operator==(const HilbertShape&) const = default;

 private:
  std::vector<int> local_dims_;
  std::vector<std::size_t> strides_;
  std::size_t dim_ = 1;
};

/// What the rows/columns of a RealOperator refer to.
struct BasisTag {
  enum class Kind { TensorProduct, Configuration, Diagram };
  Kind kind = Kind::TensorProduct;
  std::vector<int> local_dims;  // TensorProduct only
  std::string label;
};

/// Real symmetric matrix on a tensor-product, configuration or diagram basis.
///
/// Storage is sparse; dense() materializes a copy.
class RealOperator {
 public:
  RealOperator() = default;
  RealOperator(SparseMatrix matrix, BasisTag tag);
  static RealOperator zero(const HilbertShape& shape);
  static RealOperator identity(const HilbertShape& shape);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const SparseMatrix& sparse() const { return matrix_; }
  MatrixXd dense() const { return MatrixXd(matrix_); }
  const BasisTag& tag() const { return tag_; }

  /// Largest |A_ij - A_ji|.
  double asymmetry() const;
  double max_abs() const;
  VectorXd apply(const VectorXd& v) const { return matrix_ * v; }

  RealOperator operator+(const RealOperator& o) const;
  RealOperator operator-(const RealOperator& o) const;
  RealOperator operator*(const RealOperator& o) const;
  RealOperator operator*(double c) const;
  RealOperator& operator+=(const RealOperator& o);

 private:
  SparseMatrix matrix_;
  BasisTag tag_;
};

inline RealOperator operator*(double c, const RealOperator& a) { return a * c; }

/// Entrywise max of |AB - BA|.
double commutator_norm(const SparseMatrix& a, const SparseMatrix& b);
double commutator_norm(const RealOperator& a, const RealOperator& b);

/// local acting on `site`, identity elsewhere.
RealOperator embed_site(const HilbertShape& shape, std::size_t site, const MatrixXd& local);

/// A two-site operator on C^{d_u} (x) C^{d_v}, with u's index slower, placed on sites u and v.
/// u and v need not be adjacent and u > v is allowed.
RealOperator embed_pair(const HilbertShape& shape, std::size_t u, std::size_t v, const MatrixXd& pair_op);

struct TotalSpinOps {
  RealOperator s3;
  RealOperator splus;
  RealOperator sminus;
};

TotalSpinOps total_spin_ops(const HilbertShape& shape);

/// C = (S^3)^2 + (S^+ S^- + S^- S^+)/2 with eigenvalues S(S+1).
RealOperator casimir(const HilbertShape& shape);

/// S_1 . S_2 = S^3 (x) S^3 + (S^+ (x) S^- + S^- (x) S^+)/2 on two sites.
RealOperator heisenberg_bond(HalfInt s1, HalfInt s2);

}  // namespace foel
