#include "foel/spin_algebra.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "foel/errors.hpp"

namespace foel {

LocalSpinOps spin_matrices(HalfInt s) {
  if (s.twice() < 0) throw InputError("spin magnitude must be non-negative");
  const int d = s.multiplet_dim();
  LocalSpinOps ops{s, MatrixXd::Zero(d, d), MatrixXd::Zero(d, d), MatrixXd::Zero(d, d)};
  const double sv = s.value();
  for (int a = 0; a < d; ++a) {
    const double m = sv - a;
    ops.sz(a, a) = m;
    // <m+1|S^+|m> = sqrt(s(s+1) - m(m+1)); |m+1> sits at index a-1.
    if (a > 0) ops.splus(a - 1, a) = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
  }
  ops.sminus = ops.splus.transpose();
  return ops;
}

HilbertShape::HilbertShape(std::vector<int> local_dims) : local_dims_(std::move(local_dims)) {
  strides_.assign(local_dims_.size(), 1);
  dim_ = 1;
  for (std::size_t i = local_dims_.size(); i-- > 0;) {
    if (local_dims_[i] < 2) throw InputError("local dimension must be at least 2 (spin >= 1/2)");
    strides_[i] = dim_;
    dim_ *= static_cast<std::size_t>(local_dims_[i]);
  }
}

HilbertShape HilbertShape::from_spins(const std::vector<HalfInt>& spins) {
  std::vector<int> dims;
  dims.reserve(spins.size());
  for (HalfInt s : spins) dims.push_back(s.multiplet_dim());
  return HilbertShape(std::move(dims));
}

std::vector<HalfInt> HilbertShape::spins() const {
  std::vector<HalfInt> out;
  out.reserve(local_dims_.size());
  for (std::size_t i = 0; i < local_dims_.size(); ++i) out.push_back(spin(i));
  return out;
}

HalfInt HilbertShape::max_spin() const {
  HalfInt total;
  for (std::size_t i = 0; i < local_dims_.size(); ++i) total += spin(i);
  return total;
}

int HilbertShape::twice_m(std::size_t index) const {
  int m2 = 0;
  for (std::size_t i = 0; i < local_dims_.size(); ++i) m2 += (local_dims_[i] - 1) - 2 * digit(index, i);
  return m2;
}

RealOperator::RealOperator(SparseMatrix matrix, BasisTag tag) : matrix_(std::move(matrix)), tag_(std::move(tag)) {
  if (matrix_.rows() != matrix_.cols()) throw InputError("RealOperator must be square");
  if (tag_.kind == BasisTag::Kind::TensorProduct && !tag_.local_dims.empty()) {
    std::size_t d = 1;
    for (int x : tag_.local_dims) d *= static_cast<std::size_t>(x);
    if (d != static_cast<std::size_t>(matrix_.rows())) throw InputError("operator dimension does not match basis tag");
  }
  matrix_.makeCompressed();
}

namespace {

BasisTag tensor_tag(const HilbertShape& shape) {
  return BasisTag{BasisTag::Kind::TensorProduct, shape.local_dims(), "tensor"};
}

}  // namespace

RealOperator RealOperator::zero(const HilbertShape& shape) {
  const auto n = static_cast<Eigen::Index>(shape.dim());
  return RealOperator(SparseMatrix(n, n), tensor_tag(shape));
}

RealOperator RealOperator::identity(const HilbertShape& shape) {
  const auto n = static_cast<Eigen::Index>(shape.dim());
  SparseMatrix id(n, n);
  id.setIdentity();
  return RealOperator(std::move(id), tensor_tag(shape));
}

double RealOperator::asymmetry() const {
  SparseMatrix diff = matrix_ - SparseMatrix(matrix_.transpose());
  double worst = 0.0;
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

double RealOperator::max_abs() const {
  double worst = 0.0;
  for (Eigen::Index k = 0; k < matrix_.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(matrix_, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

RealOperator RealOperator::operator+(const RealOperator& o) const {
  if (o.dim() != dim()) throw InputError("dimension mismatch in operator sum");
  return RealOperator(SparseMatrix(matrix_ + o.matrix_), tag_);
}

RealOperator RealOperator::operator-(const RealOperator& o) const {
  if (o.dim() != dim()) throw InputError("dimension mismatch in operator difference");
  return RealOperator(SparseMatrix(matrix_ - o.matrix_), tag_);
}

RealOperator RealOperator::operator*(const RealOperator& o) const {
  if (o.dim() != dim()) throw InputError("dimension mismatch in operator product");
  return RealOperator(SparseMatrix(matrix_ * o.matrix_), tag_);
}

RealOperator RealOperator::operator*(double c) const { return RealOperator(SparseMatrix(c * matrix_), tag_); }

RealOperator& RealOperator::operator+=(const RealOperator& o) {
  if (o.dim() != dim()) throw InputError("dimension mismatch in operator sum");
  matrix_ += o.matrix_;
  matrix_.makeCompressed();
  return *this;
}

double commutator_norm(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix c = a * b - b * a;
  double worst = 0.0;
  for (Eigen::Index k = 0; k < c.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(c, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

double commutator_norm(const RealOperator& a, const RealOperator& b) { return commutator_norm(a.sparse(), b.sparse()); }

RealOperator embed_site(const HilbertShape& shape, std::size_t site, const MatrixXd& local) {
  if (site >= shape.num_sites()) throw InputError("site index out of range");
  const int d = shape.local_dims()[site];
  if (local.rows() != d || local.cols() != d) throw InputError("local operator size does not match site dimension");
  const std::size_t stride = shape.stride(site);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(shape.dim() * static_cast<std::size_t>(d));
  for (std::size_t col = 0; col < shape.dim(); ++col) {
    const int a = shape.digit(col, site);
    const std::size_t base = col - static_cast<std::size_t>(a) * stride;
    for (int b = 0; b < d; ++b) {
      const double v = local(b, a);
      if (v != 0.0) triplets.emplace_back(base + static_cast<std::size_t>(b) * stride, col, v);
    }
  }
  const auto n = static_cast<Eigen::Index>(shape.dim());
  SparseMatrix m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return RealOperator(std::move(m), tensor_tag(shape));
}

RealOperator embed_pair(const HilbertShape& shape, std::size_t u, std::size_t v, const MatrixXd& pair_op) {
  if (u >= shape.num_sites() || v >= shape.num_sites() || u == v) throw InputError("invalid site pair");
  const int du = shape.local_dims()[u];
  const int dv = shape.local_dims()[v];
  if (pair_op.rows() != du * dv || pair_op.cols() != du * dv) throw InputError("pair operator size mismatch");
  const std::size_t su = shape.stride(u);
  const std::size_t sv = shape.stride(v);
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t col = 0; col < shape.dim(); ++col) {
    const int a = shape.digit(col, u);
    const int b = shape.digit(col, v);
    const std::size_t base = col - static_cast<std::size_t>(a) * su - static_cast<std::size_t>(b) * sv;
    const int in = a * dv + b;
    for (int a2 = 0; a2 < du; ++a2) {
      for (int b2 = 0; b2 < dv; ++b2) {
        const double val = pair_op(a2 * dv + b2, in);
        if (val != 0.0)
          triplets.emplace_back(base + static_cast<std::size_t>(a2) * su + static_cast<std::size_t>(b2) * sv, col, val);
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(shape.dim());
  SparseMatrix m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return RealOperator(std::move(m), tensor_tag(shape));
}

TotalSpinOps total_spin_ops(const HilbertShape& shape) {
  TotalSpinOps ops{RealOperator::zero(shape), RealOperator::zero(shape), RealOperator::zero(shape)};
  for (std::size_t x = 0; x < shape.num_sites(); ++x) {
    const LocalSpinOps local = spin_matrices(shape.spin(x));
    ops.s3 += embed_site(shape, x, local.sz);
    ops.splus += embed_site(shape, x, local.splus);
    ops.sminus += embed_site(shape, x, local.sminus);
  }
  return ops;
}

RealOperator casimir(const HilbertShape& shape) {
  const TotalSpinOps t = total_spin_ops(shape);
  return t.s3 * t.s3 + 0.5 * (t.splus * t.sminus + t.sminus * t.splus);
}

RealOperator heisenberg_bond(HalfInt s1, HalfInt s2) {
  const LocalSpinOps a = spin_matrices(s1);
  const LocalSpinOps b = spin_matrices(s2);
  MatrixXd bond = Eigen::kroneckerProduct(a.sz, b.sz);
  bond += 0.5 * (Eigen::kroneckerProduct(a.splus, b.sminus) + Eigen::kroneckerProduct(a.sminus, b.splus)).eval();
  BasisTag tag{BasisTag::Kind::TensorProduct, {s1.multiplet_dim(), s2.multiplet_dim()}, "two-site"};
  return RealOperator(bond.sparseView(), std::move(tag));
}

}  // namespace foel
