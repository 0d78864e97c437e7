#include "foel/qgroup.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "foel/errors.hpp"
#include "foel/hamiltonians.hpp"
#include "foel/linalg.hpp"

namespace foel {

QParam QParam::from_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw InputError("q must lie in (0, 1)");
  return {q, 0.5 * (q + 1.0 / q)};
}

QParam QParam::from_delta(double delta) {
  if (!(delta > 1.0) || !std::isfinite(delta)) throw InputError("Delta must exceed 1");
  const double q = 1.0 / (delta + std::sqrt(delta * delta - 1.0));
  return {q, delta};
}

namespace {

HilbertShape half_chain(int length) {
  if (length < 1) throw InputError("chain length must be >= 1");
  return HilbertShape(std::vector<int>(static_cast<std::size_t>(length), 2));
}

BasisTag chain_tag(const HilbertShape& shape) { return {BasisTag::Kind::TensorProduct, shape.local_dims(), "tensor"}; }

}  // namespace

QTotalOps suq2_generators(int length, const QParam& qp) {
  const HilbertShape shape = half_chain(length);
  const auto L = static_cast<std::size_t>(length);
  const auto n = static_cast<Eigen::Index>(shape.dim());
  const double q = qp.q;
  std::vector<Eigen::Triplet<double>> s3, up, down, t;
  for (std::size_t i = 0; i < shape.dim(); ++i) {
    double m = 0.0;
    double tt = 1.0;
    for (std::size_t x = 0; x < L; ++x) {
      const bool minus = shape.digit(i, x) == 1;
      m += minus ? -0.5 : 0.5;
      tt *= minus ? q : 1.0 / q;
    }
    s3.emplace_back(i, i, m);
    t.emplace_back(i, i, tt);
    // Dressing factors: product of t over sites left of x (raising) or t^-1
    // over sites right of x (lowering).
    double left = 1.0;
    for (std::size_t x = 0; x < L; ++x) {
      const bool minus = shape.digit(i, x) == 1;
      if (minus) {
        up.emplace_back(i - shape.stride(x), i, left);
      } else {
        double right = 1.0;
        for (std::size_t y = x + 1; y < L; ++y) right *= shape.digit(i, y) == 1 ? 1.0 / q : q;
        down.emplace_back(i + shape.stride(x), i, right);
      }
      left *= minus ? q : 1.0 / q;
    }
  }
  auto make = [&](const std::vector<Eigen::Triplet<double>>& tr) {
    SparseMatrix m(n, n);
    m.setFromTriplets(tr.begin(), tr.end());
    return RealOperator(std::move(m), chain_tag(shape));
  };
  return {make(s3), make(up), make(down), make(t)};
}

RealOperator q_casimir(int length, const QParam& qp) {
  if (qp.q > 1.0 - 1e-6) throw InputError("q-Casimir diverges as q -> 1; need q <= 1 - 1e-6");
  const QTotalOps ops = suq2_generators(length, qp);
  const double q = qp.q;
  const double denom = (1.0 / q - q) * (1.0 / q - q);
  std::vector<Eigen::Triplet<double>> diag;
  const SparseMatrix& t = ops.t.sparse();
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    const double qt = q * t.coeff(i, i);
    diag.emplace_back(i, i, (1.0 / qt + qt) / denom);
  }
  SparseMatrix d(t.rows(), t.cols());
  d.setFromTriplets(diag.begin(), diag.end());
  return ops.splus * ops.sminus + RealOperator(std::move(d), ops.t.tag());
}

double q_casimir_value(HalfInt S, const QParam& qp) {
  const double q = qp.q;
  const double e = static_cast<double>(S.twice() + 1);
  return (std::pow(q, -e) + std::pow(q, e)) / ((1.0 / q - q) * (1.0 / q - q));
}

namespace {

struct QContext {
  HilbertShape shape;
  RealOperator h;
  QTotalOps ops;
  std::map<int, std::vector<std::size_t>> blocks;

  QContext(int length, const QParam& qp)
      : shape(half_chain(length)), h(build_xxz_chain(length, qp.delta)), ops(suq2_generators(length, qp)),
        blocks(s3_blocks(shape)) {}

  std::size_t block_size(int twice_m) const {
    auto it = blocks.find(twice_m);
    return it == blocks.end() ? 0 : it->second.size();
  }

  VectorXd spectrum(int twice_s) const {
    const std::size_t expected = block_size(twice_s) - block_size(twice_s + 2);
    const auto& from = blocks.at(twice_s);
    MatrixXd kernel;
    if (block_size(twice_s + 2) == 0) {
      kernel = MatrixXd::Identity(static_cast<Eigen::Index>(from.size()), static_cast<Eigen::Index>(from.size()));
    } else {
      kernel = linalg::kernel_basis(linalg::restrict(ops.splus.sparse(), blocks.at(twice_s + 2), from));
    }
    if (static_cast<std::size_t>(kernel.cols()) != expected)
      throw NumericalError("q-highest-weight kernel has dimension " + std::to_string(kernel.cols()) + ", expected " +
                           std::to_string(expected));
    const MatrixXd reduced = kernel.transpose() * linalg::restrict(h.sparse(), from) * kernel;
    return linalg::symmetric_eigenvalues(0.5 * (reduced + reduced.transpose()));
  }
};

}  // namespace

VectorXd q_sector_spectrum(int length, const QParam& qp, HalfInt S) {
  if (length < 2) throw InputError("XXZ chain needs L >= 2");
  const QContext ctx(length, qp);
  if (S.twice() < 0 || S.twice() > length || (length - S.twice()) % 2 != 0)
    throw InputError("S = " + S.str() + " is not a label of " + std::to_string(length) + " spin-1/2 sites");
  return ctx.spectrum(S.twice());
}

QSectorReport q_sector_energies(int length, const QParam& qp, double foel_tol) {
  if (length < 2) throw InputError("XXZ chain needs L >= 2");
  const QContext ctx(length, qp);
  QSectorReport report;
  for (int twice_s = length % 2; twice_s <= length; twice_s += 2) {
    const VectorXd ev = ctx.spectrum(twice_s);
    const HalfInt S = HalfInt::from_twice(twice_s);
    report.entries[S] = SectorEntry{ev(0), ev(ev.size() - 1), static_cast<std::size_t>(ev.size())};
    report.casimir_values[S] = q_casimir_value(S, qp);
  }
  report.foel = check_foel(report.entries, foel_tol);
  return report;
}

double droplet_energy(int n, const QParam& qp) {
  if (n < 1) throw InputError("droplet size must be >= 1");
  const double q = qp.q;
  const double qn = std::pow(q, n);
  return (1.0 - q * q) * (1.0 - qn) / ((1.0 + q * q) * (1.0 + qn));
}

double droplet_bandwidth(int n, const QParam& qp) {
  if (n < 1) throw InputError("droplet size must be >= 1");
  const double q = qp.q;
  const double qn = std::pow(q, n);
  return 4.0 * qn * (1.0 - q * q) / ((1.0 + qn) * (1.0 - qn));
}

double finite_droplet_energy(int length, int n, const QParam& qp) {
  if (n < 1 || 2 * n > length) throw InputError("finite droplet needs 1 <= n and 2n <= L");
  return q_sector_spectrum(length, qp, HalfInt::from_twice(length - 2 * n))(0);
}

}  // namespace foel
