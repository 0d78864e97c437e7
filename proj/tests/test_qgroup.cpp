#include <gtest/gtest.h>

#include <cmath>

#include "foel/errors.hpp"
#include "foel/hamiltonians.hpp"
#include "foel/linalg.hpp"
#include "foel/qgroup.hpp"
#include "foel/sector_spectra.hpp"

using namespace foel;

namespace {

double max_abs(const MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(QParam, Consistency) {
  for (double q : {0.05, 0.3, 0.5, 0.99}) {
    const QParam a = QParam::from_q(q);
    const QParam b = QParam::from_delta(a.delta);
    EXPECT_NEAR(b.q, q, 1e-14);
    EXPECT_NEAR(0.5 * (b.q + 1.0 / b.q), a.delta, 1e-14);
  }
  EXPECT_THROW(QParam::from_q(1.0), InputError);
  EXPECT_THROW(QParam::from_q(0.0), InputError);
  EXPECT_THROW(QParam::from_delta(1.0), InputError);
}

TEST(Generators, SingleSiteIsUndeformed) {
  const QTotalOps ops = suq2_generators(1, QParam::from_q(0.3));
  const LocalSpinOps half = spin_matrices(HalfInt::from_twice(1));
  EXPECT_EQ(ops.splus.dense(), half.splus);
  EXPECT_EQ(ops.sminus.dense(), half.sminus);
  EXPECT_EQ(ops.s3.dense(), half.sz);
}

TEST(Generators, TwoSiteRaisingFromBottom) {
  const double q = 0.4;
  const QTotalOps ops = suq2_generators(2, QParam::from_q(q));
  VectorXd down = VectorXd::Zero(4);
  down(3) = 1.0;
  const VectorXd v = ops.splus.apply(down);
  // S^+ (x) 1 + t (x) S^+ applied to |-->: |+-> + q|-+>.
  EXPECT_NEAR(v(1), 1.0, 1e-15);
  EXPECT_NEAR(v(2), q, 1e-15);
  EXPECT_EQ(v(0), 0.0);
  // Lowering from the top: S^- (x) t^-1 + 1 (x) S^-: q |-+> + |+->.
  VectorXd up = VectorXd::Zero(4);
  up(0) = 1.0;
  const VectorXd w = ops.sminus.apply(up);
  EXPECT_NEAR(w(2), q, 1e-15);
  EXPECT_NEAR(w(1), 1.0, 1e-15);
}

TEST(Generators, CommutationRelations) {
  for (double q : {0.3, 0.7}) {
    const QParam qp = QParam::from_q(q);
    for (int L = 1; L <= 6; ++L) {
      const QTotalOps ops = suq2_generators(L, qp);
      const MatrixXd s3 = ops.s3.dense(), sp = ops.splus.dense(), sm = ops.sminus.dense();
      EXPECT_LE(max_abs(s3 * sp - sp * s3 - sp), 1e-10);
      EXPECT_LE(max_abs(s3 * sm - sm * s3 + sm), 1e-10);
      MatrixXd rhs = MatrixXd::Zero(s3.rows(), s3.cols());
      for (Eigen::Index i = 0; i < s3.rows(); ++i)
        rhs(i, i) = (std::pow(q, 2 * s3(i, i)) - std::pow(q, -2 * s3(i, i))) / (q - 1.0 / q);
      EXPECT_LE(max_abs(sp * sm - sm * sp - rhs), 1e-10) << "L=" << L;
    }
  }
}

TEST(Generators, CommuteWithXXZChain) {
  for (double q : {0.2, 0.5, 0.8}) {
    const QParam qp = QParam::from_q(q);
    for (int L = 2; L <= 8; ++L) {
      const RealOperator h = build_xxz_chain(L, qp.delta);
      const QTotalOps ops = suq2_generators(L, qp);
      EXPECT_LE(commutator_norm(h, ops.splus), 1e-9);
      EXPECT_LE(commutator_norm(h, ops.sminus), 1e-9);
      EXPECT_LE(commutator_norm(h, ops.s3), 1e-12);
      EXPECT_LE(commutator_norm(h, q_casimir(L, qp)), 1e-9);
    }
  }
}

TEST(QCasimir, Spectra) {
  const QParam qp = QParam::from_q(0.5);
  const MatrixXd c1 = q_casimir(1, qp).dense();
  const double expected = (4.0 + 0.25) / (1.5 * 1.5);
  EXPECT_LE(max_abs(c1 - expected * MatrixXd::Identity(2, 2)), 1e-12);
  EXPECT_NEAR(q_casimir_value(HalfInt::from_twice(1), qp), expected, 1e-12);

  Eigen::EigenSolver<MatrixXd> es(q_casimir(2, qp).dense());
  std::vector<double> ev;
  for (Eigen::Index i = 0; i < 4; ++i) {
    EXPECT_NEAR(es.eigenvalues()(i).imag(), 0.0, 1e-12);
    ev.push_back(es.eigenvalues()(i).real());
  }
  std::sort(ev.begin(), ev.end());
  EXPECT_NEAR(ev[0], q_casimir_value(HalfInt(), qp), 1e-10);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(ev[static_cast<std::size_t>(i)], q_casimir_value(HalfInt::from_int(1), qp), 1e-10);
  EXPECT_GT(q_casimir_value(HalfInt::from_int(1), qp) - q_casimir_value(HalfInt(), qp), 1.0);

  EXPECT_THROW(q_casimir(2, QParam{1.0 - 1e-7, 1.0}), InputError);
}

TEST(QCasimir, EigenvaluesFollowLabelFamily) {
  const QParam qp = QParam::from_q(0.6);
  for (int L = 2; L <= 6; ++L) {
    const VectorXd ev = linalg::real_spectrum(q_casimir(L, qp).dense(), 1e-6);
    std::vector<double> expected;
    for (int twice_s = L % 2; twice_s <= L; twice_s += 2) {
      // multiplicity (2S+1) * (C(L, L/2 - S) - C(L, L/2 - S - 1))
      const int n = (L - twice_s) / 2;
      auto binom = [](int a, int b) {
        if (b < 0 || b > a) return 0.0;
        return std::round(std::tgamma(a + 1.0) / (std::tgamma(b + 1.0) * std::tgamma(a - b + 1.0)));
      };
      const int count = static_cast<int>(binom(L, n) - binom(L, n - 1)) * (twice_s + 1);
      for (int k = 0; k < count; ++k) expected.push_back(q_casimir_value(HalfInt::from_twice(twice_s), qp));
    }
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(static_cast<std::size_t>(ev.size()), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      EXPECT_NEAR(ev(static_cast<Eigen::Index>(i)), expected[i], 1e-8 * expected[i]);
  }
}

TEST(QSectors, TwoSiteExact) {
  for (double q : {0.1, 0.5, 0.9}) {
    const QSectorReport r = q_sector_energies(2, QParam::from_q(q));
    EXPECT_NEAR(r.entries.at(HalfInt::from_int(1)).min_energy, 0.0, 1e-12);
    EXPECT_NEAR(r.entries.at(HalfInt()).min_energy, 1.0, 1e-12);
    EXPECT_TRUE(r.foel.ok);
  }
}

TEST(QSectors, StrictOrderingAndUndeformedDimensions) {
  for (double q : {0.2, 0.5, 0.8}) {
    for (int L = 2; L <= 8; ++L) {
      const QSectorReport r = q_sector_energies(L, QParam::from_q(q));
      EXPECT_TRUE(r.foel.ok) << "L=" << L << " q=" << q;
      EXPECT_GT(r.foel.min_gap, 1e-8);
      const HilbertShape shape(std::vector<int>(static_cast<std::size_t>(L), 2));
      for (const auto& [S, e] : r.entries) EXPECT_EQ(e.dimension, highest_weight_space(shape, S).count());
    }
  }
}

TEST(QSectors, ContinuityTowardIsotropicChain) {
  // XXZ -> sum (1/4 - S.S) as q -> 1, i.e. the normalized chain divided by 4.
  const QParam qp = QParam::from_q(1.0 - 1e-3);
  for (int L = 2; L <= 6; ++L) {
    const QSectorReport r = q_sector_energies(L, qp);
    const HilbertShape shape(std::vector<int>(static_cast<std::size_t>(L), 2));
    const RealOperator iso = 0.25 * build_normalized_chain({shape.spins(), std::vector<double>(static_cast<std::size_t>(L - 1), 1.0)});
    const SectorReport ref = sector_energies(iso, shape);
    for (const auto& [S, e] : ref.entries) EXPECT_NEAR(r.entries.at(S).min_energy, e.min_energy, 1e-2);
  }
}

TEST(Droplet, ClosedForms) {
  const QParam qp = QParam::from_q(0.5);
  EXPECT_NEAR(droplet_energy(1, qp), 0.2, 1e-15);
  EXPECT_NEAR(droplet_bandwidth(1, qp), 2.0, 1e-15);
  for (int n = 1; n < 10; ++n) EXPECT_LT(droplet_energy(n, qp), droplet_energy(n + 1, qp));
  const QParam tiny = QParam::from_q(1e-9);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_NEAR(droplet_energy(n, tiny), 1.0, 1e-8);
    EXPECT_NEAR(droplet_bandwidth(n, tiny), 0.0, 1e-8);
  }
  EXPECT_NEAR(droplet_bandwidth(8, qp) / droplet_bandwidth(9, qp), 2.0, 1e-2);
  EXPECT_THROW(droplet_energy(0, qp), InputError);
}

TEST(Droplet, FiniteVolumeDecreasesTowardInfiniteVolume) {
  const QParam qp = QParam::from_q(0.5);
  EXPECT_NEAR(finite_droplet_energy(2, 1, qp), 1.0, 1e-12);
  for (int n = 1; n <= 2; ++n) {
    double previous = finite_droplet_energy(2 * n, n, qp);
    for (int L = 2 * n + 1; L <= 12; ++L) {
      const double e = finite_droplet_energy(L, n, qp);
      EXPECT_LT(e, previous) << "L=" << L << " n=" << n;
      EXPECT_GE(e, droplet_energy(n, qp) - 1e-12);
      previous = e;
    }
  }
  EXPECT_THROW(finite_droplet_energy(3, 2, qp), InputError);
  EXPECT_THROW(finite_droplet_energy(3, 0, qp), InputError);
}
