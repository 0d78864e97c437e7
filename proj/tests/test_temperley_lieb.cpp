#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "foel/errors.hpp"
#include "foel/hamiltonians.hpp"
#include "foel/linalg.hpp"
#include "foel/qgroup.hpp"
#include "foel/sector_spectra.hpp"
#include "foel/temperley_lieb.hpp"

using namespace foel;

namespace {

const HalfInt kHalf = HalfInt::from_twice(1);
const HalfInt kOne = HalfInt::from_int(1);

using Arcs = std::vector<ArcDiagram::Arc>;

// Oracle: every perfect-or-partial matching on k vertices with n arcs, filtered by the two rules.
std::set<Arcs> brute_force_diagrams(int k, int n) {
  std::set<Arcs> out;
  std::vector<ArcDiagram::Arc> all;
  for (int x = 1; x <= k; ++x)
    for (int y = x + 1; y <= k; ++y) all.emplace_back(x, y);
  std::vector<int> pick(all.size(), 0);
  std::fill(pick.end() - n, pick.end(), 1);
  do {
    Arcs arcs;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (pick[i]) arcs.push_back(all[i]);
    std::vector<int> used(static_cast<std::size_t>(k) + 1, 0);
    bool ok = true;
    for (auto [x, y] : arcs) {
      if (used[static_cast<std::size_t>(x)]++ || used[static_cast<std::size_t>(y)]++) ok = false;
    }
    for (auto [a, b] : arcs)
      for (auto [c, d] : arcs)
        if (a < c && c < b && b < d) ok = false;
    for (int u = 1; u <= k; ++u)
      if (!used[static_cast<std::size_t>(u)])
        for (auto [x, y] : arcs)
          if (x < u && u < y) ok = false;
    if (ok) out.insert(arcs);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

MatrixXd expanded_basis(const std::vector<ArcDiagram>& basis, double q) {
  MatrixXd v(Eigen::Index{1} << basis.front().k(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) v.col(static_cast<Eigen::Index>(j)) = expand_diagram_to_tensor(basis[j], q);
  return v;
}

std::vector<double> sorted_real_spectrum(const MatrixXd& a) {
  const VectorXd e = linalg::real_spectrum(a);
  return {e.begin(), e.end()};
}

}  // namespace

TEST(ArcDiagram, Validation) {
  EXPECT_NO_THROW(ArcDiagram(4, {{1, 4}, {2, 3}}));
  EXPECT_THROW(ArcDiagram(4, {{1, 3}, {2, 4}}), InputError);  // crossing
  EXPECT_THROW(ArcDiagram(3, {{1, 3}}), InputError);          // spans unpaired 2
  EXPECT_THROW(ArcDiagram(3, {{1, 2}, {2, 3}}), InputError);  // shared vertex
  EXPECT_THROW(ArcDiagram(2, {{1, 3}}), InputError);
  const ArcDiagram d(5, {{2, 5}, {3, 4}});
  EXPECT_EQ(d.partner(2), 5);
  EXPECT_EQ(d.partner(1), 0);
  EXPECT_EQ(d.str(), "{[2,5],[3,4]}/5");
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_arc_diagrams(5, 2).size(), 5u);
  const auto k2 = enumerate_arc_diagrams(2, 1);
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0].arcs(), (Arcs{{1, 2}}));
  EXPECT_EQ(enumerate_arc_diagrams(4, 2).size(), 2u);
  EXPECT_THROW(enumerate_arc_diagrams(3, 2), InputError);
}

TEST(Enumerate, MatchesBruteForceAndCountFormula) {
  for (int k = 1; k <= 10; ++k)
    for (int n = 0; 2 * n <= k; ++n) {
      const auto diagrams = enumerate_arc_diagrams(k, n);
      std::set<Arcs> got;
      for (const ArcDiagram& d : diagrams) got.insert(d.arcs());
      EXPECT_EQ(got.size(), diagrams.size()) << "duplicates at k=" << k;
      EXPECT_EQ(got, brute_force_diagrams(k, n)) << "k=" << k << " n=" << n;
      EXPECT_EQ(diagrams.size(), diagram_count(k, n));
    }
}

TEST(Enumerate, CountEqualsHighestWeightDimension) {
  for (int k = 1; k <= 10; ++k) {
    const HilbertShape shape(std::vector<int>(static_cast<std::size_t>(k), 2));
    for (int n = 0; 2 * n <= k; ++n)
      EXPECT_EQ(enumerate_arc_diagrams(k, n).size(), highest_weight_space(shape, HalfInt::from_twice(k - 2 * n)).count());
  }
}

TEST(Enumerate, PrefixPropertyUnderEmbedding) {
  for (int k = 1; k <= 8; ++k)
    for (int n = 0; 2 * n <= k; ++n) {
      const auto small = enumerate_arc_diagrams(k, n);
      const auto large = enumerate_arc_diagrams(k + 1, n);
      ASSERT_GE(large.size(), small.size());
      for (std::size_t i = 0; i < small.size(); ++i) {
        EXPECT_EQ(large[i], embed_diagram(small[i]));
        EXPECT_FALSE(large[i].paired(k + 1));
      }
      for (std::size_t i = small.size(); i < large.size(); ++i) EXPECT_TRUE(large[i].paired(k + 1));
    }
}

TEST(Embed, Examples) {
  const ArcDiagram e = embed_diagram(ArcDiagram(2, {{1, 2}}));
  EXPECT_EQ(e.k(), 3);
  EXPECT_EQ(e.arcs(), (Arcs{{1, 2}}));
  const ArcDiagram empty = embed_diagram(ArcDiagram(3, {}));
  EXPECT_EQ(empty.k(), 4);
  EXPECT_EQ(empty.num_arcs(), 0u);
}

TEST(GeneratorAction, Rules) {
  const ArcDiagram bubble(2, {{1, 2}});
  auto r = tl_generator_action(bubble, 1);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.at(bubble), -2.0);

  EXPECT_TRUE(tl_generator_action(ArcDiagram(3, {}), 1).empty());
  EXPECT_TRUE(tl_generator_action(ArcDiagram(4, {{3, 4}}), 1).empty());

  r = tl_generator_action(ArcDiagram(3, {{1, 2}}), 2);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.at(ArcDiagram(3, {{2, 3}})), 1.0);

  r = tl_generator_action(ArcDiagram(4, {{1, 2}, {3, 4}}), 2);
  EXPECT_EQ(r.at(ArcDiagram(4, {{1, 4}, {2, 3}})), 1.0);

  r = tl_generator_action(ArcDiagram(2, {{1, 2}}), 1, 0.5);
  EXPECT_NEAR(r.at(ArcDiagram(2, {{1, 2}})), -2.5, 1e-15);
}

TEST(GeneratorAction, AgreesWithTensorOperatorForAllDiagrams) {
  for (double q : {1.0, 0.6, 0.25}) {
    for (int k = 2; k <= 7; ++k)
      for (int n = 0; 2 * n <= k; ++n)
        for (const ArcDiagram& d : enumerate_arc_diagrams(k, n))
          for (int x = 1; x < k; ++x) {
            const VectorXd lhs = tl_generator_operator(k, x, q).apply(expand_diagram_to_tensor(d, q));
            VectorXd rhs = VectorXd::Zero(lhs.size());
            for (const auto& [img, c] : tl_generator_action(d, x, q)) rhs += c * expand_diagram_to_tensor(img, q);
            EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12) << d.str() << " x=" << x << " q=" << q;
          }
  }
}

TEST(Expansion, Examples) {
  const VectorXd singlet = expand_diagram_to_tensor(ArcDiagram(2, {{1, 2}}));
  EXPECT_EQ(singlet, Eigen::Vector4d(0, 1, -1, 0));
  const VectorXd up = expand_diagram_to_tensor(ArcDiagram(1, {}));
  EXPECT_EQ(up, Eigen::Vector2d(1, 0));
  const MatrixXd v = expanded_basis(enumerate_arc_diagrams(5, 2), 1.0);
  Eigen::FullPivLU<MatrixXd> lu(v.transpose() * v);
  EXPECT_EQ(lu.rank(), 5);
}

TEST(Expansion, HighestWeightForAllDiagrams) {
  for (int k = 1; k <= 8; ++k) {
    const HilbertShape shape(std::vector<int>(static_cast<std::size_t>(k), 2));
    const TotalSpinOps ops = total_spin_ops(shape);
    const QTotalOps qops = suq2_generators(k, QParam::from_q(0.4));
    for (int n = 0; 2 * n <= k; ++n)
      for (const ArcDiagram& d : enumerate_arc_diagrams(k, n)) {
        EXPECT_LE(ops.splus.apply(expand_diagram_to_tensor(d)).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LE(qops.splus.apply(expand_diagram_to_tensor(d, 0.4)).cwiseAbs().maxCoeff(), 1e-10);
      }
  }
}

TEST(TensorGenerators, TemperleyLiebRelations) {
  for (double q : {1.0, 0.45}) {
    for (int k = 2; k <= 6; ++k) {
      for (int x = 1; x < k; ++x) {
        const MatrixXd U = tl_generator_operator(k, x, q).dense();
        EXPECT_LE((U * U + (q + 1.0 / q) * U).cwiseAbs().maxCoeff(), 1e-10);
        for (int y : {x - 1, x + 1}) {
          if (y < 1 || y >= k) continue;
          const MatrixXd V = tl_generator_operator(k, y, q).dense();
          EXPECT_LE((U * V * U - U).cwiseAbs().maxCoeff(), 1e-10);
        }
        for (int y = x + 2; y < k; ++y) {
          const MatrixXd V = tl_generator_operator(k, y, q).dense();
          EXPECT_LE((U * V - V * U).cwiseAbs().maxCoeff(), 1e-12);
        }
      }
    }
  }
}

TEST(TLMatrix, TwoSiteBubble) {
  const TLMatrix m = tl_hamiltonian_matrix(2, 1, {1.0});
  ASSERT_EQ(m.A.rows(), 1);
  EXPECT_EQ(m.A(0, 0), 4.0);
}

TEST(TLMatrix, RepresentsNormalizedChainOnExpandedVectors) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> J(0.1, 2.0);
  for (int k = 2; k <= 8; ++k) {
    std::vector<double> couplings;
    for (int x = 1; x < k; ++x) couplings.push_back(J(rng));
    const RealOperator h = build_normalized_chain({std::vector<HalfInt>(static_cast<std::size_t>(k), kHalf), couplings});
    for (int n = 0; 2 * n <= k; ++n) {
      const TLMatrix m = tl_hamiltonian_matrix(k, n, couplings);
      const MatrixXd v = expanded_basis(m.basis, 1.0);
      EXPECT_LE((h.sparse() * v - v * m.A).cwiseAbs().maxCoeff(), 1e-11);
    }
  }
}

TEST(TLMatrix, SpectrumEqualsSectorSpectrum) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> J(0.1, 2.0);
  for (int k = 2; k <= 9; ++k) {
    std::vector<double> couplings;
    for (int x = 1; x < k; ++x) couplings.push_back(J(rng));
    const HilbertShape shape(std::vector<int>(static_cast<std::size_t>(k), 2));
    const RealOperator h = build_normalized_chain({shape.spins(), couplings});
    for (int n = 0; 2 * n <= k; ++n) {
      const std::vector<double> tl = sorted_real_spectrum(tl_hamiltonian_matrix(k, n, couplings).A);
      const VectorXd sector = sector_spectrum(h, shape, HalfInt::from_twice(k - 2 * n));
      ASSERT_EQ(tl.size(), static_cast<std::size_t>(sector.size()));
      for (std::size_t i = 0; i < tl.size(); ++i) EXPECT_NEAR(tl[i], sector(static_cast<Eigen::Index>(i)), 1e-9);
    }
  }
}

TEST(TLMatrix, QDeformedSpectrumMatchesXXZSectors) {
  for (double q : {0.3, 0.7}) {
    const QParam qp = QParam::from_q(q);
    for (int k = 2; k <= 7; ++k) {
      const std::vector<double> ones(static_cast<std::size_t>(k - 1), 1.0);
      for (int n = 0; 2 * n <= k; ++n) {
        const std::vector<double> tl = sorted_real_spectrum(tl_hamiltonian_matrix(k, n, ones, q).A);
        const VectorXd xxz = q_sector_spectrum(k, qp, HalfInt::from_twice(k - 2 * n));
        ASSERT_EQ(tl.size(), static_cast<std::size_t>(xxz.size()));
        for (std::size_t i = 0; i < tl.size(); ++i)
          EXPECT_NEAR(tl[i], 4.0 * qp.delta * xxz(static_cast<Eigen::Index>(i)), 1e-9);
      }
    }
  }
}

TEST(TLMatrix, OffDiagonalsNonPositive) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> J(0.01, 3.0);
  for (int k = 1; k <= 8; ++k)
    for (int n = 0; 2 * n <= k; ++n)
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<double> couplings;
        for (int x = 1; x < k; ++x) couplings.push_back(J(rng));
        EXPECT_LE(max_offdiagonal(tl_hamiltonian_matrix(k, n, couplings).A), 0.0);
      }
}

TEST(Dominance, Examples) {
  const TLMatrix a2 = tl_hamiltonian_matrix(2, 1, {1.0});
  const TLMatrix a3 = tl_hamiltonian_matrix(3, 1, {1.0, 1.0});
  EXPECT_EQ(a3.A.rows(), 2);
  const DominanceVerdict v = check_dominance(a2, a3);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.dimension_ok);

  const std::vector<double> J5 = {1.0, 0.5, 2.0, 1.0};
  std::vector<double> J6 = J5;
  J6.push_back(0.7);
  EXPECT_TRUE(check_dominance(tl_hamiltonian_matrix(5, 2, J5), tl_hamiltonian_matrix(6, 2, J6)).holds);

  TLMatrix self = a3;
  self.k = 4;
  self.basis = enumerate_arc_diagrams(4, 1);
  MatrixXd padded = MatrixXd::Zero(3, 3);
  padded.topLeftCorner(2, 2) = a3.A;
  self.A = padded;
  const DominanceVerdict eq = check_dominance(a3, self);
  EXPECT_TRUE(eq.holds);
  EXPECT_EQ(eq.worst_excess, 0.0);
}

TEST(Dominance, MisalignedBasisRejected) {
  const TLMatrix a3 = tl_hamiltonian_matrix(3, 1, {1.0, 1.0});
  TLMatrix a4 = tl_hamiltonian_matrix(4, 1, {1.0, 1.0, 1.0});
  std::swap(a4.basis[0], a4.basis[2]);
  EXPECT_THROW(check_dominance(a3, a4), InputError);
  EXPECT_THROW(check_dominance(a3, tl_hamiltonian_matrix(4, 2, {1.0, 1.0, 1.0})), InputError);
}

TEST(Perron, Examples) {
  MatrixXd one(1, 1);
  one << 3.0;
  const PerronResult r1 = perron_ground_vector(one);
  EXPECT_TRUE(r1.irreducible);
  EXPECT_NEAR(r1.vector(0), 1.0, 1e-15);

  for (auto [k, n] : {std::pair{4, 1}, std::pair{5, 2}}) {
    const TLMatrix m = tl_hamiltonian_matrix(k, n, std::vector<double>(static_cast<std::size_t>(k - 1), 1.0));
    const PerronResult r = perron_ground_vector(m.A);
    EXPECT_TRUE(r.irreducible);
    EXPECT_TRUE(r.positive);
    EXPECT_TRUE(r.simple);
    EXPECT_EQ(r.vector.size(), static_cast<Eigen::Index>(diagram_count(k, n)));
    EXPECT_LE((m.A * r.vector - r.eigenvalue * r.vector).norm(), 1e-10);
  }
}

TEST(Perron, ReducibleMatrixFlagged) {
  MatrixXd a(3, 3);
  a << 1, -1, 0, -1, 1, 0, 0, 0, 2;
  EXPECT_FALSE(perron_ground_vector(a).irreducible);
  EXPECT_FALSE(is_irreducible(a));
  MatrixXd directed(2, 2);
  directed << 1, -1, 0, 1;
  EXPECT_FALSE(is_irreducible(directed));
}

TEST(MinSpecComparison, Examples) {
  MatrixXd a(1, 1);
  a << 0.0;
  const ComparisonVerdict same = min_spec_comparison(a, a);
  EXPECT_TRUE(same.hypotheses_ok);
  EXPECT_TRUE(same.conclusion_ok);
  EXPECT_FALSE(same.strict_expected);
  EXPECT_EQ(same.inf_a, same.inf_b);

  MatrixXd b(2, 2);
  b << 0, -1, -1, 0;
  const ComparisonVerdict strict = min_spec_comparison(a, b);
  EXPECT_TRUE(strict.hypotheses_ok);
  EXPECT_TRUE(strict.case_ii);
  EXPECT_FALSE(strict.case_i);
  EXPECT_TRUE(strict.strict_expected);
  EXPECT_NEAR(strict.inf_b, -1.0, 1e-14);
  EXPECT_TRUE(strict.conclusion_ok);

  MatrixXd bad(2, 2);
  bad << 1, -1, -1, 0;
  EXPECT_FALSE(min_spec_comparison(a, bad).hypotheses_ok);
  MatrixXd pos(2, 2);
  pos << 0, 1, 1, 0;
  EXPECT_FALSE(min_spec_comparison(a, pos).hypotheses_ok);
  EXPECT_FALSE(min_spec_comparison(b, a).hypotheses_ok);
}

TEST(MinSpecComparison, RandomDominatedPairs) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size(rng);
    const int m = n + size(rng) - 1;
    // Nonnegative Ap; B' >= A' padded with zeros; A = c - A', B = c - B'.
    MatrixXd ap = MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ap(i, j) = u(rng) < 0.5 ? u(rng) : 0.0;
    MatrixXd bp = MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) bp(i, j) = (i < n && j < n ? ap(i, j) : 0.0) + (u(rng) < 0.3 ? u(rng) : 0.0);
    const double c = 3.0;
    const MatrixXd a = c * MatrixXd::Identity(n, n) - ap;
    const MatrixXd b = c * MatrixXd::Identity(m, m) - bp;
    const ComparisonVerdict v = min_spec_comparison(a, b);
    ASSERT_TRUE(v.hypotheses_ok) << v.hypothesis_failure;
    EXPECT_TRUE(v.conclusion_ok) << "trial " << trial << " infA=" << v.inf_a << " infB=" << v.inf_b;
    EXPECT_LE(v.inf_b, v.inf_a + 1e-10);
  }
}

TEST(FKBasis, SpinHalfReducesToArcDiagrams) {
  for (int k = 1; k <= 7; ++k)
    for (int n = 0; 2 * n <= k; ++n) {
      const auto fk = fk_highest_weight_basis(std::vector<HalfInt>(static_cast<std::size_t>(k), kHalf), HalfInt::from_twice(k - 2 * n));
      std::set<std::vector<double>> fk_vectors, tl_vectors;
      for (const FKBasisVector& v : fk) fk_vectors.insert(std::vector<double>(v.expanded.begin(), v.expanded.end()));
      for (const ArcDiagram& d : enumerate_arc_diagrams(k, n)) {
        const VectorXd e = expand_diagram_to_tensor(d);
        tl_vectors.insert(std::vector<double>(e.begin(), e.end()));
      }
      EXPECT_EQ(fk_vectors, tl_vectors) << "k=" << k << " n=" << n;
    }
}

TEST(FKBasis, SmallCounts) {
  EXPECT_EQ(fk_highest_weight_basis({kOne, kOne}, kOne).size(), 1u);
  const auto b = fk_highest_weight_basis({kOne, kOne}, kOne);
  EXPECT_EQ(b[0].arcs.size(), 1u);
  EXPECT_EQ(fk_highest_weight_basis({kOne, kOne, kOne}, HalfInt::from_int(2)).size(), 2u);
  EXPECT_THROW(fk_highest_weight_basis({kOne, kOne}, kHalf), InputError);
}

TEST(FKBasis, HighestWeightAndDimension) {
  const std::vector<std::vector<HalfInt>> chains = {
      {kOne, kOne, kOne}, {kHalf, kOne, HalfInt::from_twice(3)}, {HalfInt::from_twice(3), kHalf, kOne, kHalf}, {kOne, kOne, kOne, kOne}};
  for (const auto& spins : chains) {
    const HilbertShape shape = HilbertShape::from_spins(spins);
    const TotalSpinOps ops = total_spin_ops(shape);
    for (const auto& [m2, idx] : s3_blocks(shape)) {
      if (m2 < 0) continue;
      const HalfInt S = HalfInt::from_twice(m2);
      std::size_t expected = 0;
      try {
        expected = highest_weight_space(shape, S).count();
      } catch (const InputError&) {
      }
      const auto basis = fk_highest_weight_basis(spins, S);
      EXPECT_EQ(basis.size(), expected) << "S=" << S.str();
      for (const FKBasisVector& v : basis) {
        EXPECT_LE(ops.splus.apply(v.expanded).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LE((ops.s3.apply(v.expanded) - S.value() * v.expanded).cwiseAbs().maxCoeff(), 1e-12);
      }
    }
  }
}

TEST(FKMatrix, Examples) {
  const FKMatrix a = fk_hamiltonian_matrix({kHalf, kHalf}, {1.0}, HalfInt());
  ASSERT_EQ(a.A.rows(), 1);
  EXPECT_NEAR(a.A(0, 0), 4.0, 1e-12);
  const FKMatrix b = fk_hamiltonian_matrix({kOne, kOne}, {1.0}, kOne);
  ASSERT_EQ(b.A.rows(), 1);
  EXPECT_NEAR(b.A(0, 0), 2.0, 1e-12);
}

TEST(FKMatrix, SpectrumAndSignAudit) {
  const std::vector<HalfInt> spins = {kOne, kOne, kOne};
  const HilbertShape shape = HilbertShape::from_spins(spins);
  const RealOperator h = build_normalized_chain({spins, {1.0, 1.0}});
  for (int twice_s = 0; twice_s <= 6; twice_s += 2) {
    const FKMatrix m = fk_hamiltonian_matrix(spins, {1.0, 1.0}, HalfInt::from_twice(twice_s));
    EXPECT_LE(m.residual, 1e-10);
    EXPECT_LE(m.max_positive_offdiag, 1e-10);
    const std::vector<double> fk = sorted_real_spectrum(m.A);
    const VectorXd sector = sector_spectrum(h, shape, HalfInt::from_twice(twice_s));
    ASSERT_EQ(fk.size(), static_cast<std::size_t>(sector.size()));
    for (std::size_t i = 0; i < fk.size(); ++i) EXPECT_NEAR(fk[i], sector(static_cast<Eigen::Index>(i)), 1e-9);
  }
}

TEST(FKMatrix, MixedSpinSpectrum) {
  const std::vector<HalfInt> spins = {kHalf, HalfInt::from_twice(3), kOne, kHalf};
  const std::vector<double> J = {0.6, 1.3, 0.9};
  const HilbertShape shape = HilbertShape::from_spins(spins);
  const RealOperator h = build_normalized_chain({spins, J});
  for (int twice_s = 1; twice_s <= 7; twice_s += 2) {
    const FKMatrix m = fk_hamiltonian_matrix(spins, J, HalfInt::from_twice(twice_s));
    const std::vector<double> fk = sorted_real_spectrum(m.A);
    const VectorXd sector = sector_spectrum(h, shape, HalfInt::from_twice(twice_s));
    ASSERT_EQ(fk.size(), static_cast<std::size_t>(sector.size()));
    for (std::size_t i = 0; i < fk.size(); ++i) EXPECT_NEAR(fk[i], sector(static_cast<Eigen::Index>(i)), 1e-9);
  }
}
