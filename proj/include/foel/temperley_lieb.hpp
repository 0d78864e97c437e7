#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foel/half_int.hpp"
#include "foel/spin_algebra.hpp"

namespace foel {

/// Non-crossing arcs on vertices 1..k; no arc spans an unpaired vertex.
class ArcDiagram {
 public:
  using Arc = std::pair<int, int>;

  ArcDiagram() = default;
  /// Throws InputError unless the arcs form a valid diagram on k vertices.
  ArcDiagram(int k, std::vector<Arc> arcs);

  int k() const { return k_; }
  std::size_t num_arcs() const { return arcs_.size(); }
  /// Sorted by left endpoint.
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// 0 when unpaired.
  int partner(int vertex) const { return partner_[static_cast<std::size_t>(vertex)]; }
  bool paired(int vertex) const { return partner(vertex) != 0; }
  std::string str() const;

  auto operator<=>(const ArcDiagram& o) const {
    if (auto c = k_ <=> o.k_; c != 0) return c;
    return arcs_ <=> o.arcs_;
  }
  bool operator==(const ArcDiagram& o) const { return k_ == o.k_ && arcs_ == o.arcs_; }

  static bool valid(int k, const std::vector<Arc>& arcs);

 private:
  int k_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> partner_{0};
};

using DiagramCombination = std::map<ArcDiagram, double>;

/// Binomial coefficient as double; 0 outside 0 <= r <= n.
double binomial(int n, int r);

/// d(k, k/2 - n) = C(k,n) - C(k,n-1).
std::size_t diagram_count(int k, int n);

/// All diagrams with n arcs on k vertices.
///
/// Order: the diagrams of (k-1, n), each with vertex k added unpaired and in
/// their own order, followed by the diagrams in which k is paired, sorted by
/// arc list. The (k, n) basis is therefore a literal prefix of (k+1, n).
std::vector<ArcDiagram> enumerate_arc_diagrams(int k, int n);

/// U_{x,x+1} acting on a diagram (x is 1-based).
DiagramCombination tl_generator_action(const ArcDiagram& d, int x, double q = 1.0);

/// Same arcs on k+1 vertices, the new vertex unpaired.
ArcDiagram embed_diagram(const ArcDiagram& d);

struct TLMatrix {
  int k = 0;
  int n = 0;
  double q = 1.0;
  std::vector<ArcDiagram> basis;
  /// H basis[j] = sum_i A(i,j) basis[i].
  MatrixXd A;
};

/// Matrix of -2 sum_x J_x U_{x,x+1} on the (k, n) diagram basis.
TLMatrix tl_hamiltonian_matrix(int k, int n, const std::vector<double>& couplings, double q = 1.0);

/// Largest positive off-diagonal entry (0 if none).
double max_offdiagonal(const MatrixXd& a);

struct DominanceVerdict {
  bool holds = false;
  bool dimension_ok = false;
  double worst_excess = 0.0;  // max over prefix of Ak1(i,j) - Ak(i,j)
  std::size_t violations = 0;
};

/// Entrywise Ak1 <= Ak on the leading d(k) x d(k) block. Throws InputError
/// when the two bases are not aligned (Ak1 prefix must be the embedded Ak basis).
DominanceVerdict check_dominance(const TLMatrix& ak, const TLMatrix& ak1, double tol = 1e-12);

/// Strong connectivity of the off-diagonal nonzero pattern.
bool is_irreducible(const MatrixXd& a, double zero_tol = 0.0);

/// Smallest real part over the spectrum of a general real matrix.
double inf_spectrum(const MatrixXd& a);

struct PerronResult {
  bool irreducible = false;
  double eigenvalue = 0.0;
  VectorXd vector;   // normalized, sign fixed so the sum is positive
  double gap = 0.0;  // distance to the next eigenvalue (real parts)
  bool positive = false;
  bool simple = false;
};

/// Ground vector of a matrix with non-positive off-diagonals. For reducible
/// input only `irreducible = false` is meaningful.
PerronResult perron_ground_vector(const MatrixXd& a, double positivity_tol = 1e-10);

struct ComparisonVerdict {
  bool hypotheses_ok = false;
  std::string hypothesis_failure;
  double inf_a = 0.0;
  double inf_b = 0.0;
  bool strict_expected = false;  // B irreducible and (i) or (ii)
  bool case_i = false;
  bool case_ii = false;
  bool conclusion_ok = false;
};

/// Compares inf spec(B) with inf spec(A) for A (n x n) dominated by B (m x m, m >= n).
ComparisonVerdict min_spec_comparison(const MatrixXd& a, const MatrixXd& b, double tol = 1e-12);

/// Tensor vector on (C^2)^k: xi_q = q|+-> - |-+> on arcs, |+> on unpaired vertices.
VectorXd expand_diagram_to_tensor(const ArcDiagram& d, double q = 1.0);

/// U_{x,x+1} = -xi_q xi_q^T / q on sites x, x+1 (1-based) of k spin-1/2 sites.
RealOperator tl_generator_operator(int k, int x, double q = 1.0);

/// Spin s_x as 2s_x arrows; n_down of them point down.
struct OrderedIsingBlock {
  HalfInt s;
  int n_down = 0;
};

struct FKBasisVector {
  std::vector<OrderedIsingBlock> blocks;
  /// Pairs of arrow positions (0-based, blocks laid out left to right, each ↓...↓↑...↑).
  std::vector<std::pair<int, int>> arcs;
  VectorXd expanded;
};

/// One vector per ordered Ising configuration with 𝒮 - S down arrows whose
/// bracket pairing leaves no down arrow unpaired.
std::vector<FKBasisVector> fk_highest_weight_basis(const std::vector<HalfInt>& spins, HalfInt S);

struct FKMatrix {
  std::vector<FKBasisVector> basis;
  MatrixXd A;
  double gram_condition = 0.0;
  double residual = 0.0;       // max |H V - V A|
  double max_positive_offdiag = 0.0;
};

/// build_normalized_chain restricted to the FK basis via the Gram solve.
/// Throws NumericalError when the Gram condition number exceeds 1e12.
FKMatrix fk_hamiltonian_matrix(const std::vector<HalfInt>& spins, const std::vector<double>& couplings, HalfInt S);

}  // namespace foel
