#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "foel/errors.hpp"
#include "foel/half_int.hpp"
#include "foel/spin_algebra.hpp"

namespace foel {

struct Site {
  int id = 0;
  HalfInt s;
};

struct Edge {
  int u = 0;
  int v = 0;
  double J = 1.0;
};

/// Finite graph with a spin at every vertex and a coupling on every edge.
///
/// Sites are kept sorted by id; the position of a site in that order is its
/// tensor factor.
class SpinGraph {
 public:
  SpinGraph() = default;
  /// Validates and sorts. Throws InputError on duplicate ids, self loops,
  /// duplicate undirected edges, unknown ids, spin 0 or J <= 0.
  SpinGraph(std::vector<Site> sites, std::vector<Edge> edges);

  const std::vector<Site>& sites() const { return sites_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return sites_.size(); }
  std::size_t position(int id) const;
  HilbertShape shape() const;
  bool connected() const;
  /// Human-readable warnings (currently: disconnected).
  std::vector<std::string> warnings() const;

 private:
  std::vector<Site> sites_;
  std::vector<Edge> edges_;
};

/// Open chain s_1..s_L with nearest-neighbour couplings J_{x,x+1}.
struct ChainSpec {
  std::vector<HalfInt> spins;
  std::vector<double> couplings;

  void validate() const;
  SpinGraph as_graph() const;
};

/// h(S1.S2) = sum_m coeffs[m] (S1.S2)^m.
struct BondPolynomial {
  std::vector<double> coeffs;

  int degree() const;
};

/// -sum_{x~y} J_xy S_x.S_y.
RealOperator build_heisenberg(const SpinGraph& g);

/// -sum_x J_x (S_x.S_{x+1} / (s_x s_{x+1}) - 1). Throws InputError if any s_x = 0.
RealOperator build_normalized_chain(const ChainSpec& c);

/// A(Delta) = sqrt(1 - 1/Delta^2) / 2.
double xxz_boundary_field(double delta);

/// SU_q(2)-invariant spin-1/2 XXZ chain with boundary field,
///   -sum_x [ (S^1S^1 + S^2S^2)/Delta + S^3S^3 - 1/4 ] + A(Delta)(S^3_L - S^3_1).
/// The boundary sign is the one for which the operator commutes with the
/// q-deformed generators in qgroup.hpp. Requires L >= 2 and Delta > 1.
RealOperator build_xxz_chain(int length, double delta);

/// Spin-1 chain sum_x (1 - S_x.S_{x+1}) + beta (1 - (S_x.S_{x+1})^2).
RealOperator build_spin1_beta_chain(int length, double beta);

/// Bond matrix p(S1.S2) on C^{2s1+1} (x) C^{2s2+1}.
MatrixXd bond_polynomial_matrix(HalfInt s1, HalfInt s2, const BondPolynomial& poly);

/// sum_x J_x p_x(S_x.S_{x+1}). Throws InputError if a degree exceeds 2 min(s_x, s_{x+1}).
RealOperator build_general_bond_chain(const std::vector<HalfInt>& spins, const std::vector<double>& couplings,
                                      const std::vector<BondPolynomial>& polys);

struct ParsedGraph {
  SpinGraph graph;
  std::vector<std::string> warnings;
};

/// Line format: `site <id> <twice_spin>`, `edge <u> <v> <J>`, '#' starts a comment.
/// Throws GraphSpecError (an InputError) carrying the 1-based line number.
ParsedGraph parse_graph_spec(std::string_view text);
ParsedGraph load_graph_spec(const std::string& path);

class GraphSpecError : public InputError {
 public:
  GraphSpecError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace foel
