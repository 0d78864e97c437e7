#include "foel/hamiltonians.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace foel {

SpinGraph::SpinGraph(std::vector<Site> sites, std::vector<Edge> edges) : sites_(std::move(sites)), edges_(std::move(edges)) {
  std::sort(sites_.begin(), sites_.end(), [](const Site& a, const Site& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (i > 0 && sites_[i].id == sites_[i - 1].id) throw InputError("duplicate site id " + std::to_string(sites_[i].id));
    if (sites_[i].s.twice() <= 0) throw InputError("site " + std::to_string(sites_[i].id) + " must have spin >= 1/2");
  }
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw InputError("self loop at site " + std::to_string(e.u));
    position(e.u);
    position(e.v);
    if (!(e.J > 0.0) || !std::isfinite(e.J))
      throw InputError("nonpositive coupling on edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    if (!seen.insert(std::minmax(e.u, e.v)).second)
      throw InputError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
}

std::size_t SpinGraph::position(int id) const {
  auto it = std::lower_bound(sites_.begin(), sites_.end(), id, [](const Site& s, int v) { return s.id < v; });
  if (it == sites_.end() || it->id != id) throw InputError("unknown site id " + std::to_string(id));
  return static_cast<std::size_t>(it - sites_.begin());
}

HilbertShape SpinGraph::shape() const {
  std::vector<HalfInt> spins;
  spins.reserve(sites_.size());
  for (const Site& s : sites_) spins.push_back(s.s);
  return HilbertShape::from_spins(spins);
}

bool SpinGraph::connected() const {
  if (sites_.empty()) return true;
  std::vector<std::size_t> parent(sites_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges_) parent[find(position(e.u))] = find(position(e.v));
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < sites_.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

std::vector<std::string> SpinGraph::warnings() const {
  std::vector<std::string> out;
  if (!connected()) out.emplace_back("graph is disconnected; FOEL is only claimed for connected graphs");
  return out;
}

void ChainSpec::validate() const {
  if (spins.empty()) throw InputError("chain needs at least one site");
  if (couplings.size() + 1 != spins.size())
    throw InputError("chain with " + std::to_string(spins.size()) + " sites needs " + std::to_string(spins.size() - 1) +
                     " couplings");
  for (HalfInt s : spins)
    if (s.twice() <= 0) throw InputError("chain spins must be >= 1/2");
  for (double j : couplings)
    if (!(j > 0.0) || !std::isfinite(j)) throw InputError("chain couplings must be strictly positive");
}

SpinGraph ChainSpec::as_graph() const {
  validate();
  std::vector<Site> sites;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spins.size(); ++i) sites.push_back({static_cast<int>(i), spins[i]});
  for (std::size_t i = 0; i + 1 < spins.size(); ++i)
    edges.push_back({static_cast<int>(i), static_cast<int>(i + 1), couplings[i]});
  return SpinGraph(std::move(sites), std::move(edges));
}

int BondPolynomial::degree() const {
  for (std::size_t m = coeffs.size(); m-- > 0;)
    if (coeffs[m] != 0.0) return static_cast<int>(m);
  return 0;
}

RealOperator build_heisenberg(const SpinGraph& g) {
  const HilbertShape shape = g.shape();
  RealOperator h = RealOperator::zero(shape);
  for (const Edge& e : g.edges()) {
    const std::size_t u = g.position(e.u);
    const std::size_t v = g.position(e.v);
    const MatrixXd bond = heisenberg_bond(shape.spin(u), shape.spin(v)).dense();
    h += embed_pair(shape, u, v, -e.J * bond);
  }
  return h;
}

RealOperator build_normalized_chain(const ChainSpec& c) {
  c.validate();
  const HilbertShape shape = HilbertShape::from_spins(c.spins);
  RealOperator h = RealOperator::zero(shape);
  for (std::size_t x = 0; x + 1 < c.spins.size(); ++x) {
    const HalfInt s1 = c.spins[x];
    const HalfInt s2 = c.spins[x + 1];
    const MatrixXd ss = heisenberg_bond(s1, s2).dense();
    const MatrixXd id = MatrixXd::Identity(ss.rows(), ss.cols());
    const MatrixXd bond = -c.couplings[x] * (ss / (s1.value() * s2.value()) - id);
    h += embed_pair(shape, x, x + 1, bond);
  }
  return h;
}

double xxz_boundary_field(double delta) { return 0.5 * std::sqrt(1.0 - 1.0 / (delta * delta)); }

RealOperator build_xxz_chain(int length, double delta) {
  if (length < 2) throw InputError("XXZ chain needs L >= 2");
  if (!(delta > 1.0) || !std::isfinite(delta)) throw InputError("XXZ anisotropy must satisfy Delta > 1");
  const HilbertShape shape(std::vector<int>(static_cast<std::size_t>(length), 2));
  const LocalSpinOps half = spin_matrices(HalfInt::from_twice(1));
  MatrixXd transverse = MatrixXd::Zero(4, 4);
  MatrixXd longitudinal = MatrixXd::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          transverse(a * 2 + b, c * 2 + d) =
              0.5 * (half.splus(a, c) * half.sminus(b, d) + half.sminus(a, c) * half.splus(b, d));
          longitudinal(a * 2 + b, c * 2 + d) = half.sz(a, c) * half.sz(b, d);
        }
  const MatrixXd bond = -(transverse / delta + longitudinal - 0.25 * MatrixXd::Identity(4, 4));
  RealOperator h = RealOperator::zero(shape);
  for (int x = 0; x + 1 < length; ++x) h += embed_pair(shape, static_cast<std::size_t>(x), static_cast<std::size_t>(x + 1), bond);
  const double field = xxz_boundary_field(delta);
  h += field * (embed_site(shape, static_cast<std::size_t>(length - 1), half.sz) - embed_site(shape, 0, half.sz));
  return h;
}

MatrixXd bond_polynomial_matrix(HalfInt s1, HalfInt s2, const BondPolynomial& poly) {
  const int max_degree = std::min(s1.twice(), s2.twice());
  if (poly.degree() > max_degree)
    throw InputError("bond polynomial degree " + std::to_string(poly.degree()) + " exceeds 2 min(s1,s2) = " +
                     std::to_string(max_degree));
  const MatrixXd ss = heisenberg_bond(s1, s2).dense();
  MatrixXd power = MatrixXd::Identity(ss.rows(), ss.cols());
  MatrixXd out = MatrixXd::Zero(ss.rows(), ss.cols());
  for (double c : poly.coeffs) {
    out += c * power;
    power = power * ss;
  }
  return out;
}

RealOperator build_spin1_beta_chain(int length, double beta) {
  if (length < 2) throw InputError("spin-1 chain needs L >= 2");
  const HalfInt one = HalfInt::from_int(1);
  // (1 - X) + beta (1 - X^2) = (1 + beta) - X - beta X^2.
  const BondPolynomial poly{{1.0 + beta, -1.0, -beta}};
  const MatrixXd bond = bond_polynomial_matrix(one, one, poly);
  const HilbertShape shape(std::vector<int>(static_cast<std::size_t>(length), 3));
  RealOperator h = RealOperator::zero(shape);
  for (int x = 0; x + 1 < length; ++x) h += embed_pair(shape, static_cast<std::size_t>(x), static_cast<std::size_t>(x + 1), bond);
  return h;
}

RealOperator build_general_bond_chain(const std::vector<HalfInt>& spins, const std::vector<double>& couplings,
                                      const std::vector<BondPolynomial>& polys) {
  if (spins.empty()) throw InputError("chain needs at least one site");
  if (couplings.size() + 1 != spins.size() || polys.size() + 1 != spins.size())
    throw InputError("general bond chain needs L-1 couplings and L-1 bond polynomials");
  const HilbertShape shape = HilbertShape::from_spins(spins);
  RealOperator h = RealOperator::zero(shape);
  for (std::size_t x = 0; x + 1 < spins.size(); ++x) {
    const MatrixXd bond = couplings[x] * bond_polynomial_matrix(spins[x], spins[x + 1], polys[x]);
    h += embed_pair(shape, x, x + 1, bond);
  }
  return h;
}

}  // namespace foel
