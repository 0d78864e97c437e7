#include "foel/temperley_lieb.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "foel/errors.hpp"
#include "foel/hamiltonians.hpp"

namespace foel {

ArcDiagram::ArcDiagram(int k, std::vector<Arc> arcs) : k_(k), arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  if (!valid(k_, arcs_)) throw InputError("invalid arc diagram " + str());
  partner_.assign(static_cast<std::size_t>(k_) + 1, 0);
  for (auto [x, y] : arcs_) {
    partner_[static_cast<std::size_t>(x)] = y;
    partner_[static_cast<std::size_t>(y)] = x;
  }
}

bool ArcDiagram::valid(int k, const std::vector<Arc>& arcs) {
  if (k < 0) return false;
  std::vector<int> partner(static_cast<std::size_t>(k) + 1, 0);
  for (auto [x, y] : arcs) {
    if (x < 1 || y > k || x >= y) return false;
    if (partner[static_cast<std::size_t>(x)] || partner[static_cast<std::size_t>(y)]) return false;
    partner[static_cast<std::size_t>(x)] = y;
    partner[static_cast<std::size_t>(y)] = x;
  }
  // Scan with a stack of open arcs: closings must match the top, and an
  // unpaired vertex may only appear with nothing open.
  std::vector<int> open;
  for (int v = 1; v <= k; ++v) {
    const int p = partner[static_cast<std::size_t>(v)];
    if (p == 0) {
      if (!open.empty()) return false;
    } else if (p > v) {
      open.push_back(v);
    } else {
      if (open.empty() || open.back() != p) return false;
      open.pop_back();
    }
  }
  return true;
}

std::string ArcDiagram::str() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < arcs_.size(); ++i) out << (i ? "," : "") << "[" << arcs_[i].first << "," << arcs_[i].second << "]";
  out << "}/" << k_;
  return out.str();
}

double binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= r; ++i) out = out * static_cast<double>(n - r + i) / static_cast<double>(i);
  return std::round(out);
}

std::size_t diagram_count(int k, int n) {
  if (n < 0 || 2 * n > k) return 0;
  return static_cast<std::size_t>(binomial(k, n) - binomial(k, n - 1));
}

namespace {

void generate_all(int k, int n, std::vector<ArcDiagram>& out) {
  std::vector<ArcDiagram::Arc> arcs;
  std::vector<int> open;
  std::function<void(int)> step = [&](int v) {
    const int remaining = k - v + 1;
    const int closes_needed = static_cast<int>(open.size());
    const int arcs_left = n - static_cast<int>(arcs.size()) - closes_needed;
    if (arcs_left < 0 || 2 * arcs_left + closes_needed > remaining) return;
    if (v > k) {
      out.emplace_back(k, arcs);
      return;
    }
    if (open.empty()) step(v + 1);  // unpaired
    if (arcs_left > 0) {
      open.push_back(v);
      step(v + 1);
      open.pop_back();
    }
    if (!open.empty()) {
      const int x = open.back();
      open.pop_back();
      arcs.emplace_back(x, v);
      step(v + 1);
      arcs.pop_back();
      open.push_back(x);
    }
  };
  step(1);
}

}  // namespace

std::vector<ArcDiagram> enumerate_arc_diagrams(int k, int n) {
  if (k < 0 || n < 0 || 2 * n > k) throw InputError("arc diagrams need 0 <= 2n <= k");
  std::vector<ArcDiagram> out;
  if (k == 0) {
    out.emplace_back(0, std::vector<ArcDiagram::Arc>{});
    return out;
  }
  if (2 * n <= k - 1)
    for (const ArcDiagram& d : enumerate_arc_diagrams(k - 1, n)) out.push_back(embed_diagram(d));
  std::vector<ArcDiagram> all;
  generate_all(k, n, all);
  std::vector<ArcDiagram> last_paired;
  for (ArcDiagram& d : all)
    if (d.paired(k)) last_paired.push_back(std::move(d));
  std::sort(last_paired.begin(), last_paired.end());
  out.insert(out.end(), last_paired.begin(), last_paired.end());
  return out;
}

ArcDiagram embed_diagram(const ArcDiagram& d) { return ArcDiagram(d.k() + 1, d.arcs()); }

DiagramCombination tl_generator_action(const ArcDiagram& d, int x, double q) {
  if (x < 1 || x >= d.k()) throw InputError("generator index out of range");
  DiagramCombination out;
  const int a = d.partner(x);
  const int b = d.partner(x + 1);
  if (a == 0 && b == 0) return out;
  if (a == x + 1) {
    out[d] = -(q + 1.0 / q);
    return out;
  }
  std::vector<ArcDiagram::Arc> arcs;
  for (const auto& arc : d.arcs())
    if (arc.first != x && arc.second != x && arc.first != x + 1 && arc.second != x + 1) arcs.push_back(arc);
  arcs.emplace_back(x, x + 1);
  if (a != 0 && b != 0) arcs.emplace_back(std::min(a, b), std::max(a, b));
  out[ArcDiagram(d.k(), std::move(arcs))] = 1.0;
  return out;
}

TLMatrix tl_hamiltonian_matrix(int k, int n, const std::vector<double>& couplings, double q) {
  if (k < 1) throw InputError("TL matrix needs k >= 1");
  if (static_cast<int>(couplings.size()) != k - 1) throw InputError("TL matrix needs k-1 couplings");
  for (double j : couplings)
    if (!(j > 0.0) || !std::isfinite(j)) throw InputError("couplings must be strictly positive");
  if (!(q > 0.0 && q <= 1.0)) throw InputError("q must lie in (0, 1]");
  TLMatrix m{k, n, q, enumerate_arc_diagrams(k, n), {}};
  std::map<ArcDiagram, Eigen::Index> index;
  for (std::size_t i = 0; i < m.basis.size(); ++i) index.emplace(m.basis[i], static_cast<Eigen::Index>(i));
  const auto d = static_cast<Eigen::Index>(m.basis.size());
  m.A = MatrixXd::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (int x = 1; x < k; ++x) {
      for (const auto& [img, c] : tl_generator_action(m.basis[static_cast<std::size_t>(j)], x, q)) {
        auto it = index.find(img);
        if (it == index.end()) throw NumericalError("generator image " + img.str() + " outside the basis");
        m.A(it->second, j) += -2.0 * couplings[static_cast<std::size_t>(x - 1)] * c;
      }
    }
  }
  return m;
}

double max_offdiagonal(const MatrixXd& a) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) worst = std::max(worst, a(i, j));
  return worst;
}

DominanceVerdict check_dominance(const TLMatrix& ak, const TLMatrix& ak1, double tol) {
  if (ak1.k != ak.k + 1 || ak1.n != ak.n) throw InputError("dominance needs (k, n) and (k+1, n)");
  DominanceVerdict v;
  v.dimension_ok = ak1.basis.size() >= ak.basis.size();
  if (!v.dimension_ok) return v;
  for (std::size_t i = 0; i < ak.basis.size(); ++i)
    if (!(ak1.basis[i] == embed_diagram(ak.basis[i])))
      throw InputError("basis index " + std::to_string(i) + " is misaligned between k and k+1");
  const Eigen::Index d = ak.A.rows();
  v.worst_excess = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      const double excess = ak1.A(i, j) - ak.A(i, j);
      v.worst_excess = std::max(v.worst_excess, excess);
      if (excess > tol) ++v.violations;
    }
  if (d == 0) v.worst_excess = 0.0;
  v.holds = v.violations == 0;
  return v;
}

bool is_irreducible(const MatrixXd& a, double zero_tol) {
  const Eigen::Index n = a.rows();
  if (n <= 1) return true;
  auto reaches_all = [&](bool transpose) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Eigen::Index> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const Eigen::Index i = stack.back();
      stack.pop_back();
      for (Eigen::Index j = 0; j < n; ++j) {
        const double v = transpose ? a(j, i) : a(i, j);
        if (j != i && std::abs(v) > zero_tol && !seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = 1;
          stack.push_back(j);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  return reaches_all(false) && reaches_all(true);
}

double inf_spectrum(const MatrixXd& a) {
  if (a.rows() == 0) throw InputError("empty matrix has no spectrum");
  Eigen::EigenSolver<MatrixXd> solver(a, false);
  if (solver.info() != Eigen::Success) throw NumericalError("general eigensolver failed");
  return solver.eigenvalues().real().minCoeff();
}

PerronResult perron_ground_vector(const MatrixXd& a, double positivity_tol) {
  if (a.rows() == 0 || a.rows() != a.cols()) throw InputError("Perron vector needs a nonempty square matrix");
  PerronResult r;
  r.irreducible = is_irreducible(a);
  Eigen::EigenSolver<MatrixXd> solver(a, true);
  if (solver.info() != Eigen::Success) throw NumericalError("general eigensolver failed");
  const Eigen::VectorXcd ev = solver.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i)
    if (ev(i).real() < ev(best).real()) best = i;
  r.eigenvalue = ev(best).real();
  r.gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (i != best) r.gap = std::min(r.gap, std::abs(ev(i) - ev(best)));
  r.simple = r.gap >= 1e-10;
  r.vector = solver.eigenvectors().col(best).real();
  r.vector.normalize();
  if (r.vector.sum() < 0.0) r.vector = -r.vector;
  const double top = r.vector.cwiseAbs().maxCoeff();
  r.positive = (r.vector.array() > positivity_tol * top).all();
  return r;
}

ComparisonVerdict min_spec_comparison(const MatrixXd& a, const MatrixXd& b, double tol) {
  ComparisonVerdict v;
  const Eigen::Index n = a.rows();
  const Eigen::Index m = b.rows();
  auto fail = [&](const std::string& why) {
    v.hypothesis_failure = why;
    return v;
  };
  if (n == 0 || a.cols() != n || b.cols() != m) return fail("matrices must be nonempty and square");
  if (n > m) return fail("A must not be larger than B");
  if (max_offdiagonal(a) > tol) return fail("A has a positive off-diagonal entry");
  if (max_offdiagonal(b) > tol) return fail("B has a positive off-diagonal entry");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (b(i, j) > a(i, j) + tol) return fail("B exceeds A on the shared block");
      if (b(i, j) < a(i, j) - tol) v.case_i = true;
    }
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      if ((i >= n || j >= n) && b(i, j) < -tol) v.case_ii = true;
  v.hypotheses_ok = true;
  v.inf_a = inf_spectrum(a);
  v.inf_b = inf_spectrum(b);
  v.strict_expected = (v.case_i || v.case_ii) && is_irreducible(b, tol);
  const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  v.conclusion_ok = v.strict_expected ? (v.inf_a - v.inf_b > tol * scale) : (v.inf_b <= v.inf_a + 1e3 * tol * scale);
  return v;
}

VectorXd expand_diagram_to_tensor(const ArcDiagram& d, double q) {
  const int k = d.k();
  VectorXd out = VectorXd::Zero(Eigen::Index{1} << k);
  const auto& arcs = d.arcs();
  const std::size_t terms = std::size_t{1} << arcs.size();
  // Vertex v (1-based) is tensor site v-1, the slowest index being vertex 1; digit 1 means |->.
  auto bit = [k](int v) { return std::size_t{1} << (k - v); };
  for (std::size_t t = 0; t < terms; ++t) {
    std::size_t index = 0;
    double coeff = 1.0;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      if (t >> a & 1U) {
        index |= bit(arcs[a].first);
        coeff = -coeff;
      } else {
        index |= bit(arcs[a].second);
        coeff *= q;
      }
    }
    out(static_cast<Eigen::Index>(index)) += coeff;
  }
  return out;
}

RealOperator tl_generator_operator(int k, int x, double q) {
  if (x < 1 || x >= k) throw InputError("generator index out of range");
  VectorXd xi = VectorXd::Zero(4);
  xi(1) = q;
  xi(2) = -1.0;
  const HilbertShape shape(std::vector<int>(static_cast<std::size_t>(k), 2));
  return embed_pair(shape, static_cast<std::size_t>(x - 1), static_cast<std::size_t>(x), -xi * xi.transpose() / q);
}

std::vector<FKBasisVector> fk_highest_weight_basis(const std::vector<HalfInt>& spins, HalfInt S) {
  if (spins.empty()) throw InputError("FK basis needs at least one site");
  int total = 0;
  for (HalfInt s : spins) {
    if (s.twice() <= 0) throw InputError("FK basis needs spins >= 1/2");
    total += s.twice();
  }
  if (S.twice() < 0 || S.twice() > total || (total - S.twice()) % 2 != 0)
    throw InputError("S = " + S.str() + " is not a total-spin label of these sites");
  const int downs = (total - S.twice()) / 2;
  const HilbertShape shape = HilbertShape::from_spins(spins);
  const std::size_t L = spins.size();

  std::vector<int> offset(L + 1, 0);
  for (std::size_t x = 0; x < L; ++x) offset[x + 1] = offset[x] + spins[x].twice();
  std::vector<int> block_of(static_cast<std::size_t>(total));
  for (std::size_t x = 0; x < L; ++x)
    for (int p = offset[x]; p < offset[x + 1]; ++p) block_of[static_cast<std::size_t>(p)] = static_cast<int>(x);

  std::vector<FKBasisVector> out;
  std::vector<int> n_down(L, 0);
  std::function<void(std::size_t, int)> choose = [&](std::size_t x, int left) {
    if (x == L) {
      if (left != 0) return;
      // Arrow string: per block n_down down arrows then the up arrows.
      std::vector<char> down(static_cast<std::size_t>(total), 0);
      for (std::size_t b = 0; b < L; ++b)
        for (int p = 0; p < n_down[b]; ++p) down[static_cast<std::size_t>(offset[b] + p)] = 1;
      std::vector<int> open;
      std::vector<std::pair<int, int>> arcs;
      for (int p = 0; p < total; ++p) {
        if (!down[static_cast<std::size_t>(p)]) {
          open.push_back(p);
        } else {
          if (open.empty()) return;  // unpaired down arrow
          arcs.emplace_back(open.back(), p);
          open.pop_back();
        }
      }
      FKBasisVector v;
      for (std::size_t b = 0; b < L; ++b) v.blocks.push_back({spins[b], n_down[b]});
      v.arcs = arcs;
      v.expanded = VectorXd::Zero(static_cast<Eigen::Index>(shape.dim()));
      std::vector<int> k_down(L);
      for (std::size_t t = 0; t < (std::size_t{1} << arcs.size()); ++t) {
        std::fill(k_down.begin(), k_down.end(), 0);
        double coeff = 1.0;
        for (std::size_t a = 0; a < arcs.size(); ++a) {
          // |up down> - |down up>
          if (t >> a & 1U) {
            ++k_down[static_cast<std::size_t>(block_of[static_cast<std::size_t>(arcs[a].first)])];
            coeff = -coeff;
          } else {
            ++k_down[static_cast<std::size_t>(block_of[static_cast<std::size_t>(arcs[a].second)])];
          }
        }
        std::size_t index = 0;
        for (std::size_t b = 0; b < L; ++b) {
          coeff /= std::sqrt(binomial(spins[b].twice(), k_down[b]));
          index += static_cast<std::size_t>(k_down[b]) * shape.stride(b);
        }
        v.expanded(static_cast<Eigen::Index>(index)) += coeff;
      }
      out.push_back(std::move(v));
      return;
    }
    for (int k = 0; k <= std::min(left, spins[x].twice()); ++k) {
      n_down[x] = k;
      choose(x + 1, left - k);
    }
    n_down[x] = 0;
  };
  choose(0, downs);
  return out;
}

FKMatrix fk_hamiltonian_matrix(const std::vector<HalfInt>& spins, const std::vector<double>& couplings, HalfInt S) {
  FKMatrix m;
  m.basis = fk_highest_weight_basis(spins, S);
  if (m.basis.empty()) throw InputError("FK basis for S = " + S.str() + " is empty");
  const RealOperator h = build_normalized_chain(ChainSpec{spins, couplings});
  const auto d = static_cast<Eigen::Index>(m.basis.size());
  MatrixXd V(static_cast<Eigen::Index>(h.dim()), d);
  for (Eigen::Index j = 0; j < d; ++j) V.col(j) = m.basis[static_cast<std::size_t>(j)].expanded;
  const MatrixXd HV = h.sparse() * V;
  const MatrixXd G = V.transpose() * V;
  Eigen::SelfAdjointEigenSolver<MatrixXd> gs(G, Eigen::EigenvaluesOnly);
  const double lo = gs.eigenvalues().minCoeff();
  const double hi = gs.eigenvalues().maxCoeff();
  m.gram_condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (!(m.gram_condition <= 1e12))
    throw NumericalError("FK Gram matrix is ill-conditioned (condition number " + std::to_string(m.gram_condition) + ")");
  m.A = G.ldlt().solve(V.transpose() * HV);
  m.residual = (HV - V * m.A).cwiseAbs().maxCoeff();
  m.max_positive_offdiag = max_offdiagonal(m.A);
  return m;
}

}  // namespace foel
