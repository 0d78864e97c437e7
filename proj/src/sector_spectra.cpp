#include "foel/sector_spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "foel/errors.hpp"
#include "foel/linalg.hpp"

namespace foel {

std::map<int, std::vector<std::size_t>> s3_blocks(const HilbertShape& shape) {
  std::map<int, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < shape.dim(); ++i) blocks[shape.twice_m(i)].push_back(i);
  return blocks;
}

MatrixXd HighestWeightBasis::full_vectors(std::size_t full_dim) const {
  MatrixXd out = MatrixXd::Zero(static_cast<Eigen::Index>(full_dim), coords.cols());
  for (std::size_t i = 0; i < block_indices.size(); ++i) out.row(static_cast<Eigen::Index>(block_indices[i])) = coords.row(static_cast<Eigen::Index>(i));
  return out;
}

namespace {

// Shared per-shape data for the sector routines.
struct SectorContext {
  HilbertShape shape;
  TotalSpinOps ops;
  std::map<int, std::vector<std::size_t>> blocks;

  explicit SectorContext(const HilbertShape& s) : shape(s), ops(total_spin_ops(s)), blocks(s3_blocks(s)) {}

  const std::vector<std::size_t>& block(int twice_m) const {
    static const std::vector<std::size_t> empty;
    auto it = blocks.find(twice_m);
    return it == blocks.end() ? empty : it->second;
  }

  // dim V^(S) = |block S| - |block S+1| for S >= 0.
  std::size_t hw_count(int twice_s) const { return block(twice_s).size() - block(twice_s + 2).size(); }

  HighestWeightBasis hw_basis(int twice_s, double kernel_tol) const {
    const auto& from = block(twice_s);
    const auto& to = block(twice_s + 2);
    const MatrixXd raise = linalg::restrict(ops.splus.sparse(), to, from);
    HighestWeightBasis hw{HalfInt::from_twice(twice_s), from, linalg::kernel_basis(raise, kernel_tol)};
    if (hw.count() != hw_count(twice_s))
      throw NumericalError("highest-weight kernel has dimension " + std::to_string(hw.count()) + ", expected " +
                           std::to_string(hw_count(twice_s)));
    return hw;
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (const auto& [m2, idx] : blocks)
      if (m2 >= 0 && hw_count(m2) > 0) out.push_back(m2);
    return out;
  }
};

VectorXd hw_spectrum(const RealOperator& h, const SectorContext& ctx, int twice_s, double kernel_tol) {
  const HighestWeightBasis hw = ctx.hw_basis(twice_s, kernel_tol);
  const MatrixXd hb = linalg::restrict(h.sparse(), hw.block_indices);
  const MatrixXd reduced = hw.coords.transpose() * hb * hw.coords;
  return linalg::symmetric_eigenvalues(0.5 * (reduced + reduced.transpose()));
}

// Extremal energies on V^(S) for blocks too large for dense work: Lanczos on
// sign*H + c S^-S^+ restricted to the block, with c large enough that every
// non-highest-weight state is pushed above the whole spectrum of H.
SectorEntry lanczos_sector(const RealOperator& h, const SectorContext& ctx, int twice_s, double tol) {
  const auto& from = ctx.block(twice_s);
  const auto& to = ctx.block(twice_s + 2);
  std::vector<Eigen::Triplet<double>> hb_t;
  std::vector<std::size_t> pos(ctx.shape.dim(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < from.size(); ++i) pos[from[i]] = i;
  for (std::size_t i = 0; i < from.size(); ++i)
    for (SparseMatrix::InnerIterator it(h.sparse(), static_cast<Eigen::Index>(from[i])); it; ++it) {
      const std::size_t j = pos[static_cast<std::size_t>(it.col())];
      if (j != std::numeric_limits<std::size_t>::max()) hb_t.emplace_back(i, j, it.value());
    }
  const auto n = static_cast<Eigen::Index>(from.size());
  SparseMatrix hb(n, n);
  hb.setFromTriplets(hb_t.begin(), hb_t.end());

  std::vector<std::size_t> to_pos(ctx.shape.dim(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < to.size(); ++i) to_pos[to[i]] = i;
  std::vector<Eigen::Triplet<double>> r_t;
  for (std::size_t i = 0; i < to.size(); ++i)
    for (SparseMatrix::InnerIterator it(ctx.ops.splus.sparse(), static_cast<Eigen::Index>(to[i])); it; ++it) {
      const std::size_t j = pos[static_cast<std::size_t>(it.col())];
      if (j != std::numeric_limits<std::size_t>::max()) r_t.emplace_back(i, j, it.value());
    }
  SparseMatrix raise(static_cast<Eigen::Index>(to.size()), n);
  raise.setFromTriplets(r_t.begin(), r_t.end());

  const double spread = 2.0 * linalg::gershgorin_radius(hb);
  const double penalty = spread / (static_cast<double>(twice_s) + 2.0) + 1.0;
  auto run = [&](double sign) {
    auto apply = [&](const VectorXd& v) -> VectorXd {
      VectorXd out = sign * (hb * v);
      if (raise.rows() > 0) out += penalty * (raise.transpose() * (raise * v));
      return out;
    };
    return linalg::lanczos_smallest(apply, from.size(), tol * std::max(1.0, spread)).eigenvalue;
  };
  SectorEntry e;
  e.min_energy = run(1.0);
  e.max_energy = -run(-1.0);
  e.dimension = ctx.hw_count(twice_s);
  return e;
}

}  // namespace

HighestWeightBasis highest_weight_space(const HilbertShape& shape, HalfInt S, double kernel_tol) {
  const SectorContext ctx(shape);
  if (S.twice() < 0 || ctx.block(S.twice()).empty() || ctx.hw_count(S.twice()) == 0)
    throw InputError("spin " + S.str() + " does not occur in this Hilbert space");
  return ctx.hw_basis(S.twice(), kernel_tol);
}

void require_su2_invariant(const RealOperator& h, const HilbertShape& shape, double tol) {
  if (h.dim() != shape.dim()) throw InputError("operator dimension does not match Hilbert shape");
  const TotalSpinOps ops = total_spin_ops(shape);
  const double scale = std::max(1.0, h.max_abs());
  const double c3 = commutator_norm(h, ops.s3);
  const double cp = commutator_norm(h, ops.splus);
  if (c3 > tol * scale || cp > tol * scale)
    throw SymmetryError("operator is not SU(2) invariant: |[H,S3]| = " + std::to_string(c3) +
                        ", |[H,S+]| = " + std::to_string(cp));
}

VectorXd sector_spectrum(const RealOperator& h, const HilbertShape& shape, HalfInt S, double kernel_tol) {
  const SectorContext ctx(shape);
  if (S.twice() < 0 || ctx.hw_count(S.twice()) == 0)
    throw InputError("spin " + S.str() + " does not occur in this Hilbert space");
  return hw_spectrum(h, ctx, S.twice(), kernel_tol);
}

SectorMap sector_energies_by_casimir(const RealOperator& h, const HilbertShape& shape) {
  const SectorContext ctx(shape);
  const RealOperator c = casimir(shape);
  SectorMap out;
  for (const auto& [m2, idx] : ctx.blocks) {
    if (m2 < 0) continue;
    Eigen::SelfAdjointEigenSolver<MatrixXd> cs(linalg::restrict(c.sparse(), idx));
    std::vector<Eigen::Index> chosen;
    for (Eigen::Index k = 0; k < cs.eigenvalues().size(); ++k) {
      // S(S+1) = c  =>  2S = sqrt(1 + 4c) - 1
      const int twice_s = static_cast<int>(std::lround(std::sqrt(1.0 + 4.0 * cs.eigenvalues()(k)) - 1.0));
      if (twice_s == m2) chosen.push_back(k);
    }
    if (chosen.empty()) continue;
    MatrixXd basis(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(chosen.size()));
    for (std::size_t j = 0; j < chosen.size(); ++j) basis.col(static_cast<Eigen::Index>(j)) = cs.eigenvectors().col(chosen[j]);
    const MatrixXd reduced = basis.transpose() * linalg::restrict(h.sparse(), idx) * basis;
    const VectorXd ev = linalg::symmetric_eigenvalues(0.5 * (reduced + reduced.transpose()));
    out[HalfInt::from_twice(m2)] = SectorEntry{ev(0), ev(ev.size() - 1), chosen.size()};
  }
  return out;
}

SectorReport sector_energies(const RealOperator& h, const HilbertShape& shape, const SectorOptions& opts) {
  require_su2_invariant(h, shape, opts.invariance_tol);
  const SectorContext ctx(shape);
  SectorReport report;
  for (int twice_s : ctx.labels()) {
    SectorEntry entry;
    if (ctx.block(twice_s).size() <= opts.dense_limit) {
      const VectorXd ev = hw_spectrum(h, ctx, twice_s, opts.kernel_tol);
      entry = SectorEntry{ev(0), ev(ev.size() - 1), static_cast<std::size_t>(ev.size())};
    } else {
      entry = lanczos_sector(h, ctx, twice_s, opts.lanczos_tol);
    }
    report.entries[HalfInt::from_twice(twice_s)] = entry;
  }

  if (shape.dim() <= opts.cross_check_limit) {
    const SectorMap oracle = sector_energies_by_casimir(h, shape);
    double worst = 0.0;
    if (oracle.size() != report.entries.size()) worst = std::numeric_limits<double>::infinity();
    for (const auto& [s, e] : report.entries) {
      auto it = oracle.find(s);
      if (it == oracle.end() || it->second.dimension != e.dimension) {
        worst = std::numeric_limits<double>::infinity();
        continue;
      }
      worst = std::max({worst, std::abs(it->second.min_energy - e.min_energy), std::abs(it->second.max_energy - e.max_energy)});
    }
    report.cross_check_deviation = worst;
    const double scale = std::max(1.0, h.max_abs());
    if (!(worst <= opts.cross_check_tol * scale))
      throw NumericalError("kernel and Casimir sector routes disagree by " + std::to_string(worst));
  }

  const FoelVerdict verdict = check_foel(report.entries, opts.foel_tol);
  report.foel_ok = verdict.ok;
  report.foel_margins = verdict.margins;
  report.liebmattis_max_ok = check_max_ordering(report.entries);
  return report;
}

bool FoelVerdict::has_crossing() const {
  return std::any_of(margins.begin(), margins.end(), [](const FoelMargin& m) { return m.crossing; });
}

bool FoelVerdict::has_violation(double tol) const {
  return std::any_of(margins.begin(), margins.end(), [tol](const FoelMargin& m) { return m.gap < -tol; });
}

FoelVerdict check_foel(const SectorMap& entries, double strict_tol) {
  FoelVerdict v;
  v.min_gap = std::numeric_limits<double>::infinity();
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    auto next = std::next(it);
    if (next == entries.end()) break;
    // it = S-1 (lower), next = S (higher); labels are consecutive.
    FoelMargin m{next->first, it->first, it->second.min_energy - next->second.min_energy, false};
    m.crossing = std::abs(m.gap) <= strict_tol;
    if (!(m.gap > strict_tol)) v.ok = false;
    v.min_gap = std::min(v.min_gap, m.gap);
    v.margins.push_back(m);
  }
  std::reverse(v.margins.begin(), v.margins.end());
  if (v.margins.empty()) v.min_gap = 0.0;
  return v;
}

bool check_max_ordering(const SectorMap& entries, std::optional<HalfInt> lo, std::optional<HalfInt> hi) {
  std::optional<double> previous;
  for (const auto& [s, e] : entries) {
    if (lo && s < *lo) continue;
    if (hi && s > *hi) continue;
    if (previous && !(e.max_energy < *previous)) return false;
    previous = e.max_energy;
  }
  return true;
}

std::vector<S3Spectrum> full_spectrum_by_s3(const RealOperator& h, const HilbertShape& shape, bool offset_ground) {
  const auto blocks = s3_blocks(shape);
  const TotalSpinOps ops = total_spin_ops(shape);
  if (commutator_norm(h, ops.s3) > 1e-10 * std::max(1.0, h.max_abs()))
    throw SymmetryError("operator does not conserve total S^3");
  std::vector<S3Spectrum> out;
  double ground = std::numeric_limits<double>::infinity();
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    const VectorXd ev = linalg::symmetric_eigenvalues(linalg::restrict(h.sparse(), it->second));
    out.push_back({it->first, std::vector<double>(ev.begin(), ev.end())});
    ground = std::min(ground, ev(0));
  }
  if (offset_ground)
    for (auto& block : out)
      for (double& e : block.eigenvalues) e -= ground;
  return out;
}

std::vector<double> low_energy_by_deviation(const RealOperator& h, const HilbertShape& shape, int deviations,
                                            const LowEnergyOptions& opts) {
  if (deviations < 0) throw InputError("number of spin deviations must be non-negative");
  require_su2_invariant(h, shape);
  const SectorContext ctx(shape);
  const int top = shape.max_spin().twice();
  std::vector<std::pair<int, VectorXd>> sectors;
  for (int n = 0; n <= deviations; ++n) {
    const int twice_s = top - 2 * n;
    if (twice_s < 0 || ctx.hw_count(twice_s) == 0) break;
    sectors.emplace_back(twice_s, hw_spectrum(h, ctx, twice_s, 1e-8));
  }
  // With every label diagonalized there is nothing left to miss.
  const int below = sectors.back().first - 2;
  const bool complete = below < 0 || ctx.hw_count(below) == 0;
  const double cutoff = complete ? std::numeric_limits<double>::infinity() : sectors.back().second(0);
  std::vector<double> out;
  for (const auto& [twice_s, ev] : sectors)
    for (double e : ev)
      if (e <= cutoff + opts.tol) out.insert(out.end(), static_cast<std::size_t>(twice_s + 1), e);
  std::sort(out.begin(), out.end());

  if (opts.cross_check && shape.dim() <= opts.cross_check_limit) {
    const VectorXd full = linalg::symmetric_eigenvalues(h.dense());
    std::vector<double> truncated;
    for (double e : full)
      if (e <= cutoff + opts.tol) truncated.push_back(e);
    bool same = truncated.size() == out.size();
    for (std::size_t i = 0; same && i < out.size(); ++i) same = std::abs(truncated[i] - out[i]) <= opts.tol * std::max(1.0, std::abs(out[i]));
    if (!same)
      throw PropertyViolation("low-energy spectrum from " + std::to_string(sectors.size()) +
                              " sectors disagrees with the full spectrum (FOEL precondition fails)");
  }
  return out;
}

}  // namespace foel
