#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "foel/half_int.hpp"
#include "foel/spin_algebra.hpp"

namespace foel {

/// Product-basis indices grouped by twice the total S^3 eigenvalue.
std::map<int, std::vector<std::size_t>> s3_blocks(const HilbertShape& shape);

/// Orthonormal basis of V^(S) = ker(S^+) within the S^3 = S block.
struct HighestWeightBasis {
  HalfInt S;
  std::vector<std::size_t> block_indices;  // product-basis indices of the S^3 = S block
  MatrixXd coords;                         // block_indices.size() x count

  std::size_t count() const { return static_cast<std::size_t>(coords.cols()); }
  /// Same vectors embedded in the full tensor space.
  MatrixXd full_vectors(std::size_t full_dim) const;
};

/// Throws InputError when V^(S) is empty (S is not a label of this shape).
HighestWeightBasis highest_weight_space(const HilbertShape& shape, HalfInt S, double kernel_tol = 1e-8);

struct SectorEntry {
  double min_energy = 0.0;
  double max_energy = 0.0;
  std::size_t dimension = 0;  // dim V^(S)
};

using SectorMap = std::map<HalfInt, SectorEntry>;

struct FoelMargin {
  HalfInt higher;  // S
  HalfInt lower;   // S - 1
  double gap = 0.0;  // E(H, S-1) - E(H, S)
  bool crossing = false;
};

struct FoelVerdict {
  bool ok = true;
  std::vector<FoelMargin> margins;
  double min_gap = 0.0;
  bool has_crossing() const;
  bool has_violation(double tol) const;
};

struct SectorReport {
  SectorMap entries;
  bool foel_ok = false;
  std::vector<FoelMargin> foel_margins;
  bool liebmattis_max_ok = false;
  /// Largest disagreement with the Casimir route; empty when not run.
  std::optional<double> cross_check_deviation;
};

struct SectorOptions {
  double kernel_tol = 1e-8;
  double invariance_tol = 1e-10;
  double foel_tol = 1e-8;
  std::size_t dense_limit = 4096;
  std::size_t cross_check_limit = 1000;
  double cross_check_tol = 1e-9;
  double lanczos_tol = 1e-10;
};

/// Throws SymmetryError unless H commutes with S^3 and S^+ (relative to ||H||).
void require_su2_invariant(const RealOperator& h, const HilbertShape& shape, double tol = 1e-10);

/// All eigenvalues of H restricted to V^(S), ascending.
VectorXd sector_spectrum(const RealOperator& h, const HilbertShape& shape, HalfInt S, double kernel_tol = 1e-8);

/// E(H,S) and its max-energy analogue for every label S present.
///
/// Blocks up to opts.dense_limit are diagonalized densely on V^(S); larger
/// blocks use Lanczos on H + c S^-S^+ (and its negative for the maximum).
/// For full dimension <= opts.cross_check_limit the Casimir route is run as
/// well and the result must agree to opts.cross_check_tol (NumericalError otherwise).
SectorReport sector_energies(const RealOperator& h, const HilbertShape& shape, const SectorOptions& opts = {});

/// Independent oracle: eigenspaces of the Casimir inside each S^3 block.
SectorMap sector_energies_by_casimir(const RealOperator& h, const HilbertShape& shape);

/// FOEL: E(H,S) strictly decreasing in S, adjacent gaps > strict_tol.
/// |gap| <= strict_tol is flagged as a level crossing.
FoelVerdict check_foel(const SectorMap& entries, double strict_tol = 1e-8);

/// Max energies strictly decreasing in S over labels within [lo, hi]
/// (the Lieb-Mattis ordering of -H). Vacuously true with fewer than two labels.
bool check_max_ordering(const SectorMap& entries, std::optional<HalfInt> lo = std::nullopt,
                        std::optional<HalfInt> hi = std::nullopt);

struct S3Spectrum {
  int twice_m = 0;
  std::vector<double> eigenvalues;
};

/// Complete spectrum per S^3 block, blocks in decreasing M. With
/// offset_ground the global minimum is subtracted from every eigenvalue.
std::vector<S3Spectrum> full_spectrum_by_s3(const RealOperator& h, const HilbertShape& shape, bool offset_ground = false);

struct LowEnergyOptions {
  bool cross_check = true;
  std::size_t cross_check_limit = 1000;
  double tol = 1e-9;
};

/// Diagonalize only V^(S_max - n), n = 0..deviations, and return every
/// eigenvalue <= E(H, S_max - deviations), each repeated 2S+1 times, ascending.
/// Relies on FOEL; on small systems the full spectrum is compared and a
/// PropertyViolation thrown on mismatch.
std::vector<double> low_energy_by_deviation(const RealOperator& h, const HilbertShape& shape, int deviations,
                                            const LowEnergyOptions& opts = {});

}  // namespace foel
