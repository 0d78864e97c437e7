#pragma once

#include <cstdint>
#include <vector>

#include "foel/hamiltonians.hpp"
#include "foel/spin_algebra.hpp"

namespace foel {

/// Occupation eta over |Lambda| <= 63 vertices; bit x is eta(x), x being the
/// site position in the graph's sorted order.
struct ParticleConfig {
  std::uint64_t bits = 0;
  int num_sites = 0;

  int particles() const;
  bool occupied(int x) const { return (bits >> x & 1U) != 0; }
};

/// All n-particle configurations on num_sites vertices, by increasing bits.
std::vector<ParticleConfig> particle_configs(int num_sites, int n);

struct SSEPGenerator {
  int n = 0;
  std::vector<ParticleConfig> configs;
  RealOperator L;
};

/// (Lf)(eta) = sum_{x~y} rate_xy (f(eta) - f(eta^{xy})) on n-particle configurations.
/// rates[i] belongs to g.edges()[i]; an empty vector means edge couplings J.
SSEPGenerator ssep_generator(const SpinGraph& g, const std::vector<double>& rates, int n);

/// Smallest eigenvalue above 1e-10. Throws InputError when the zero
/// eigenvalue is not simple (disconnected graph) or the sector has one configuration.
double spectral_gap(const SSEPGenerator& gen);

struct AldousRow {
  int n = 0;
  std::size_t sector_dim = 0;
  double lambda = 0.0;
  double relative_deviation = 0.0;  // |lambda(n) - lambda(1)| / lambda(1)
};

struct AldousReport {
  std::vector<AldousRow> rows;  // n = 1 .. |Lambda|-1
  double lambda1 = 0.0;
  double max_deviation = 0.0;
  bool holds = false;
};

/// lambda(n) for every nontrivial sector; holds iff all deviations <= tol.
AldousReport check_aldous(const SpinGraph& g, const std::vector<double>& rates, double tol = 1e-9);

struct SpinMapReport {
  double max_deviation = 0.0;   // max over sectors of |U L U* - H| entrywise
  bool s3_ok = false;           // S^3_tot = -|Lambda|/2 + n on every sector
  double max_gap_deviation = 0.0;  // |lambda(n) - second H eigenvalue in the block|
  bool holds = false;
};

/// Spin-1/2 graph: H = sum J (1/4 - S.S) against the SSEP generator with rates J/2.
SpinMapReport verify_spin_map(const SpinGraph& g, double tol = 1e-12, double gap_tol = 1e-9);

}  // namespace foel
