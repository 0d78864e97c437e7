#include "foel/ssep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "foel/errors.hpp"
#include "foel/linalg.hpp"

namespace foel {

int ParticleConfig::particles() const { return std::popcount(bits); }

std::vector<ParticleConfig> particle_configs(int num_sites, int n) {
  if (num_sites < 1 || num_sites > 30) throw InputError("SSEP supports 1..30 sites");
  if (n < 0 || n > num_sites) throw InputError("particle number must lie in 0..|Lambda|");
  std::vector<ParticleConfig> out;
  const std::uint64_t end = std::uint64_t{1} << num_sites;
  for (std::uint64_t b = 0; b < end; ++b)
    if (std::popcount(b) == n) out.push_back({b, num_sites});
  return out;
}

namespace {

std::vector<double> edge_rates(const SpinGraph& g, const std::vector<double>& rates) {
  if (rates.empty()) {
    std::vector<double> out;
    for (const Edge& e : g.edges()) out.push_back(e.J);
    return out;
  }
  if (rates.size() != g.edges().size()) throw InputError("need one rate per edge");
  for (double r : rates)
    if (!(r > 0.0) || !std::isfinite(r)) throw InputError("SSEP rates must be strictly positive");
  return rates;
}

}  // namespace

SSEPGenerator ssep_generator(const SpinGraph& g, const std::vector<double>& rates, int n) {
  const std::vector<double> r = edge_rates(g, rates);
  SSEPGenerator gen{n, particle_configs(static_cast<int>(g.size()), n), {}};
  auto index_of = [&](std::uint64_t bits) {
    auto it = std::lower_bound(gen.configs.begin(), gen.configs.end(), bits,
                               [](const ParticleConfig& c, std::uint64_t b) { return c.bits < b; });
    return static_cast<Eigen::Index>(it - gen.configs.begin());
  };
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t i = 0; i < gen.configs.size(); ++i) {
    const ParticleConfig& c = gen.configs[i];
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const int x = static_cast<int>(g.position(g.edges()[e].u));
      const int y = static_cast<int>(g.position(g.edges()[e].v));
      if (c.occupied(x) == c.occupied(y)) continue;
      const std::uint64_t swapped = c.bits ^ (std::uint64_t{1} << x) ^ (std::uint64_t{1} << y);
      triplets.emplace_back(i, i, r[e]);
      triplets.emplace_back(i, index_of(swapped), -r[e]);
    }
  }
  const auto dim = static_cast<Eigen::Index>(gen.configs.size());
  SparseMatrix m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  gen.L = RealOperator(std::move(m), {BasisTag::Kind::Configuration, {}, "ssep n=" + std::to_string(n)});
  return gen;
}

double spectral_gap(const SSEPGenerator& gen) {
  if (gen.configs.size() < 2) throw InputError("sector with a single configuration has no spectral gap");
  const VectorXd ev = linalg::symmetric_eigenvalues(gen.L.dense());
  std::size_t zeros = 0;
  for (double e : ev)
    if (e <= 1e-10) ++zeros;
  if (zeros != 1)
    throw InputError("zero eigenvalue has multiplicity " + std::to_string(zeros) + " in sector n=" +
                     std::to_string(gen.n) + "; graph is disconnected");
  return ev(1);
}

AldousReport check_aldous(const SpinGraph& g, const std::vector<double>& rates, double tol) {
  if (g.size() < 2) throw InputError("Aldous check needs at least two vertices");
  if (!g.connected()) throw InputError("Aldous check needs a connected graph");
  AldousReport rep;
  const int N = static_cast<int>(g.size());
  for (int n = 1; n < N; ++n) {
    const SSEPGenerator gen = ssep_generator(g, rates, n);
    rep.rows.push_back({n, gen.configs.size(), spectral_gap(gen), 0.0});
  }
  rep.lambda1 = rep.rows.front().lambda;
  for (AldousRow& row : rep.rows) {
    row.relative_deviation = std::abs(row.lambda - rep.lambda1) / rep.lambda1;
    rep.max_deviation = std::max(rep.max_deviation, row.relative_deviation);
  }
  rep.holds = rep.max_deviation <= tol;
  return rep;
}

SpinMapReport verify_spin_map(const SpinGraph& g, double tol, double gap_tol) {
  for (const Site& s : g.sites())
    if (s.s.twice() != 1) throw InputError("spin map needs spin-1/2 at every vertex");
  const int N = static_cast<int>(g.size());
  const HilbertShape shape = g.shape();
  // sum J (1/4 - S.S)
  double quarter = 0.0;
  for (const Edge& e : g.edges()) quarter += 0.25 * e.J;
  const MatrixXd H = build_heisenberg(g).dense() + quarter * MatrixXd::Identity(static_cast<Eigen::Index>(shape.dim()),
                                                                                static_cast<Eigen::Index>(shape.dim()));
  std::vector<double> half_rates;
  for (const Edge& e : g.edges()) half_rates.push_back(0.5 * e.J);

  // Tensor index of a configuration: digit 0 (|+>) where occupied.
  auto tensor_index = [&](const ParticleConfig& c) {
    std::size_t idx = 0;
    for (int x = 0; x < N; ++x)
      if (!c.occupied(x)) idx += shape.stride(static_cast<std::size_t>(x));
    return static_cast<Eigen::Index>(idx);
  };

  SpinMapReport rep;
  rep.s3_ok = true;
  MatrixXd conjugated = MatrixXd::Zero(H.rows(), H.cols());
  const bool connected = g.connected();
  for (int n = 0; n <= N; ++n) {
    const SSEPGenerator gen = ssep_generator(g, half_rates, n);
    const MatrixXd L = gen.L.dense();
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < gen.configs.size(); ++i) {
      const Eigen::Index ti = tensor_index(gen.configs[i]);
      block.push_back(static_cast<std::size_t>(ti));
      if (shape.twice_m(static_cast<std::size_t>(ti)) != 2 * n - N) rep.s3_ok = false;
      for (std::size_t j = 0; j < gen.configs.size(); ++j)
        conjugated(ti, tensor_index(gen.configs[j])) = L(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    if (connected && gen.configs.size() >= 2) {
      std::sort(block.begin(), block.end());
      MatrixXd hb(static_cast<Eigen::Index>(block.size()), static_cast<Eigen::Index>(block.size()));
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = 0; j < block.size(); ++j)
          hb(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
              H(static_cast<Eigen::Index>(block[i]), static_cast<Eigen::Index>(block[j]));
      const VectorXd ev = linalg::symmetric_eigenvalues(hb);
      rep.max_gap_deviation = std::max(rep.max_gap_deviation, std::abs(spectral_gap(gen) - ev(1)));
    }
  }
  rep.max_deviation = (conjugated - H).cwiseAbs().maxCoeff();
  rep.holds = rep.max_deviation <= tol && rep.s3_ok && rep.max_gap_deviation <= gap_tol;
  return rep;
}

}  // namespace foel
