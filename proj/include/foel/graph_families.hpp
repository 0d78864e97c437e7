#pragma once

#include <random>
#include <vector>

#include "foel/hamiltonians.hpp"

namespace foel::graphs {

/// Path 0-1-...-(n-1). couplings empty means all 1.
SpinGraph path(int n, HalfInt s, const std::vector<double>& couplings = {});
SpinGraph cycle(int n, HalfInt s, double J = 1.0);
SpinGraph complete(int n, HalfInt s, double J = 1.0);

/// One representative per isomorphism class of trees on n vertices, unit couplings.
std::vector<SpinGraph> all_trees(int n, HalfInt s);

/// Connected graph on n vertices: a random spanning tree plus each further
/// edge with probability extra_edge_prob; couplings uniform in (0, max_J].
SpinGraph random_connected(int n, HalfInt s, double extra_edge_prob, double max_J, std::mt19937_64& rng);

/// Chain of 2..max_sites spins drawn from twice_spins with prod(2s+1) <= max_dim,
/// couplings uniform in (0, max_J].
ChainSpec random_chain(int max_sites, const std::vector<int>& twice_spins, std::size_t max_dim, double max_J,
                       std::mt19937_64& rng);

}  // namespace foel::graphs
