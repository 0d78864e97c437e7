#include "foel/graph_families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace foel::graphs {

namespace {

std::vector<Site> uniform_sites(int n, HalfInt s) {
  std::vector<Site> sites;
  for (int i = 0; i < n; ++i) sites.push_back({i, s});
  return sites;
}

using Adjacency = std::vector<std::vector<int>>;

// AHU encoding of a rooted tree.
std::string rooted_code(const Adjacency& adj, int node, int parent) {
  std::vector<std::string> children;
  for (int c : adj[static_cast<std::size_t>(node)])
    if (c != parent) children.push_back(rooted_code(adj, c, node));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

// Canonical form of a free tree: minimum rooted code over its centers.
std::string tree_code(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return "()";
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<int> leaves;
  for (int i = 0; i < n; ++i) {
    degree[static_cast<std::size_t>(i)] = static_cast<int>(adj[static_cast<std::size_t>(i)].size());
    if (degree[static_cast<std::size_t>(i)] <= 1) leaves.push_back(i);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(leaves.size());
    std::vector<int> next;
    for (int leaf : leaves)
      for (int nb : adj[static_cast<std::size_t>(leaf)])
        if (--degree[static_cast<std::size_t>(nb)] == 1) next.push_back(nb);
    leaves = std::move(next);
  }
  std::string best;
  for (int c : leaves) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

SpinGraph path(int n, HalfInt s, const std::vector<double>& couplings) {
  if (!couplings.empty() && couplings.size() + 1 != static_cast<std::size_t>(n))
    throw InputError("path needs n-1 couplings");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1, couplings.empty() ? 1.0 : couplings[static_cast<std::size_t>(i)]});
  return SpinGraph(uniform_sites(n, s), std::move(edges));
}

SpinGraph cycle(int n, HalfInt s, double J) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, J});
  return SpinGraph(uniform_sites(n, s), std::move(edges));
}

SpinGraph complete(int n, HalfInt s, double J) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, J});
  return SpinGraph(uniform_sites(n, s), std::move(edges));
}

std::vector<SpinGraph> all_trees(int n, HalfInt s) {
  if (n < 1) throw InputError("tree needs at least one vertex");
  // Grow every class of size m-1 by one leaf in all positions and deduplicate.
  std::vector<Adjacency> level{Adjacency(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<std::string> seen;
    std::vector<Adjacency> next;
    for (const Adjacency& t : level) {
      for (int attach = 0; attach < m - 1; ++attach) {
        Adjacency grown = t;
        grown.emplace_back();
        grown[static_cast<std::size_t>(attach)].push_back(m - 1);
        grown.back().push_back(attach);
        if (seen.insert(tree_code(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<SpinGraph> out;
  for (const Adjacency& t : level) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j : t[static_cast<std::size_t>(i)])
        if (i < j) edges.push_back({i, j, 1.0});
    out.emplace_back(uniform_sites(n, s), std::move(edges));
  }
  return out;
}

SpinGraph random_connected(int n, HalfInt s, double extra_edge_prob, double max_J, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto coupling = [&] { return max_J * (1.0 - unit(rng)); };  // (0, max_J]
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> present;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int j = pick(rng);
    edges.push_back({j, i, coupling()});
    present.insert({j, i});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!present.count({i, j}) && unit(rng) < extra_edge_prob) edges.push_back({i, j, coupling()});
  return SpinGraph(uniform_sites(n, s), std::move(edges));
}

ChainSpec random_chain(int max_sites, const std::vector<int>& twice_spins, std::size_t max_dim, double max_J,
                       std::mt19937_64& rng) {
  if (max_sites < 2 || twice_spins.empty()) throw InputError("random chain needs max_sites >= 2 and a spin set");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> length(2, max_sites);
  std::uniform_int_distribution<std::size_t> which(0, twice_spins.size() - 1);
  // Rejection sampling on the dimension limit.
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int L = length(rng);
    ChainSpec c;
    std::size_t dim = 1;
    for (int x = 0; x < L; ++x) {
      const int t = twice_spins[which(rng)];
      c.spins.push_back(HalfInt::from_twice(t));
      dim *= static_cast<std::size_t>(t + 1);
    }
    for (int x = 0; x + 1 < L; ++x) c.couplings.push_back(max_J * (1.0 - unit(rng)));
    if (dim <= max_dim) return c;
  }
  throw InputError("no random chain fits the dimension limit");
}

}  // namespace foel::graphs
