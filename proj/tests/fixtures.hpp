#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hyperlag/generators.hpp"
#include "hyperlag/hypergraph.hpp"

namespace fixtures {

// Three disjoint complete 3-graphs on four vertices each, bridged by one
// extra edge across them. Lagrangian 1/16, attained by weighting any one
// of the cliques uniformly.
inline hyperlag::Hypergraph toy_graph() {
  return hyperlag::Hypergraph(3, 12,
                              {{1, 2, 3},
                               {1, 2, 4},
                               {1, 3, 4},
                               {2, 3, 4},
                               {5, 6, 7},
                               {5, 6, 8},
                               {5, 7, 8},
                               {6, 7, 8},
                               {9, 10, 11},
                               {9, 10, 12},
                               {9, 11, 12},
                               {10, 11, 12},
                               {4, 8, 12}});
}

// The three maximizers of the toy graph: 1/4 on one clique, 0 elsewhere.
inline std::vector<std::vector<double>> toy_clique_indicators() {
  std::vector<std::vector<double>> out(3, std::vector<double>(12, 0.0));
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t k = 0; k < 4; ++k) out[b][4 * b + k] = 0.25;
  }
  return out;
}

// Uniformly chosen small instance: r in {2,3,4}, n up to 8, any edge count.
inline hyperlag::Hypergraph random_small_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rdist(2, 4);
  const int r = rdist(rng);
  std::uniform_int_distribution<int> ndist(r, 8);
  const int n = ndist(rng);
  const std::int64_t total = hyperlag::binomial(n, r).value();
  std::uniform_int_distribution<std::int64_t> mdist(0, total);
  return hyperlag::gen_random(n, r, mdist(rng), rng());
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n,
                                         double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (double& v : out) v = dist(rng);
  return out;
}

}  // namespace fixtures
