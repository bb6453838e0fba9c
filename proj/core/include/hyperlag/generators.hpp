#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

// C(n, k), or nullopt if the value does not fit in int64.
std::optional<std::int64_t> binomial(int n, int k);

// Complete r-graph K_n^r: all C(n, r) r-subsets of 1..n in lexicographic
// order. Requires r <= n.
Hypergraph gen_complete(int n, int r);

// 3-graph of the level-l subdivided icosahedron: n = 10*4^l + 2 vertices,
// m = 20*4^l triangular faces. Construction is purely combinatorial; each
// subdivision step creates one vertex per undirected mesh edge (deduplicated
// by the endpoint pair) and splits every face into four.
Hypergraph gen_icosphere(int level);

// 3-graph on t+2 disjoint vertex triples ("blocks"): the blocks themselves
// plus every triple meeting each block in at most one vertex.
// n = 3(t+2), m = (t+2) + 27*C(t+2, 3).
Hypergraph gen_frankl_star(int t);

// m distinct edges sampled uniformly without replacement from the r-subsets
// of 1..n. Deterministic for a fixed seed. Requires m <= C(n, r).
Hypergraph gen_random(int n, int r, std::int64_t m, std::uint64_t seed);

namespace detail {
// Uniform draw from [0, bound) via rejection; fixed algorithm on top of
// the mt19937_64 stream so sampling is reproducible everywhere.
std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t bound);
}  // namespace detail

}  // namespace hyperlag
