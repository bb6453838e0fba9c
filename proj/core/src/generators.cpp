#include "hyperlag/generators.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <unordered_map>

namespace hyperlag {

std::optional<std::int64_t> binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  using u128 = unsigned __int128;
  u128 c = 1;
  const u128 cap = static_cast<u128>(std::numeric_limits<std::int64_t>::max());
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<u128>(n - k + i) / static_cast<u128>(i);
    if (c > cap) return std::nullopt;
  }
  return static_cast<std::int64_t>(c);
}

Hypergraph gen_complete(int n, int r) {
  if (r < 2) throw HypergraphError("uniformity r must be at least 2");
  if (r > n) {
    throw HypergraphError("complete graph needs r <= n, got r=" +
                          std::to_string(r) + ", n=" + std::to_string(n));
  }
  const auto m = binomial(n, r);
  if (!m) throw HypergraphError("complete graph too large: C(n, r) overflows");

  std::vector<std::int32_t> flat;
  flat.reserve(static_cast<std::size_t>(*m) * static_cast<std::size_t>(r));
  // Odometer enumeration of r-subsets in lexicographic order.
  std::vector<std::int32_t> cur(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) cur[static_cast<std::size_t>(k)] = k;
  for (;;) {
    flat.insert(flat.end(), cur.begin(), cur.end());
    int k = r - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == n - r + k) --k;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < r; ++j) {
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return Hypergraph::trusted(r, n, std::move(flat));
}

namespace {

// The icosahedron as a face list on vertices 0..11. Any valid labeling
// yields an isomorphic hypergraph.
constexpr std::array<std::array<std::int32_t, 3>, 20> kIcosahedronFaces = {{
    {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
    {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
    {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
    {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
}};

}  // namespace

Hypergraph gen_icosphere(int level) {
  if (level < 0) throw HypergraphError("icosphere level must be nonnegative");

  std::vector<std::array<std::int32_t, 3>> faces(kIcosahedronFaces.begin(),
                                                 kIcosahedronFaces.end());
  std::int32_t n = 12;

  for (int l = 0; l < level; ++l) {
    std::unordered_map<std::uint64_t, std::int32_t> midpoint;
    midpoint.reserve(faces.size() * 2);
    auto mid = [&](std::int32_t a, std::int32_t b) {
      const std::uint64_t key =
          (static_cast<std::uint64_t>(std::min(a, b)) << 32) |
          static_cast<std::uint64_t>(std::max(a, b));
      auto [it, inserted] = midpoint.try_emplace(key, n);
      if (inserted) ++n;
      return it->second;
    };
    std::vector<std::array<std::int32_t, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& [a, b, c] : faces) {
      const std::int32_t ab = mid(a, b);
      const std::int32_t bc = mid(b, c);
      const std::int32_t ca = mid(c, a);
      next.push_back({a, ab, ca});
      next.push_back({b, bc, ab});
      next.push_back({c, ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  std::vector<std::int32_t> flat;
  flat.reserve(faces.size() * 3);
  for (auto f : faces) {
    std::sort(f.begin(), f.end());
    flat.insert(flat.end(), f.begin(), f.end());
  }
  return Hypergraph::trusted(3, n, std::move(flat));
}

Hypergraph gen_frankl_star(int t) {
  if (t < 1) throw HypergraphError("frankl-star parameter t must be >= 1");
  const int blocks = t + 2;
  const int n = 3 * blocks;
  auto block_of = [](std::int32_t v) { return v / 3; };  // 0-based vertex

  std::vector<std::int32_t> flat;
  const std::int64_t m =
      blocks + 27 * binomial(blocks, 3).value();
  flat.reserve(static_cast<std::size_t>(m) * 3);

  for (int k = 0; k < blocks; ++k) {
    flat.push_back(3 * k);
    flat.push_back(3 * k + 1);
    flat.push_back(3 * k + 2);
  }
  // Transversal triples: one vertex from each of three distinct blocks,
  // i.e. triples meeting every block in at most one vertex.
  for (std::int32_t a = 0; a < n; ++a) {
    for (std::int32_t b = a + 1; b < n; ++b) {
      if (block_of(b) == block_of(a)) continue;
      for (std::int32_t c = b + 1; c < n; ++c) {
        if (block_of(c) == block_of(a) || block_of(c) == block_of(b)) continue;
        flat.push_back(a);
        flat.push_back(b);
        flat.push_back(c);
      }
    }
  }
  return Hypergraph::trusted(3, n, std::move(flat));
}

namespace detail {

std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

}  // namespace detail

namespace {

// Floyd's algorithm: uniform r-subset of {0..n-1}, then sorted.
std::vector<std::int32_t> sample_subset(std::mt19937_64& rng, int n, int r) {
  std::vector<std::int32_t> chosen;
  chosen.reserve(static_cast<std::size_t>(r));
  for (int j = n - r; j < n; ++j) {
    const auto v = static_cast<std::int32_t>(
        detail::bounded_uint(rng, static_cast<std::uint64_t>(j) + 1));
    if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) {
      chosen.push_back(static_cast<std::int32_t>(j));
    } else {
      chosen.push_back(v);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

Hypergraph gen_random(int n, int r, std::int64_t m, std::uint64_t seed) {
  if (r < 2) throw HypergraphError("uniformity r must be at least 2");
  if (n < 1) throw HypergraphError("vertex count n must be at least 1");
  if (m < 0) throw HypergraphError("edge count must be nonnegative");
  const auto total = binomial(n, r);
  if (total && m > *total) {
    throw HypergraphError("requested " + std::to_string(m) +
                          " edges but C(n, r) = " + std::to_string(*total));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::int32_t> flat;
  flat.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(r));

  // Dense requests: enumerate everything and take a partial shuffle.
  // Sparse requests: rejection-sample into an ordered set.
  if (total && (*total - m <= m || *total <= (1 << 20))) {
    const Hypergraph all = gen_complete(n, r);
    std::vector<std::int64_t> idx(static_cast<std::size_t>(*total));
    for (std::int64_t i = 0; i < *total; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (std::int64_t i = 0; i < m; ++i) {
      const std::int64_t j =
          i + static_cast<std::int64_t>(detail::bounded_uint(
                  rng, static_cast<std::uint64_t>(*total - i)));
      std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
      const auto e = all.edge(idx[static_cast<std::size_t>(i)]);
      flat.insert(flat.end(), e.begin(), e.end());
    }
  } else {
    std::set<std::vector<std::int32_t>> seen;
    while (static_cast<std::int64_t>(seen.size()) < m) {
      auto e = sample_subset(rng, n, r);
      if (seen.insert(e).second) {
        flat.insert(flat.end(), e.begin(), e.end());
      }
    }
  }
  return Hypergraph::trusted(r, n, std::move(flat));
}

}  // namespace hyperlag
