#include "hyperlag/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace hyperlag {

namespace {

std::string edge_to_string(std::span<const std::int32_t> e) {
  std::string s = "{";
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(e[k] + 1);
  }
  s += "}";
  return s;
}

}  // namespace

Hypergraph::Hypergraph(int r, int n,
                       const std::vector<std::vector<int>>& edges_1based) {
  if (r < 2) throw HypergraphError("uniformity r must be at least 2");
  if (n < 1) throw HypergraphError("vertex count n must be at least 1");
  r_ = r;
  n_ = n;
  verts_.reserve(edges_1based.size() * static_cast<std::size_t>(r));
  for (const auto& e : edges_1based) {
    if (static_cast<int>(e.size()) != r) {
      throw EdgeArityError("edge has " + std::to_string(e.size()) +
                           " vertices, expected " + std::to_string(r));
    }
    for (int v : e) {
      if (v < 1 || v > n) {
        throw VertexOutOfRangeError("vertex " + std::to_string(v) +
                                    " outside [1, " + std::to_string(n) + "]");
      }
      verts_.push_back(static_cast<std::int32_t>(v - 1));
    }
    std::sort(verts_.end() - r, verts_.end());
  }
  validate(r_, n_, verts_);
}

Hypergraph::Hypergraph(TrustedTag, int r, int n,
                       std::vector<std::int32_t> flat_verts)
    : r_(r), n_(n), verts_(std::move(flat_verts)) {}

Hypergraph Hypergraph::trusted(int r, int n,
                               std::vector<std::int32_t> flat_verts) {
  return Hypergraph(TrustedTag{}, r, n, std::move(flat_verts));
}

void Hypergraph::validate(int r, int n,
                          const std::vector<std::int32_t>& verts) {
  const std::int64_t m = static_cast<std::int64_t>(verts.size()) / r;
  for (std::int64_t e = 0; e < m; ++e) {
    const std::int32_t* row = verts.data() + e * r;
    for (int k = 0; k < r; ++k) {
      if (row[k] < 0 || row[k] >= n) {
        throw VertexOutOfRangeError(
            "vertex " + std::to_string(row[k] + 1) + " outside [1, " +
            std::to_string(n) + "]");
      }
      if (k > 0 && row[k] == row[k - 1]) {
        throw RepeatedVertexError(
            "edge " + edge_to_string({row, static_cast<std::size_t>(r)}) +
            " repeats vertex " + std::to_string(row[k] + 1));
      }
      if (k > 0 && row[k] < row[k - 1]) {
        throw HypergraphError("edge vertices not sorted ascending");
      }
    }
  }

  // Duplicate detection via a lexicographic sort of edge indices.
  std::vector<std::int64_t> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), std::int64_t{0});
  auto row_less = [&](std::int64_t a, std::int64_t b) {
    return std::lexicographical_compare(
        verts.data() + a * r, verts.data() + (a + 1) * r,
        verts.data() + b * r, verts.data() + (b + 1) * r);
  };
  std::sort(idx.begin(), idx.end(), row_less);
  for (std::int64_t i = 1; i < m; ++i) {
    const std::int32_t* a = verts.data() + idx[i - 1] * r;
    const std::int32_t* b = verts.data() + idx[i] * r;
    if (std::equal(a, a + r, b)) {
      throw DuplicateEdgeError(
          "duplicate edge " +
          edge_to_string({a, static_cast<std::size_t>(r)}));
    }
  }
}

void Hypergraph::revalidate() const {
  if (r_ < 2) throw HypergraphError("uniformity r must be at least 2");
  if (n_ < 1) throw HypergraphError("vertex count n must be at least 1");
  if (verts_.size() % static_cast<std::size_t>(r_) != 0) {
    throw HypergraphError("incidence array size not a multiple of r");
  }
  validate(r_, n_, verts_);
}

std::vector<std::int64_t> Hypergraph::degrees() const {
  std::vector<std::int64_t> d(static_cast<std::size_t>(n_), 0);
  for (std::int32_t v : verts_) ++d[static_cast<std::size_t>(v)];
  return d;
}

}  // namespace hyperlag
