#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlag {

struct HypergraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An edge whose length differs from the uniformity r.
struct EdgeArityError : HypergraphError {
  using HypergraphError::HypergraphError;
};

// A vertex index outside [1, n].
struct VertexOutOfRangeError : HypergraphError {
  using HypergraphError::HypergraphError;
};

// An edge listing the same vertex twice (edges are sets of size r).
struct RepeatedVertexError : HypergraphError {
  using HypergraphError::HypergraphError;
};

// Two edges identical as vertex sets.
struct DuplicateEdgeError : HypergraphError {
  using HypergraphError::HypergraphError;
};

// An r-uniform hypergraph on vertices 1..n, stored as a compact m-by-r
// incidence list (each row one edge, vertices sorted ascending).
//
// External formats and constructor input are 1-based; storage and the
// edge() accessor are 0-based. Immutable after construction, safe to
// share read-only across threads.
class Hypergraph {
 public:
  // Validates and canonicalizes: sorts each edge, rejects wrong arity,
  // out-of-range or repeated vertices, and duplicate edges.
  Hypergraph(int r, int n, const std::vector<std::vector<int>>& edges_1based);

  int order() const { return r_; }
  int vertex_count() const { return n_; }
  std::int64_t edge_count() const {
    return r_ > 0 ? static_cast<std::int64_t>(verts_.size()) / r_ : 0;
  }

  // Vertices of edge e, 0-based, sorted ascending.
  std::span<const std::int32_t> edge(std::int64_t e) const {
    return {verts_.data() + e * r_, static_cast<std::size_t>(r_)};
  }

  // Flat m*r vertex array (0-based), row-major by edge.
  const std::vector<std::int32_t>& incidence() const { return verts_; }

  // d_j = number of edges containing vertex j; sum over j equals m*r.
  std::vector<std::int64_t> degrees() const;

  // Re-runs full construction validation; throws if an invariant is broken.
  void revalidate() const;

  bool operator==(const Hypergraph& other) const = default;

  // Takes a 0-based flat edge array whose rows are already sorted, in-range
  // and pairwise distinct (generators produce these by construction).
  static Hypergraph trusted(int r, int n, std::vector<std::int32_t> flat_verts);

 private:
  struct TrustedTag {};
  Hypergraph(TrustedTag, int r, int n, std::vector<std::int32_t> flat_verts);

  static void validate(int r, int n, const std::vector<std::int32_t>& verts);

  int r_ = 0;
  int n_ = 0;
  std::vector<std::int32_t> verts_;  // m*r, 0-based, each row sorted
};

}  // namespace hyperlag
