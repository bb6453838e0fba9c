#pragma once

#include <iosfwd>
#include <string>

#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

struct HgParseError : HypergraphError {
  using HypergraphError::HypergraphError;
};

// .hg text format:
//   - lines whose first non-blank character is '#' are comments
//   - blank lines are ignored
//   - first data line: "r n m"
//   - next m data lines: r whitespace-separated 1-based vertex indices
// The reader sorts and fully validates; the writer emits edges in stored
// order, sorted within each edge.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);

void write_hg(std::ostream& out, const Hypergraph& g,
              const std::string& comment = "");
void write_hg_file(const std::string& path, const Hypergraph& g,
                   const std::string& comment = "");

}  // namespace hyperlag
