#include "hyperlag/hg_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace hyperlag {

namespace {

bool is_blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r\n");
  return pos == std::string::npos || line[pos] == '#';
}

// Next data line, or false at end of stream.
bool next_data_line(std::istream& in, std::string& line, std::int64_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!is_blank_or_comment(line)) return true;
  }
  return false;
}

std::vector<std::int64_t> parse_ints(const std::string& line,
                                     std::int64_t lineno) {
  std::istringstream ss(line);
  std::vector<std::int64_t> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw HgParseError("line " + std::to_string(lineno) +
                         ": expected integer, got '" + tok + "'");
    }
    if (used != tok.size()) {
      throw HgParseError("line " + std::to_string(lineno) +
                         ": expected integer, got '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
  std::string line;
  std::int64_t lineno = 0;

  if (!next_data_line(in, line, lineno)) {
    throw HgParseError("missing header line 'r n m'");
  }
  const auto header = parse_ints(line, lineno);
  if (header.size() != 3) {
    throw HgParseError("line " + std::to_string(lineno) +
                       ": header must be exactly 'r n m'");
  }
  const std::int64_t r = header[0], n = header[1], m = header[2];
  if (r < 2 || r > 64) {
    throw HgParseError("header: uniformity r = " + std::to_string(r) +
                       " outside supported range [2, 64]");
  }
  if (n < 1 || n > std::numeric_limits<std::int32_t>::max()) {
    throw HgParseError("header: bad vertex count n = " + std::to_string(n));
  }
  if (m < 0) {
    throw HgParseError("header: bad edge count m = " + std::to_string(m));
  }

  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t e = 0; e < m; ++e) {
    if (!next_data_line(in, line, lineno)) {
      throw HgParseError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(e));
    }
    const auto vals = parse_ints(line, lineno);
    if (static_cast<std::int64_t>(vals.size()) != r) {
      throw HgParseError("line " + std::to_string(lineno) + ": expected " +
                         std::to_string(r) + " vertex indices, got " +
                         std::to_string(vals.size()));
    }
    std::vector<int> edge(vals.size());
    for (std::size_t k = 0; k < vals.size(); ++k) {
      if (vals[k] < 1 || vals[k] > n) {
        throw HgParseError("line " + std::to_string(lineno) + ": vertex " +
                           std::to_string(vals[k]) + " outside [1, " +
                           std::to_string(n) + "]");
      }
      edge[k] = static_cast<int>(vals[k]);
    }
    edges.push_back(std::move(edge));
  }
  if (next_data_line(in, line, lineno)) {
    throw HgParseError("line " + std::to_string(lineno) +
                       ": trailing data after " + std::to_string(m) + " edges");
  }

  try {
    return Hypergraph(static_cast<int>(r), static_cast<int>(n), edges);
  } catch (const HypergraphError& err) {
    throw HgParseError(std::string("invalid hypergraph: ") + err.what());
  }
}

Hypergraph read_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HgParseError("cannot open '" + path + "' for reading");
  return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& g,
              const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << g.order() << " " << g.vertex_count() << " " << g.edge_count() << "\n";
  const std::int64_t m = g.edge_count();
  for (std::int64_t e = 0; e < m; ++e) {
    const auto edge = g.edge(e);
    for (std::size_t k = 0; k < edge.size(); ++k) {
      if (k > 0) out << ' ';
      out << edge[k] + 1;
    }
    out << '\n';
  }
}

void write_hg_file(const std::string& path, const Hypergraph& g,
                   const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw HgParseError("cannot open '" + path + "' for writing");
  write_hg(out, g, comment);
  out.flush();
  if (!out) throw HgParseError("write to '" + path + "' failed");
}

}  // namespace hyperlag
