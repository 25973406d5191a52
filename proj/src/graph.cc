#include "updom/graph.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace updom {

namespace {

std::string parse_message(const std::string& detail, int line,
                          const std::string& source) {
  std::string prefix = source.empty() ? "" : source + ":";
  if (line > 0) {
    prefix += (source.empty() ? "line " : "") + std::to_string(line) + ":";
  }
  return prefix.empty() ? detail : prefix + " " + detail;
}

}  // namespace

ParseError::ParseError(const std::string& detail, int line,
                       const std::string& source)
    : std::runtime_error(parse_message(detail, line, source)),
      detail_(detail),
      line_(line) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::FromMask(std::uint64_t mask) {
  VertexSet s;
  s.members_.reserve(std::popcount(mask));
  while (mask != 0) {
    s.members_.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

Graph Graph::FromEdges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 1) throw UsageError("graph must have at least one vertex");
  Graph g;
  g.adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw UsageError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::int64_t degree_sum = 0;
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += static_cast<std::int64_t>(list.size());
  }
  g.m_ = degree_sum / 2;
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v < 0 || v >= n()) {
    throw UsageError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(n()));
  }
  return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::min_degree() const {
  int d = degree(0);
  for (Vertex v = 1; v < n(); ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = degree(0);
  for (Vertex v = 1; v < n(); ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_regular(int* d) const {
  const int lo = min_degree();
  if (d != nullptr) *d = lo;
  return lo == max_degree();
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  auto open = g.neighbors(v);
  std::vector<Vertex> members(open.begin(), open.end());
  members.push_back(v);
  return VertexSet(std::move(members));
}

void require_valid(const Graph& g, const VertexSet& s) {
  if (!s.empty() && (s.members().front() < 0 || s.members().back() >= g.n())) {
    throw UsageError("vertex set has ids outside [0, " + std::to_string(g.n()) + ")");
  }
}

namespace {

// |S intersect N[w]|, stopping early once it exceeds `limit`.
int count_in_closed(const Graph& g, const VertexSet& s, Vertex w, int limit) {
  int count = s.contains(w) ? 1 : 0;
  for (Vertex u : g.neighbors(w)) {
    if (count > limit) break;
    if (s.contains(u)) ++count;
  }
  return count;
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
  require_valid(g, s);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (count_in_closed(g, s, v, 0) == 0) return false;
  }
  return true;
}

VertexSet private_neighbors(const Graph& g, const VertexSet& s, Vertex v) {
  require_valid(g, s);
  if (!s.contains(v)) {
    throw UsageError("vertex " + std::to_string(v) + " is not in the set");
  }
  std::vector<Vertex> out;
  // v is in S and in N[w] for every w in N[v], so S intersect N[w] = {v}
  // exactly when the count is 1.
  if (count_in_closed(g, s, v, 1) == 1) out.push_back(v);
  for (Vertex w : g.neighbors(v)) {
    if (count_in_closed(g, s, w, 1) == 1) out.push_back(w);
  }
  return VertexSet(std::move(out));
}

bool is_minimal_dominating(const Graph& g, const VertexSet& s) {
  if (!is_dominating(g, s)) return false;
  for (Vertex v : s) {
    if (private_neighbors(g, s, v).empty()) return false;
  }
  return true;
}

Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto parse_pair = [&](long long& a, long long& b) {
    std::istringstream ls(line);
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest)) {
      throw ParseError("expected two integers, got '" + line + "'", line_no);
    }
  };

  if (!next_line()) throw ParseError("empty graph file: missing 'n m' header", 1);
  long long n = 0, m = 0;
  parse_pair(n, m);
  if (n < 1 || n > (1LL << 30)) throw ParseError("vertex count must be >= 1", line_no);
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError("edge count out of range", line_no);

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " +
                           std::to_string(i),
                       line_no + 1);
    }
    long long u = 0, v = 0;
    parse_pair(u, v);
    if (u < 0 || v >= n || u >= v) {
      throw ParseError("edge must satisfy 0 <= u < v < n", line_no);
    }
    // Unsorted input is tolerated; duplicates are not.
    if (!seen.emplace(static_cast<Vertex>(u), static_cast<Vertex>(v)).second) {
      throw ParseError("duplicate edge", line_no);
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line()) throw ParseError("trailing content after last edge", line_no);
  return Graph::FromEdges(static_cast<Vertex>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  try {
    return read_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), path);
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

std::vector<std::uint64_t> closed_neighborhood_masks(const Graph& g) {
  if (g.n() > 64) throw UsageError("bitmask kernels need n <= 64");
  std::vector<std::uint64_t> masks(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    std::uint64_t mask = std::uint64_t{1} << v;
    for (Vertex w : g.neighbors(v)) mask |= std::uint64_t{1} << w;
    masks[v] = mask;
  }
  return masks;
}

}  // namespace updom
