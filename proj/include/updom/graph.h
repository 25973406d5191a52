#ifndef UPDOM_GRAPH_H_
#define UPDOM_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace updom {

using Vertex = std::int32_t;

// Thrown when a caller violates an operation's precondition (bad vertex id,
// bad family parameters, non-minimal set handed to an encoder, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when textual input (graph files, spec strings, configs) is malformed.
// `line()` is 1-based, or 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& detail, int line = 0,
             const std::string& source = "");
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  int line_;
};

// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts and deduplicates `members`.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  // Members of the bitmask `mask` (bit v set <=> v in the set).
  static VertexSet FromMask(std::uint64_t mask);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Lexicographic on the sorted member lists.
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

// Immutable simple undirected graph in adjacency-list form. Vertex ids are
// dense in [0, n). Neighbor lists are sorted and never contain the vertex
// itself.
class Graph {
 public:
  // Builds from an edge list. Duplicate edges (in either orientation) are
  // merged; self-loops and out-of-range endpoints throw UsageError.
  static Graph FromEdges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);

  Vertex n() const { return static_cast<Vertex>(adjacency_.size()); }
  std::int64_t m() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;
  int min_degree() const;
  int max_degree() const;
  // True iff every vertex has degree d; sets *d to the common degree.
  bool is_regular(int* d = nullptr) const;

  // Edges (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  std::vector<std::vector<Vertex>> adjacency_;
  std::int64_t m_ = 0;
};

// N[v] = N(v) + {v}.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

// Throws UsageError unless every member of s is a vertex of g.
void require_valid(const Graph& g, const VertexSet& s);

bool is_dominating(const Graph& g, const VertexSet& s);

// { w in N[v] : S intersect N[w] = {v} }. Requires v in s.
VertexSet private_neighbors(const Graph& g, const VertexSet& s, Vertex v);

// Dominating, and every member has at least one private neighbor.
bool is_minimal_dominating(const Graph& g, const VertexSet& s);

// Graph text format: "n m" header then m lines "u v" with u < v.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string to_text(const Graph& g);

// Bitmask helpers for graphs small enough to index subsets by uint64_t.
// closed_masks[v] has bit w set iff w in N[v].
std::vector<std::uint64_t> closed_neighborhood_masks(const Graph& g);

}  // namespace updom

#endif  // UPDOM_GRAPH_H_
