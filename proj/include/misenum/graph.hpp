#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace misenum {

// Immutable simple undirected graph.  Vertices are dense ids 0..n-1,
// adjacency lists are sorted, and there are no self-loops or parallel
// edges.  All algorithms in the library assume this representation and
// never mutate a graph after construction, so sharing one Graph between
// threads is safe.
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list.  Duplicate edges (in either direction) are
  // collapsed; self-loops are rejected.  n must cover every endpoint.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return m_; }

  std::span<const int> neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }
  bool has_edge(int u, int v) const;
  int max_degree() const;

  // Sorted (u, v) pairs with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= num_vertices())
      throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  }

  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

enum class EdgeFormat { edge_list, dimacs };

// Raised by the parsers; the message always carries a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Parses the plain edge-list format: one "u v" pair per line, '#' comment
// lines and blank lines ignored, and an optional "n <count>" header that
// declares the vertex count (needed for isolated trailing vertices).
// With EdgeFormat::dimacs the input is DIMACS instead: "c" comments,
// one "p edge <n> <m>" line, and 1-based "e u v" lines.
Graph parse_edge_list(std::string_view text,
                      EdgeFormat format = EdgeFormat::edge_list);

// Closed ball of radius r around v: all vertices at hop distance <= r,
// sorted by id.
std::vector<int> ball(const Graph& g, int v, int r);

}  // namespace misenum
