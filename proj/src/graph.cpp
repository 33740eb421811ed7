#include "misenum/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace misenum {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    m_ += static_cast<int>(nbrs.size());
  }
  m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

// Splits a line into whitespace-separated tokens.  Tolerates CRLF input.
std::vector<std::string_view> tokenize(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

int parse_int(std::string_view tok, int line_no) {
  int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line_no,
                     "expected integer, got '" + std::string(tok) + "'");
  if (value < 0) throw ParseError(line_no, "negative vertex id");
  return value;
}

Graph parse_plain(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int declared_n = 0;
  int max_seen = -1;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (end == text.size() && line.empty()) break;

    auto toks = tokenize(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks[0] == "n") {
      if (toks.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
      declared_n = std::max(declared_n, parse_int(toks[1], line_no));
      continue;
    }
    if (toks.size() != 2) throw ParseError(line_no, "expected 'u v'");
    int u = parse_int(toks[0], line_no);
    int v = parse_int(toks[1], line_no);
    if (u == v)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
    max_seen = std::max(max_seen, std::max(u, v));
  }
  return Graph(std::max(declared_n, max_seen + 1), edges);
}

Graph parse_dimacs(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int n = -1;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (end == text.size() && line.empty()) break;

    auto toks = tokenize(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (toks.size() != 4 || toks[1] != "edge")
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      n = parse_int(toks[2], line_no);
      continue;
    }
    if (toks[0] == "e") {
      if (n < 0) throw ParseError(line_no, "edge before problem line");
      if (toks.size() != 3) throw ParseError(line_no, "expected 'e u v'");
      int u = parse_int(toks[1], line_no);
      int v = parse_int(toks[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex id outside 1..n");
      if (u == v)
        throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(u - 1, v - 1);
      continue;
    }
    throw ParseError(line_no,
                     "unknown line type '" + std::string(toks[0]) + "'");
  }
  if (n < 0) throw ParseError(line_no, "missing problem line");
  return Graph(n, edges);
}

}  // namespace

Graph parse_edge_list(std::string_view text, EdgeFormat format) {
  return format == EdgeFormat::dimacs ? parse_dimacs(text) : parse_plain(text);
}

std::vector<int> ball(const Graph& g, int v, int r) {
  if (r < 0) throw std::invalid_argument("ball radius must be non-negative");
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(v)] = 0;
  q.push(v);
  std::vector<int> out{v};
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (dist[static_cast<std::size_t>(u)] == r) continue;
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
      out.push_back(w);
      q.push(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace misenum
