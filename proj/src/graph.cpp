#include "bicaut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <sstream>

namespace bicaut {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw InvalidVertexError("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphFormatError(GraphFormatError::Kind::kOutOfRange, i + 1,
                             "edge endpoint out of range in edge " +
                                 std::to_string(i + 1));
    }
    if (u == v) {
      throw GraphFormatError(GraphFormatError::Kind::kSelfLoop, i + 1,
                             "self-loop in edge " + std::to_string(i + 1));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphFormatError(GraphFormatError::Kind::kDuplicateEdge, 0,
                           "duplicate edge " + std::to_string(dup->first) +
                               " " + std::to_string(dup->second));
  }
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

// ---------------------------------------------------------------------------
// Edge-list format

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  while (!lines.empty() &&
         lines.back().find_first_not_of(" \t") == std::string_view::npos) {
    lines.pop_back();
  }
  return lines;
}

// Reads exactly two non-negative integers separated by blanks.
bool read_pair(std::string_view line, long long& a, long long& b) {
  std::vector<long long> values;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(),
                                     value);
    if (ec != std::errc() || ptr == line.data() + i) return false;
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t') return false;
    values.push_back(value);
  }
  if (values.size() != 2) return false;
  a = values[0];
  b = values[1];
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  using Kind = GraphFormatError::Kind;
  auto lines = split_lines(text);
  long long n = 0, m = 0;
  if (lines.empty() || !read_pair(lines[0], n, m) || n < 0 || m < 0 ||
      n > std::numeric_limits<int>::max()) {
    throw GraphFormatError(Kind::kMalformedHeader, 1,
                           "malformed header at line 1, expected \"n m\"");
  }
  if (lines.size() - 1 != static_cast<std::size_t>(m)) {
    throw GraphFormatError(
        Kind::kEdgeCount, lines.size(),
        "header announces " + std::to_string(m) + " edges but " +
            std::to_string(lines.size() - 1) + " edge lines follow");
  }
  Graph g(static_cast<int>(n));
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, std::size_t>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    long long u = 0, v = 0;
    if (!read_pair(lines[i], u, v)) {
      throw GraphFormatError(Kind::kMalformedLine, line_no,
                             "malformed edge at line " +
                                 std::to_string(line_no));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphFormatError(Kind::kOutOfRange, line_no,
                             "endpoint out of range at line " +
                                 std::to_string(line_no));
    }
    if (u == v) {
      throw GraphFormatError(Kind::kSelfLoop, line_no,
                             "self-loop at line " + std::to_string(line_no));
    }
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    seen.emplace_back(e, line_no);
    edges.push_back(e);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      throw GraphFormatError(Kind::kDuplicateEdge, seen[i].second,
                             "duplicate edge at line " +
                                 std::to_string(seen[i].second));
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  using Kind = GraphFormatError::Kind;
  std::size_t offset = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    offset = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  std::size_t pos = offset;
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) {
      throw GraphFormatError(Kind::kMalformedHeader, i + 1,
                             "truncated graph6 data at byte " +
                                 std::to_string(i + 1));
    }
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw GraphFormatError(Kind::kBadByte, i + 1,
                             "invalid graph6 byte at byte " +
                                 std::to_string(i + 1));
    }
    return c - 63;
  };
  long long n = byte_at(pos);
  ++pos;
  if (n == 63) {
    if (pos < text.size() && text[pos] == '~') {
      throw GraphFormatError(Kind::kMalformedHeader, pos + 1,
                             "graph6 graphs above 258047 vertices unsupported");
    }
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
  }
  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need) {
    throw GraphFormatError(Kind::kMalformedHeader, pos + 1,
                           "graph6 body has " + std::to_string(text.size() - pos) +
                               " bytes, expected " + std::to_string(need));
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      int bit = 5 - static_cast<int>(k % 6);
      if ((byte_at(byte) >> bit) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < static_cast<long long>(need) * 6; ++k) {
    std::size_t byte = pos + static_cast<std::size_t>(k / 6);
    if ((byte_at(byte) >> (5 - k % 6)) & 1) {
      throw GraphFormatError(Kind::kBadByte, byte + 1,
                             "nonzero graph6 padding at byte " +
                                 std::to_string(byte + 1));
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  for (auto line : split_lines(text)) {
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) {
      out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  }
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? parse_edge_list(text)
                                          : parse_graph6(text);
}

std::string print_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? to_edge_list(g)
                                          : to_graph6(g) + "\n";
}

// ---------------------------------------------------------------------------
// Structure

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex y : g.neighbors(members[i])) {
        if (comp[y] < 0) {
          comp[y] = comp[s];
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && connected_components(g).size() == 1;
}

int cyclomatic_number(const Graph& g) {
  if (!is_connected(g)) throw NotConnectedError();
  return static_cast<int>(g.size()) - g.order() + 1;
}

std::vector<bool> two_core(const Graph& g) {
  std::vector<int> deg(g.order());
  std::vector<bool> alive(g.order(), true);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    for (Vertex y : g.neighbors(v)) {
      if (alive[y] && --deg[y] <= 1) stack.push_back(y);
    }
  }
  return alive;
}

std::string FamilyTag::to_string() const {
  switch (family) {
    case Family::kTree:
      return "tree";
    case Family::kUnicyclic:
      return "unicyclic";
    case Family::kBicyclic:
      return "bicyclic-" + std::to_string(bicyclic_type);
    case Family::kOther:
      return "other-c" + std::to_string(cyclomatic);
  }
  return "?";
}

FamilyTag classify_family(const Graph& g) {
  const int c = cyclomatic_number(g);
  FamilyTag tag;
  tag.cyclomatic = c;
  if (c == 0) return tag;
  if (c == 1) {
    tag.family = Family::kUnicyclic;
    return tag;
  }
  if (c > 2) {
    tag.family = Family::kOther;
    return tag;
  }
  tag.family = Family::kBicyclic;
  auto core = two_core(g);
  auto core_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex y : g.neighbors(v)) d += core[y] ? 1 : 0;
    return d;
  };
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!core[v]) continue;
    int d = core_degree(v);
    if (d == 4) {
      tag.bicyclic_type = 3;
      return tag;
    }
    if (d == 3) branch.push_back(v);
  }
  // Two degree-3 core vertices: a walk from one of them either returns to
  // itself (a cycle hanging on a bridge) or always reaches the other.
  const Vertex u = branch.at(0);
  for (Vertex start : g.neighbors(u)) {
    if (!core[start]) continue;
    Vertex prev = u, cur = start;
    while (core_degree(cur) == 2) {
      for (Vertex y : g.neighbors(cur)) {
        if (core[y] && y != prev) {
          prev = cur;
          cur = y;
          break;
        }
      }
    }
    if (cur == u) {
      tag.bicyclic_type = 2;
      return tag;
    }
  }
  tag.bicyclic_type = 1;
  return tag;
}

// ---------------------------------------------------------------------------
// Splice, link, center

Composite disjoint_union(const Graph& g1, const Graph& g2) {
  Composite out;
  const int n1 = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  out.first_map.resize(n1);
  for (int i = 0; i < n1; ++i) out.first_map[i] = i;
  out.second_map.resize(g2.order());
  for (int i = 0; i < g2.order(); ++i) out.second_map[i] = n1 + i;
  out.graph = Graph(n1 + g2.order(), edges);
  return out;
}

Composite splice(const Graph& g1, Vertex v1, const Graph& g2, Vertex w1) {
  if (!g1.contains(v1) || !g2.contains(w1)) {
    throw InvalidVertexError("splice vertex out of range");
  }
  Composite out;
  const int n1 = g1.order();
  out.first_map.resize(n1);
  for (int i = 0; i < n1; ++i) out.first_map[i] = i;
  out.second_map.resize(g2.order());
  int next = n1;
  for (int i = 0; i < g2.order(); ++i) {
    out.second_map[i] = (i == w1) ? v1 : next++;
  }
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) {
    edges.emplace_back(out.second_map[u], out.second_map[v]);
  }
  out.graph = Graph(next, edges);
  return out;
}

Composite link(const Graph& g1, Vertex v, const Graph& g2, Vertex w) {
  if (!g1.contains(v) || !g2.contains(w)) {
    throw InvalidVertexError("link vertex out of range");
  }
  Composite out = disjoint_union(g1, g2);
  std::vector<Edge> edges = out.graph.edges();
  edges.emplace_back(v, out.second_map[w]);
  out.graph = Graph(out.graph.order(), edges);
  return out;
}

std::vector<int> eccentricities(const Graph& g) {
  if (!is_connected(g)) throw NotConnectedError();
  std::vector<int> ecc(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto d = bfs_distances(g, v);
    ecc[v] = *std::max_element(d.begin(), d.end());
  }
  return ecc;
}

std::vector<Vertex> center(const Graph& g) {
  auto ecc = eccentricities(g);
  const int best = *std::min_element(ecc.begin(), ecc.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (ecc[v] == best) out.push_back(v);
  }
  return out;
}

int diameter(const Graph& g) {
  auto ecc = eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

namespace graphs {

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, edges);
}

}  // namespace graphs

}  // namespace bicaut
