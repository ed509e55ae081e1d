#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicaut/error.hpp"

namespace bicaut {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex set [0, n).
///
/// Edges are stored normalized (u < v) and sorted; adjacency lists are
/// sorted. Construction validates the no-loop / no-duplicate / in-range
/// invariants and throws GraphFormatError on violation.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

enum class GraphFormat { kEdgeList, kGraph6 };

Graph parse_graph(std::string_view text, GraphFormat format);
Graph parse_edge_list(std::string_view text);
// Parses a single graph6 line (an optional ">>graph6<<" header is skipped).
Graph parse_graph6(std::string_view text);
// Parses every non-empty line of a graph6 file.
std::vector<Graph> parse_graph6_lines(std::string_view text);

std::string print_graph(const Graph& g, GraphFormat format);
std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// c = m - n + 1; throws NotConnectedError on disconnected input.
int cyclomatic_number(const Graph& g);

enum class Family { kTree, kUnicyclic, kBicyclic, kOther };

struct FamilyTag {
  Family family = Family::kTree;
  int bicyclic_type = 0;  // 1 theta, 2 dumbbell, 3 shared vertex
  int cyclomatic = 0;

  std::string to_string() const;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

FamilyTag classify_family(const Graph& g);

// Vertices surviving iterated removal of degree <= 1 vertices.
std::vector<bool> two_core(const Graph& g);

/// Result of a splice or link: the combined graph plus where each input
/// vertex ended up.
struct Composite {
  Graph graph;
  std::vector<Vertex> first_map;
  std::vector<Vertex> second_map;
};

// Identifies v1 of g1 with w1 of g2. g1 keeps its indices.
Composite splice(const Graph& g1, Vertex v1, const Graph& g2, Vertex w1);
// Disjoint union plus the edge (v, w). g1 keeps its indices.
Composite link(const Graph& g1, Vertex v, const Graph& g2, Vertex w);
// Disjoint union; g1 keeps its indices, g2 is shifted by g1.order().
Composite disjoint_union(const Graph& g1, const Graph& g2);

std::vector<int> eccentricities(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, Vertex source);
std::vector<Vertex> center(const Graph& g);
int diameter(const Graph& g);

// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

// Induced subgraph on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

namespace graphs {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
}  // namespace graphs

}  // namespace bicaut
