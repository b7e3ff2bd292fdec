#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with row-bitmask adjacency.
///
/// Immutable once built. Edges are kept sorted, so the index of an edge in
/// edges() is a stable handle used by colorings.
class Graph {
 public:
  static constexpr int kMaxOrder = 32;
  using Row = std::uint32_t;

  Graph() = default;
  explicit Graph(int n);

  /// Deduplicates pairs; throws InputError on loops or out-of-range vertices.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);
  static Graph from_edges(int n, std::span<const Edge> edges);
  /// Rows must be symmetric with an empty diagonal.
  static Graph from_rows(int n, std::span<const Row> rows);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Row>& rows() const { return rows_; }

  Row neighbors(Vertex v) const { return rows_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1u; }
  int degree(Vertex v) const;
  /// Index into edges(), or -1 if u and v are not adjacent.
  int edge_index(Vertex u, Vertex v) const;

  Graph without_edge(int edge_idx) const;
  Graph without_vertex(Vertex v) const;
  /// Induced subgraph; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;
  /// Vertex v of *this becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void rebuild_edges();

  int n_ = 0;
  std::vector<Row> rows_;
  std::vector<Edge> edges_;
};

// ---- structural queries ----

bool is_connected(const Graph& g);
/// BFS hop counts from s; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex s);
/// Throws DisconnectedError for disconnected graphs; 0 for n <= 1.
int diameter(const Graph& g);
int max_degree(const Graph& g);
/// Cut edges in sorted order.
std::vector<Edge> bridges(const Graph& g);
/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

enum class ComponentKind {
  trivial,             // single vertex
  complete,            // complete graph of order >= 3
  two_edge_connected,  // bridgeless, diameter >= 2
  other,               // anything else (e.g. a lone K2)
};

const char* to_string(ComponentKind kind);

struct BridgeComponent {
  std::vector<Vertex> vertices;
  int order = 0;
  int diameter = 0;
  int edges = 0;
  bool bridgeless = true;
  ComponentKind kind = ComponentKind::trivial;
};

/// Components of g after deleting every bridge.
struct BridgeDecomposition {
  std::vector<Edge> bridges;
  std::vector<BridgeComponent> components;
  /// component index of each vertex
  std::vector<int> component_of;

  int trivial_count() const;
  int nontrivial_count() const;
};

/// Throws DisconnectedError for disconnected input.
BridgeDecomposition bridge_decomposition(const Graph& g);

}  // namespace rainbow
