#include "rainbow/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxOrder) {
    throw InputError("graph order " + std::to_string(n) + " outside 0.." +
                     std::to_string(Graph::kMaxOrder));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  rows_.assign(n, 0);
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
  Graph g(n);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InputError("vertex index out of range in edge (" + std::to_string(a) +
                       "," + std::to_string(b) + ")");
    }
    if (a == b) throw InputError("loop at vertex " + std::to_string(a));
    g.rows_[a] |= Row{1} << b;
    g.rows_[b] |= Row{1} << a;
  }
  g.rebuild_edges();
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return from_edge_list(n, pairs);
}

Graph Graph::from_rows(int n, std::span<const Row> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) != n) throw InputError("row count does not match order");
  for (int v = 0; v < n; ++v) {
    if ((rows[v] >> v) & 1u) throw InputError("loop at vertex " + std::to_string(v));
    if (n < 32 && (rows[v] >> n) != 0) throw InputError("row references vertex beyond order");
    g.rows_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) throw InputError("adjacency rows not symmetric");
  g.rebuild_edges();
  return g;
}

void Graph::rebuild_edges() {
  edges_.clear();
  for (int u = 0; u < n_; ++u) {
    Row higher = rows_[u] & ~((Row{2} << u) - 1);
    for (; higher; higher &= higher - 1) edges_.push_back({u, std::countr_zero(higher)});
  }
}

int Graph::degree(Vertex v) const { return std::popcount(rows_[v]); }

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || !adjacent(u, v)) return -1;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::without_edge(int edge_idx) const {
  Graph g = *this;
  const Edge e = edges_.at(edge_idx);
  g.rows_[e.u] &= ~(Row{1} << e.v);
  g.rows_[e.v] &= ~(Row{1} << e.u);
  g.edges_.erase(g.edges_.begin() + edge_idx);
  return g;
}

Graph Graph::without_vertex(Vertex v) const {
  std::vector<Vertex> keep;
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  const int k = static_cast<int>(vertices.size());
  Graph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (adjacent(vertices[i], vertices[j])) {
        g.rows_[i] |= Row{1} << j;
        g.rows_[j] |= Row{1} << i;
      }
  g.rebuild_edges();
  return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  Graph g(n_);
  for (const Edge& e : edges_) {
    g.rows_[perm[e.u]] |= Row{1} << perm[e.v];
    g.rows_[perm[e.v]] |= Row{1} << perm[e.u];
  }
  g.rebuild_edges();
  return g;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  Graph::Row seen = 1, frontier = 1;
  while (frontier) {
    Graph::Row next = 0;
    for (Graph::Row f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

std::vector<int> distances_from(const Graph& g, Vertex s) {
  std::vector<int> dist(g.order(), -1);
  dist[s] = 0;
  Graph::Row seen = Graph::Row{1} << s, frontier = seen;
  for (int depth = 1; frontier; ++depth) {
    Graph::Row next = 0;
    for (Graph::Row f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= frontier;
    for (Graph::Row f = frontier; f; f &= f - 1) dist[std::countr_zero(f)] = depth;
  }
  return dist;
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError();
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    auto dist = distances_from(g, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

namespace {

struct LowLink {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<Edge> found;
  int timer = 0;

  explicit LowLink(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {}

  void visit(Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    for (Graph::Row r = g.neighbors(v); r; r &= r - 1) {
      const Vertex w = std::countr_zero(r);
      if (w == parent) continue;  // simple graph: at most one parent edge
      if (disc[w] < 0) {
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) found.push_back({std::min(v, w), std::max(v, w)});
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

std::vector<Edge> bridges(const Graph& g) {
  LowLink ll(g);
  for (int v = 0; v < g.order(); ++v)
    if (ll.disc[v] < 0) ll.visit(v, -1);
  std::sort(ll.found.begin(), ll.found.end());
  return ll.found;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  Graph::Row unseen = g.order() == 32 ? ~Graph::Row{0} : (Graph::Row{1} << g.order()) - 1;
  while (unseen) {
    const Vertex s = std::countr_zero(unseen);
    Graph::Row seen = Graph::Row{1} << s, frontier = seen;
    while (frontier) {
      Graph::Row next = 0;
      for (Graph::Row f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      frontier = next & ~seen;
      seen |= next;
    }
    unseen &= ~seen;
    std::vector<Vertex> comp;
    for (Graph::Row f = seen; f; f &= f - 1) comp.push_back(std::countr_zero(f));
    out.push_back(std::move(comp));
  }
  return out;
}

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::trivial: return "trivial";
    case ComponentKind::complete: return "complete";
    case ComponentKind::two_edge_connected: return "two_edge_connected";
    case ComponentKind::other: return "other";
  }
  return "?";
}

int BridgeDecomposition::trivial_count() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(),
                                        [](const auto& c) { return c.order == 1; }));
}

int BridgeDecomposition::nontrivial_count() const {
  return static_cast<int>(components.size()) - trivial_count();
}

BridgeDecomposition bridge_decomposition(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError();
  BridgeDecomposition out;
  out.bridges = bridges(g);

  Graph rest = g;
  for (const Edge& b : out.bridges) rest = rest.without_edge(rest.edge_index(b.u, b.v));

  out.component_of.assign(g.order(), -1);
  for (auto& verts : connected_components(rest)) {
    BridgeComponent c;
    c.order = static_cast<int>(verts.size());
    const Graph sub = rest.induced(verts);
    c.edges = sub.size();
    c.diameter = diameter(sub);
    c.bridgeless = bridges(sub).empty();
    const bool complete = c.edges == c.order * (c.order - 1) / 2;
    if (c.order == 1) {
      c.kind = ComponentKind::trivial;
    } else if (complete && c.order >= 3) {
      c.kind = ComponentKind::complete;
    } else if (c.bridgeless && c.diameter >= 2) {
      c.kind = ComponentKind::two_edge_connected;
    } else {
      c.kind = ComponentKind::other;
    }
    for (Vertex v : verts) out.component_of[v] = static_cast<int>(out.components.size());
    c.vertices = std::move(verts);
    out.components.push_back(std::move(c));
  }
  return out;
}

}  // namespace rainbow
