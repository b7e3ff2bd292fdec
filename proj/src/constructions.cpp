#include "rainbow/constructions.hpp"

#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

std::vector<Color> color_gdn_cycle(const std::vector<Edge>& cycle_edges, int d) {
  if (d < 3) throw InputError("cycle length must be at least 3");
  if (static_cast<int>(cycle_edges.size()) != d) {
    throw InputError("cycle has " + std::to_string(cycle_edges.size()) + " edges, expected " +
                     std::to_string(d));
  }
  // Walk the listed edges: each must share a vertex with its predecessor and
  // the walk must close at the starting vertex.
  const Edge& first = cycle_edges[0];
  const Edge& second = cycle_edges[1];
  const Vertex hub = (first.v == second.u || first.v == second.v) ? first.u : first.v;
  Vertex at = hub;
  for (const Edge& e : cycle_edges) {
    if (e.u == at) {
      at = e.v;
    } else if (e.v == at) {
      at = e.u;
    } else {
      throw InputError("cycle edges are not listed in walk order");
    }
  }
  if (at != hub) throw InputError("cycle does not return to the hub");

  // Outbound edge j (1-based) gets j, so the first ceil(d/2) edges read
  // 1..ceil(d/2) and the return arc reads d, d-1, ... from the hub side.
  std::vector<Color> colors(d);
  for (int j = 0; j < d; ++j) colors[j] = j + 1;
  return colors;
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

GdnConstruction build_gdn(int n, int d) {
  if (d < 3 || d >= ceil_div(n, 2)) {
    throw InputError("G_d(n) needs 3 <= d < ceil(n/2); got n=" + std::to_string(n) +
                     ", d=" + std::to_string(d));
  }
  GdnConstruction out;
  GdnPlan& plan = out.plan;
  plan.n = n;
  plan.d = d;
  plan.q = ceil_div(n, d - 1) - 1;
  plan.pendant_count = n - 1 - plan.q * (d - 1);
  plan.hub = 0;

  std::vector<Edge> edges;
  std::vector<std::vector<Edge>> cycles;
  Vertex next = 1;
  for (int i = 0; i < plan.q; ++i) {
    std::vector<Edge> cyc;
    Vertex prev = plan.hub;
    for (int j = 0; j < d - 1; ++j, ++next) {
      cyc.push_back({prev, next});
      prev = next;
    }
    cyc.push_back({prev, plan.hub});
    cycles.push_back(cyc);
  }
  std::vector<Vertex> leaves;
  for (int i = 0; i < plan.pendant_count; ++i) leaves.push_back(next++);

  for (const auto& cyc : cycles)
    for (const Edge& e : cyc) edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  for (Vertex leaf : leaves) edges.push_back({plan.hub, leaf});
  out.graph = Graph::from_edges(n, edges);

  const Graph& g = out.graph;
  out.coloring.k = d;
  out.coloring.colors.assign(g.size(), 0);
  for (const auto& cyc : cycles) {
    const auto colors = color_gdn_cycle(cyc, d);
    for (int j = 0; j < d; ++j) out.coloring.colors[g.edge_index(cyc[j].u, cyc[j].v)] = colors[j];
  }

  auto apply_pendants = [&](const std::vector<Color>& pc) {
    for (std::size_t i = 0; i < leaves.size(); ++i)
      out.coloring.colors[g.edge_index(plan.hub, leaves[i])] = pc[i];
  };

  std::vector<Color> pendant(plan.pendant_count);
  for (int i = 0; i < plan.pendant_count; ++i) pendant[i] = 2 + i;
  apply_pendants(pendant);
  plan.pendant_colors = pendant;
  if (is_rainbow_connected(g, out.coloring)) return out;

  // Fallback: every assignment of colors 1..d to the pendant edges.
  plan.used_fallback = true;
  std::vector<Color> trial(plan.pendant_count, 1);
  while (true) {
    apply_pendants(trial);
    if (is_rainbow_connected(g, out.coloring)) {
      plan.pendant_colors = trial;
      return out;
    }
    int i = plan.pendant_count - 1;
    while (i >= 0 && trial[i] == d) trial[i--] = 1;
    if (i < 0) break;
    ++trial[i];
  }
  throw Error("no pendant coloring makes G_d(n) rainbow connected");
}

NamedKind parse_named_kind(std::string_view name) {
  if (name == "path") return NamedKind::path;
  if (name == "cycle") return NamedKind::cycle;
  if (name == "complete") return NamedKind::complete;
  if (name == "star") return NamedKind::star;
  throw InputError("unknown graph kind '" + std::string(name) + "'");
}

Construction build_named(NamedKind kind, int n) {
  const int min_n = kind == NamedKind::cycle ? 3 : 1;
  if (n < min_n) throw InputError("order " + std::to_string(n) + " too small for this kind");

  Construction out;
  std::vector<Edge> edges;
  switch (kind) {
    case NamedKind::path:
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      break;
    case NamedKind::star:
      for (int v = 1; v < n; ++v) edges.push_back({0, v});
      break;
    case NamedKind::complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
      break;
    case NamedKind::cycle:
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      edges.push_back({0, n - 1});
      break;
  }
  out.graph = Graph::from_edges(n, edges);
  const Graph& g = out.graph;
  out.coloring.colors.assign(g.size(), 1);

  switch (kind) {
    case NamedKind::path:
    case NamedKind::star:
      out.coloring.k = g.size();
      for (int i = 0; i < g.size(); ++i) out.coloring.colors[i] = i + 1;
      break;
    case NamedKind::complete:
      out.coloring.k = g.size() > 0 ? 1 : 0;
      break;
    case NamedKind::cycle: {
      std::vector<Edge> walk;
      for (int v = 0; v + 1 < n; ++v) walk.push_back({v, v + 1});
      walk.push_back({n - 1, 0});
      const auto colors = color_gdn_cycle(walk, n);
      for (int j = 0; j < n; ++j) out.coloring.colors[g.edge_index(walk[j].u, walk[j].v)] = colors[j];
      out.coloring.k = n;
      break;
    }
  }
  return out;
}

}  // namespace rainbow
