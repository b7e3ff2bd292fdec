#include "rainbow/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "color_search.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

int EdgeColoring::used_colors() const {
  std::set<Color> distinct(colors.begin(), colors.end());
  return static_cast<int>(distinct.size());
}

void validate_coloring(const Graph& g, const EdgeColoring& col) {
  if (static_cast<int>(col.colors.size()) != g.size()) {
    throw InputError("coloring covers " + std::to_string(col.colors.size()) + " edges, graph has " +
                     std::to_string(g.size()));
  }
  for (std::size_t i = 0; i < col.colors.size(); ++i) {
    if (col.colors[i] < 1 || col.colors[i] > col.k) {
      throw InputError("color " + std::to_string(col.colors[i]) + " on edge " +
                       std::to_string(i) + " outside 1.." + std::to_string(col.k));
    }
  }
}

namespace {

detail::ColoredAdjacency colored(const Graph& g, const EdgeColoring& col) {
  validate_coloring(g, col);
  if (col.k > kMaxSearchColors) {
    throw InputError("k=" + std::to_string(col.k) + " exceeds the state-search limit of " +
                     std::to_string(kMaxSearchColors));
  }
  detail::ColoredAdjacency adj(g);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    adj.set(g.edges()[i].u, g.edges()[i].v, col.colors[i]);
  }
  return adj;
}

}  // namespace

std::optional<Path> exists_rainbow_path(const Graph& g, const EdgeColoring& col, Vertex s,
                                        Vertex t) {
  if (s < 0 || t < 0 || s >= g.order() || t >= g.order()) {
    throw InputError("vertex out of range");
  }
  const auto adj = colored(g, col);
  detail::RainbowReach reach;
  const Graph::Row target = Graph::Row{1} << t;
  if (!(reach.run(adj, s, col.k, target) & target)) return std::nullopt;
  return reach.path_to(t);
}

VerifyResult is_rainbow_connected(const Graph& g, const EdgeColoring& col) {
  if (!is_connected(g)) throw DisconnectedError();
  const auto adj = colored(g, col);
  const int n = g.order();
  VerifyResult out;
  detail::RainbowReach reach;
  for (Vertex s = 0; s + 1 < n; ++s) {
    Graph::Row wanted = 0;
    for (Vertex t = s + 1; t < n; ++t) wanted |= Graph::Row{1} << t;
    const Graph::Row got = reach.run(adj, s, col.k, wanted);
    for (Vertex t = s + 1; t < n; ++t) {
      if (!((got >> t) & 1u)) {
        out.failing_pair = {s, t};
        out.certificate.paths.clear();
        return out;
      }
      out.certificate.paths.push_back({s, t, reach.path_to(t)});
    }
  }
  out.rainbow_connected = true;
  return out;
}

CertificateCheck check_certificate(const Graph& g, const EdgeColoring& col,
                                   const RainbowCertificate& cert) {
  const int n = g.order();
  if (static_cast<int>(col.colors.size()) != g.size()) return {false, "coloring size mismatch"};

  std::set<std::pair<Vertex, Vertex>> covered;
  for (const PairPath& pp : cert.paths) {
    const auto where = "pair (" + std::to_string(pp.s) + "," + std::to_string(pp.t) + ")";
    if (pp.path.empty() || pp.path.front() != pp.s || pp.path.back() != pp.t) {
      return {false, where + ": path does not join its endpoints"};
    }
    std::set<Color> seen;
    for (std::size_t i = 0; i + 1 < pp.path.size(); ++i) {
      const Vertex a = pp.path[i], b = pp.path[i + 1];
      if (a < 0 || b < 0 || a >= n || b >= n) return {false, where + ": vertex out of range"};
      const int e = g.edge_index(a, b);
      if (e < 0) {
        return {false, where + ": (" + std::to_string(a) + "," + std::to_string(b) +
                           ") is not an edge"};
      }
      if (!seen.insert(col.colors[e]).second) {
        return {false, where + ": color " + std::to_string(col.colors[e]) + " repeats"};
      }
    }
    covered.insert({std::min(pp.s, pp.t), std::max(pp.s, pp.t)});
  }
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t)
      if (!covered.count({s, t})) {
        return {false, "pair (" + std::to_string(s) + "," + std::to_string(t) + ") missing"};
      }
  return {true, {}};
}

}  // namespace rainbow
