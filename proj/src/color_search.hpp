#pragma once

// Breadth-first search over (vertex, used-color set) states, shared by the
// verifier and the rc solver. Edges with color 0 are uncolored: they extend a
// walk without consuming a color, which lets the solver ask whether a partial
// coloring can still be completed for some pair.

#include <bit>
#include <cstdint>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow::detail {

struct ColoredAdjacency {
  int n = 0;
  std::vector<Graph::Row> rows;
  std::vector<std::uint8_t> color;  // n*n, 0 = uncolored

  ColoredAdjacency(const Graph& g) : n(g.order()), rows(g.rows()), color(n * n, 0) {}

  void set(Vertex u, Vertex v, int c) {
    color[u * n + v] = static_cast<std::uint8_t>(c);
    color[v * n + u] = static_cast<std::uint8_t>(c);
  }
  int at(Vertex u, Vertex v) const { return color[u * n + v]; }
};

class RainbowReach {
 public:
  /// Explores walks from s of length <= max_len whose colored edges carry
  /// distinct colors. Returns the set of vertices reached. Stops early once
  /// every vertex in `wanted` is reached.
  Graph::Row run(const ColoredAdjacency& adj, Vertex s, int max_len, Graph::Row wanted) {
    const int n = adj.n;
    states_.clear();
    seen_.assign(n, {});
    first_.assign(n, -1);

    states_.push_back({s, 0, 0, -1});
    seen_[s].push_back(0);
    first_[s] = 0;
    Graph::Row reached = Graph::Row{1} << s;

    for (std::size_t head = 0; head < states_.size(); ++head) {
      if ((reached & wanted) == wanted) break;
      const State cur = states_[head];
      if (cur.len >= max_len) continue;
      for (Graph::Row r = adj.rows[cur.v]; r; r &= r - 1) {
        const Vertex w = std::countr_zero(r);
        const int c = adj.at(cur.v, w);
        std::uint32_t mask = cur.mask;
        if (c != 0) {
          const std::uint32_t bit = std::uint32_t{1} << (c - 1);
          if (mask & bit) continue;
          mask |= bit;
        }
        if (dominated(w, mask)) continue;
        seen_[w].push_back(mask);
        if (first_[w] < 0) first_[w] = static_cast<int>(states_.size());
        states_.push_back({w, mask, cur.len + 1, static_cast<int>(head)});
        reached |= Graph::Row{1} << w;
      }
    }
    return reached;
  }

  /// Walk from the last source to t (t must have been reached).
  std::vector<Vertex> path_to(Vertex t) const {
    std::vector<Vertex> rev;
    for (int i = first_[t]; i >= 0; i = states_[i].parent) rev.push_back(states_[i].v);
    return {rev.rbegin(), rev.rend()};
  }

 private:
  struct State {
    Vertex v;
    std::uint32_t mask;
    int len;
    int parent;
  };

  // States are dequeued in nondecreasing length, so an earlier state whose
  // colors are a subset of `mask` is at least as good.
  bool dominated(Vertex w, std::uint32_t mask) const {
    for (std::uint32_t old : seen_[w])
      if ((old & mask) == old) return true;
    return false;
  }

  std::vector<State> states_;
  std::vector<std::vector<std::uint32_t>> seen_;
  std::vector<int> first_;
};

}  // namespace rainbow::detail
