#include "rainbow/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>

#include "color_search.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

int rc_lower_bound(const Graph& g) {
  if (g.order() < 2) throw InputError("rc lower bound needs at least two vertices");
  const int diam = diameter(g);  // throws on disconnected input
  return std::max(diam, static_cast<int>(bridges(g).size()));
}

std::vector<int> solver_edge_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> placed(g.size(), 0);
  for (const Edge& b : bridges(g)) {
    const int e = g.edge_index(b.u, b.v);
    order.push_back(e);
    placed[e] = 1;
  }
  if (g.order() == 0) return order;
  std::vector<char> visited(g.order(), 0);
  std::vector<Vertex> queue{0};
  visited[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Graph::Row r = g.neighbors(u); r; r &= r - 1) {
      const Vertex w = std::countr_zero(r);
      const int e = g.edge_index(u, w);
      if (!placed[e]) {
        order.push_back(e);
        placed[e] = 1;
      }
      if (!visited[w]) {
        visited[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return order;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, const SearchOptions& opts, SearchStats& stats)
      : g_(g), k_(k), opts_(opts), stats_(stats), adj_(g), order_(solver_edge_order(g)),
        colors_(g.size(), 0) {
    all_ = g.order() == 32 ? ~Graph::Row{0} : (Graph::Row{1} << g.order()) - 1;
  }

  std::optional<EdgeColoring> run() {
    const int bridge_count = static_cast<int>(bridges(g_).size());
    if (bridge_count > k_ || diameter(g_) > k_) return std::nullopt;

    // Bridges take pairwise distinct colors; numbering them 1..b in order
    // fixes the color permutation on them.
    for (int i = 0; i < bridge_count; ++i) assign(i, i + 1);
    for (Vertex s = 0; s < g_.order(); ++s)
      if (!viable_from(s)) return std::nullopt;

    if (descend(bridge_count, bridge_count)) {
      return EdgeColoring{k_, colors_};
    }
    return std::nullopt;
  }

 private:
  void assign(int pos, int c) {
    const Edge& e = g_.edges()[order_[pos]];
    adj_.set(e.u, e.v, c);
    colors_[order_[pos]] = c;
  }

  bool viable_from(Vertex s) { return reach_.run(adj_, s, k_, all_) == all_; }

  bool descend(int pos, int max_used) {
    if (pos == static_cast<int>(order_.size())) {
      ++stats_.colorings_tested;
      for (Vertex s = 0; s < g_.order(); ++s)
        if (!viable_from(s)) return false;
      return true;
    }
    const Edge& e = g_.edges()[order_[pos]];
    const int top = std::min(k_, max_used + 1);
    for (int c = 1; c <= top; ++c) {
      if (++stats_.nodes > opts_.node_budget) {
        throw BudgetExceeded("node budget of " + std::to_string(opts_.node_budget) +
                             " exhausted at k=" + std::to_string(k_));
      }
      assign(pos, c);
      if (viable_from(e.u) && viable_from(e.v) && descend(pos + 1, std::max(max_used, c))) {
        return true;
      }
    }
    assign(pos, 0);
    return false;
  }

  const Graph& g_;
  int k_;
  const SearchOptions& opts_;
  SearchStats& stats_;
  detail::ColoredAdjacency adj_;
  detail::RainbowReach reach_;
  std::vector<int> order_;
  std::vector<Color> colors_;
  Graph::Row all_ = 0;
};

}  // namespace

std::optional<EdgeColoring> is_k_rainbow_connectable(const Graph& g, int k,
                                                     const SearchOptions& opts,
                                                     SearchStats* stats) {
  if (k < 1) throw InputError("k must be at least 1");
  if (k > kMaxSearchColors) {
    throw InputError("k=" + std::to_string(k) + " exceeds the state-search limit of " +
                     std::to_string(kMaxSearchColors));
  }
  if (!is_connected(g)) throw DisconnectedError();

  SearchStats local;
  const auto start = std::chrono::steady_clock::now();
  std::optional<EdgeColoring> found;
  try {
    found = ColoringSearch(g, k, opts, local).run();
  } catch (...) {
    local.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start).count();
    if (stats) *stats += local;
    throw;
  }
  local.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (stats) *stats += local;
  return found;
}

RcResult rc_exact(const Graph& g, int k_max, const SearchOptions& opts) {
  RcResult out;
  if (g.order() == 1) {
    out.witness.k = 0;
    return out;  // rc(K1) = 0: no pairs to connect
  }
  const int lower = rc_lower_bound(g);
  if (k_max < lower) {
    throw InputError("k_max=" + std::to_string(k_max) + " is below the lower bound " +
                     std::to_string(lower));
  }
  for (int k = lower; k <= k_max; ++k) {
    if (auto col = is_k_rainbow_connectable(g, k, opts, &out.stats)) {
      out.rc = k;
      out.witness = std::move(*col);
      return out;
    }
  }
  throw InputError("no rainbow connected coloring with at most " + std::to_string(k_max) +
                   " colors");
}

}  // namespace rainbow
