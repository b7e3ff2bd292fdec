#pragma once

#include <cstdint>
#include <optional>

#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

struct SearchOptions {
  /// Maximum number of search-tree nodes (edge color assignments) per call.
  std::uint64_t node_budget = 100'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t colorings_tested = 0;
  double elapsed_ms = 0.0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    colorings_tested += o.colorings_tested;
    elapsed_ms += o.elapsed_ms;
    return *this;
  }
};

/// max(diameter, bridge count). Requires a connected graph with n >= 2.
int rc_lower_bound(const Graph& g);

/// The order in which the solver assigns colors: bridges first, then the
/// remaining edges in BFS order from vertex 0. Values index Graph::edges().
std::vector<int> solver_edge_order(const Graph& g);

/// A rainbow connected coloring using at most k colors, or nullopt when none
/// exists. Exhaustive modulo color permutations; the returned coloring is the
/// lexicographically first canonical one in solver_edge_order(). Throws
/// BudgetExceeded when the node budget runs out before a decision.
std::optional<EdgeColoring> is_k_rainbow_connectable(const Graph& g, int k,
                                                     const SearchOptions& opts = {},
                                                     SearchStats* stats = nullptr);

struct RcResult {
  int rc = 0;
  EdgeColoring witness;
  SearchStats stats;
};

/// Tries k = rc_lower_bound(g), rc_lower_bound(g)+1, ... up to k_max.
/// Throws InputError if no k <= k_max works.
RcResult rc_exact(const Graph& g, int k_max, const SearchOptions& opts = {});

}  // namespace rainbow
