#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

struct ExtremalOptions {
  SearchOptions search;
  int workers = 1;
  /// Read candidate graphs from this graph6 file instead of generating them.
  std::optional<std::filesystem::path> graph6_file;
  /// Append-only log of finished batches; existing entries are skipped on rerun.
  std::optional<std::filesystem::path> checkpoint;
  std::size_t batch_size = 256;
};

/// Work done on one edge-count tier. For the tier that produced the witness,
/// counts cover the classes up to and including the witness.
struct TierTally {
  int m = 0;
  std::size_t classes = 0;
  std::size_t prefiltered = 0;  // rejected by diameter, bridge or degree tests
  std::size_t searched = 0;     // sent to the coloring search
  bool feasible = false;
};

struct ExtremalResult {
  int n = 0;
  int d = 0;
  int t = 0;
  Graph witness;
  EdgeColoring coloring;
  std::size_t graphs_tested = 0;
  std::vector<TierTally> tallies;
  SearchStats stats;
};

struct ExtremalBudgetExceeded : BudgetExceeded {
  ExtremalBudgetExceeded(const std::string& what, std::vector<TierTally> partial)
      : BudgetExceeded(what), tallies(std::move(partial)) {}
  std::vector<TierTally> tallies;
};

/// Reason a graph can be skipped without a coloring search, or nullptr.
/// Diameter and bridge count bound rc from below; at d = 2 the maximum
/// degree must reach ceil(sqrt(n-1)).
const char* extremal_prefilter(const Graph& g, int d);

/// t(n,d): the fewest edges of a connected order-n graph with rc <= d.
/// Scans edge counts upward from n-1; each tier is exhausted before the next
/// starts, so the witness is the first feasible class in canonical order.
ExtremalResult compute_tnd(int n, int d, const ExtremalOptions& opts = {});

struct TableCell {
  int n = 0;
  int d = 0;
  std::optional<ExtremalResult> result;
  std::optional<SandwichResult> sandwich;
  std::string error;  // set when the cell could not be computed
};

/// One cell per (n, d) with 1 <= d <= n-1 inside the given inclusive ranges.
/// Failures are recorded per cell.
std::vector<TableCell> tnd_table(int n_lo, int n_hi, int d_lo, int d_hi,
                                 const ExtremalOptions& opts = {});

}  // namespace rainbow
