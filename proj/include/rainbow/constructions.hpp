#pragma once

#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

/// Layout of the bouquet graph G_d(n): q cycles of length d glued at a hub,
/// plus pendant leaves on the hub.
struct GdnPlan {
  int n = 0;
  int d = 0;
  int q = 0;
  int pendant_count = 0;
  Vertex hub = 0;
  /// Pendant colors that verified; ascending from 2 unless the fallback ran.
  std::vector<Color> pendant_colors;
  bool used_fallback = false;
};

struct Construction {
  Graph graph;
  EdgeColoring coloring;
};

struct GdnConstruction : Construction {
  GdnPlan plan;
};

/// n vertices and n-2+ceil(n/(d-1)) edges, rainbow connected with at most d
/// colors. Requires 3 <= d < ceil(n/2).
GdnConstruction build_gdn(int n, int d);

/// Colors for the d edges of one hub cycle listed in walk order from the hub:
/// 1, 2, ... going out along the first edge and d, d-1, ... coming back along
/// the last. Throws InputError if the edges do not form a d-cycle through
/// their first vertex.
std::vector<Color> color_gdn_cycle(const std::vector<Edge>& cycle_edges, int d);

enum class NamedKind { path, cycle, complete, star };

NamedKind parse_named_kind(std::string_view name);

/// path and star: all edges distinct colors; complete: one color; cycle: the
/// two-arc hub-cycle scheme with d = n.
Construction build_named(NamedKind kind, int n);

}  // namespace rainbow
