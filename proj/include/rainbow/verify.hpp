#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using Color = int;

/// Colors 1..k assigned to the edges of a graph, indexed like Graph::edges().
struct EdgeColoring {
  int k = 0;
  std::vector<Color> colors;

  /// Number of distinct colors that actually occur.
  int used_colors() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Hard cap on k for the (vertex, color-subset) state search.
inline constexpr int kMaxSearchColors = 24;

/// Throws InputError unless col assigns one color in 1..k to every edge of g.
void validate_coloring(const Graph& g, const EdgeColoring& col);

using Path = std::vector<Vertex>;

struct PairPath {
  Vertex s = 0;
  Vertex t = 0;
  Path path;
};

/// One rainbow path per unordered vertex pair, pairs in lexicographic order.
struct RainbowCertificate {
  std::vector<PairPath> paths;
};

struct VerifyResult {
  bool rainbow_connected = false;
  RainbowCertificate certificate;  // complete iff rainbow_connected
  std::optional<std::pair<Vertex, Vertex>> failing_pair;

  explicit operator bool() const { return rainbow_connected; }
};

struct CertificateCheck {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Shortest rainbow s-t path, if any. Searches (vertex, used-color set)
/// states, skipping a state whenever a subset of its colors already reached
/// the same vertex.
std::optional<Path> exists_rainbow_path(const Graph& g, const EdgeColoring& col, Vertex s,
                                        Vertex t);

/// Certificate for every pair, or the lexicographically smallest pair that
/// has no rainbow path. Throws DisconnectedError for disconnected g.
VerifyResult is_rainbow_connected(const Graph& g, const EdgeColoring& col);

/// Independent re-validation of a certificate. Never throws.
CertificateCheck check_certificate(const Graph& g, const EdgeColoring& col,
                                   const RainbowCertificate& cert);

}  // namespace rainbow
