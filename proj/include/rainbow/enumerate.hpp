#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Largest order the built-in generator accepts; larger orders need a file.
inline constexpr int kGeneratorMaxOrder = 9;

struct EnumerationQuery {
  int n = 1;
  int m_min = 0;
  int m_max = 0;
  /// When set, graphs are read from this graph6 file instead of generated.
  std::optional<std::filesystem::path> graph6_file;

  /// Full edge range n-1 .. C(n,2).
  static EnumerationQuery full(int n);
  static EnumerationQuery edges(int n, int m_min, int m_max);
};

/// Connected graphs of order q.n with q.m_min <= m <= q.m_max, one per
/// isomorphism class, as canonical representatives. Emitted in ascending
/// (edge count, canonical label) order.
void enumerate_connected(const EnumerationQuery& q,
                         const std::function<void(const Graph&)>& sink);

std::vector<Graph> connected_graphs(const EnumerationQuery& q);

/// Graphs from a file with one graph6 line per graph, in file order. Blank
/// lines are skipped. Throws InputError naming the offending line.
std::vector<Graph> read_graph6_stream(const std::filesystem::path& path);

void write_graph6_stream(const std::filesystem::path& path, const std::vector<Graph>& graphs);

}  // namespace rainbow
