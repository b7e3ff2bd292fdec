#pragma once

#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr int kCanonicalMaxOrder = 16;

struct CanonicalLabeling {
  /// order[p] is the vertex placed at canonical position p.
  std::vector<Vertex> order;
  /// graph6 encoding of the canonically relabeled graph.
  std::string label;
};

/// Color refinement plus individualization search with automorphism pruning.
/// Two graphs get equal labels iff they are isomorphic. Throws InputError for
/// orders above kCanonicalMaxOrder.
CanonicalLabeling canonical_labeling(const Graph& g);

std::string canonical_form(const Graph& g);

/// The canonically relabeled copy of g (vertex order[p] becomes p).
Graph canonical_graph(const Graph& g);

}  // namespace rainbow
