#include "rainbow/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <string>
#include <unordered_set>

#include "rainbow/canonical.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph6.hpp"

namespace rainbow {

EnumerationQuery EnumerationQuery::full(int n) { return edges(n, n - 1, n * (n - 1) / 2); }

EnumerationQuery EnumerationQuery::edges(int n, int m_min, int m_max) {
  EnumerationQuery q;
  q.n = n;
  q.m_min = m_min;
  q.m_max = m_max;
  return q;
}

namespace {

struct Labeled {
  Graph graph;
  std::string label;
};

void check_query(const EnumerationQuery& q) {
  if (q.n < 1) throw InputError("enumeration order must be at least 1");
  const int full = q.n * (q.n - 1) / 2;
  if (q.m_min > q.m_max || q.m_max < q.n - 1 || q.m_min > full) {
    // Empty window; allowed but yields nothing. Negative bounds are errors.
    if (q.m_min < 0 || q.m_max < 0) throw InputError("negative edge bounds");
  }
}

int sum_range(int lo, int hi) {  // lo + ... + hi
  return hi < lo ? 0 : (lo + hi) * (hi - lo + 1) / 2;
}

// Vertex whose removal defines a graph's parent: the non-cut vertex placed
// last in canonical order. Removing it leaves a connected graph.
Vertex deletion_vertex(const Graph& h, const CanonicalLabeling& lab) {
  for (int p = h.order() - 1; p >= 0; --p) {
    const Vertex v = lab.order[p];
    if (is_connected(h.without_vertex(v))) return v;
  }
  return lab.order.back();  // unreachable for connected h with n >= 2
}

// Orderly generation: a child H of parent P (P plus one new vertex) is kept
// iff deleting H's deletion vertex yields P's class; siblings are deduplicated
// by label. Every class then has exactly one generating parent.
std::vector<Labeled> generate(int n, int m_min, int m_max) {
  std::vector<Labeled> level{{Graph(1), canonical_form(Graph(1))}};
  for (int j = 1; j < n; ++j) {
    const int remaining_after = n - (j + 1);
    // Each later vertex adds at least one edge and at most its index.
    const int hi = m_max - remaining_after;
    const int max_extra = sum_range(j + 1, n - 1);
    std::vector<Labeled> next;
    for (const Labeled& parent : level) {
      const Graph& p = parent.graph;
      std::vector<int> pdeg(j);
      for (int v = 0; v < j; ++v) pdeg[v] = p.degree(v);
      std::sort(pdeg.begin(), pdeg.end());

      std::unordered_set<std::string> siblings;
      for (Graph::Row s = 1; s < (Graph::Row{1} << j); ++s) {
        const int m = p.size() + std::popcount(s);
        if (m > hi || m + max_extra < m_min) continue;

        std::vector<Graph::Row> rows(p.rows().begin(), p.rows().end());
        rows.push_back(s);
        for (int v = 0; v < j; ++v)
          if ((s >> v) & 1u) rows[v] |= Graph::Row{1} << j;
        const Graph h = Graph::from_rows(j + 1, rows);

        const CanonicalLabeling lab = canonical_labeling(h);
        if (siblings.count(lab.label)) continue;
        const Vertex del = deletion_vertex(h, lab);
        if (h.degree(del) != std::popcount(s)) continue;
        const Graph reduced = h.without_vertex(del);
        std::vector<int> rdeg(j);
        for (int v = 0; v < j; ++v) rdeg[v] = reduced.degree(v);
        std::sort(rdeg.begin(), rdeg.end());
        if (rdeg != pdeg) continue;
        if (canonical_form(reduced) != parent.label) continue;

        siblings.insert(lab.label);
        next.push_back({graph6_decode(lab.label), lab.label});
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

void enumerate_connected(const EnumerationQuery& q,
                         const std::function<void(const Graph&)>& sink) {
  check_query(q);
  std::vector<Labeled> found;
  if (q.graph6_file) {
    std::unordered_set<std::string> seen;
    for (Graph& g : read_graph6_stream(*q.graph6_file)) {
      if (g.order() != q.n || g.size() < q.m_min || g.size() > q.m_max || !is_connected(g)) {
        continue;
      }
      if (g.order() <= kCanonicalMaxOrder) {
        auto lab = canonical_labeling(g);
        if (!seen.insert(lab.label).second) continue;
        found.push_back({graph6_decode(lab.label), lab.label});
      } else {
        std::string label = graph6_encode(g);
        found.push_back({std::move(g), std::move(label)});
      }
    }
  } else {
    if (q.n > kGeneratorMaxOrder) {
      throw InputError("order " + std::to_string(q.n) + " exceeds the built-in generator cap of " +
                       std::to_string(kGeneratorMaxOrder) + "; supply a graph6 file");
    }
    if (q.m_min > q.m_max || q.m_max < q.n - 1) return;
    found = generate(q.n, q.m_min, q.m_max);
    std::erase_if(found, [&](const Labeled& l) { return l.graph.size() < q.m_min; });
  }
  std::sort(found.begin(), found.end(), [](const Labeled& a, const Labeled& b) {
    if (a.graph.size() != b.graph.size()) return a.graph.size() < b.graph.size();
    return a.label < b.label;
  });
  for (const Labeled& l : found) sink(l.graph);
}

std::vector<Graph> connected_graphs(const EnumerationQuery& q) {
  std::vector<Graph> out;
  enumerate_connected(q, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> read_graph6_stream(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::vector<Graph> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const InputError& e) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_graph6_stream(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace rainbow
