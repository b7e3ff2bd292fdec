#include "rainbow/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "rainbow/errors.hpp"
#include "rainbow/graph6.hpp"

namespace rainbow {

namespace {

constexpr int kMax = kCanonicalMaxOrder;
using Coloring = std::array<int, kMax>;  // cell rank of each vertex
using Cert = std::array<std::uint16_t, kMax>;
using Perm = std::array<Vertex, kMax>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Coloring c{};
    refine(c);
    std::vector<Vertex> prefix;
    search(c, prefix);

    CanonicalLabeling out;
    out.order.assign(best_order_.begin(), best_order_.begin() + n_);
    std::vector<Vertex> perm(n_);
    for (int p = 0; p < n_; ++p) perm[out.order[p]] = p;
    out.label = graph6_encode(g_.relabeled(perm));
    return out;
  }

 private:
  int cell_count(const Coloring& c) const {
    int top = -1;
    for (int v = 0; v < n_; ++v) top = std::max(top, c[v]);
    return top + 1;
  }

  // Splits cells by the multiset of neighbor cells until stable. Only
  // depends on the current colors, so it commutes with relabeling.
  void refine(Coloring& c) const {
    int cells = cell_count(c);
    while (true) {
      std::array<std::array<std::uint8_t, kMax + 1>, kMax> sig{};
      for (int v = 0; v < n_; ++v) {
        sig[v][0] = static_cast<std::uint8_t>(c[v]);
        for (Graph::Row r = g_.neighbors(v); r; r &= r - 1) ++sig[v][1 + c[std::countr_zero(r)]];
      }
      std::array<int, kMax> idx{};
      std::iota(idx.begin(), idx.begin() + n_, 0);
      std::sort(idx.begin(), idx.begin() + n_, [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      Coloring next{};
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
        next[idx[i]] = rank;
      }
      c = next;
      const int now = n_ == 0 ? 0 : rank + 1;
      if (now == cells) return;
      cells = now;
    }
  }

  Coloring individualize(const Coloring& c, Vertex w) const {
    Coloring key{};
    for (int v = 0; v < n_; ++v) key[v] = 2 * c[v] + ((c[v] == c[w] && v != w) ? 1 : 0);
    std::array<int, kMax> sorted{};
    std::copy(key.begin(), key.begin() + n_, sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + n_);
    const auto end = std::unique(sorted.begin(), sorted.begin() + n_);
    Coloring out{};
    for (int v = 0; v < n_; ++v)
      out[v] = static_cast<int>(std::lower_bound(sorted.begin(), end, key[v]) - sorted.begin());
    return out;
  }

  void leaf(const Coloring& c) {
    Perm order{};
    for (int v = 0; v < n_; ++v) order[c[v]] = v;
    Cert cert{};
    for (int p = 0; p < n_; ++p) {
      std::uint16_t row = 0;
      for (int q = 0; q < n_; ++q)
        if (g_.adjacent(order[p], order[q])) row |= std::uint16_t(1u << q);
      cert[p] = row;
    }
    if (!have_leaf_) {
      have_leaf_ = true;
      first_cert_ = best_cert_ = cert;
      first_order_ = best_order_ = order;
      return;
    }
    if (cert == first_cert_) record_automorphism(first_order_, order);
    if (cert == best_cert_) {
      record_automorphism(best_order_, order);
    } else if (cert > best_cert_) {
      best_cert_ = cert;
      best_order_ = order;
    }
  }

  void record_automorphism(const Perm& from, const Perm& to) {
    Perm gamma{};
    bool identity = true;
    for (int p = 0; p < n_; ++p) {
      gamma[from[p]] = to[p];
      identity &= from[p] == to[p];
    }
    if (!identity) automorphisms_.push_back(gamma);
  }

  // Orbit representatives under the automorphisms found so far that fix
  // every vertex of `prefix`.
  std::array<int, kMax> orbits(const std::vector<Vertex>& prefix) const {
    std::array<int, kMax> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(const Coloring& c, std::vector<Vertex>& prefix) {
    // First non-singleton cell in cell order.
    std::array<int, kMax> size{};
    for (int v = 0; v < n_; ++v) ++size[c[v]];
    int target = -1;
    for (int cell = 0; cell < n_; ++cell)
      if (size[cell] > 1) {
        target = cell;
        break;
      }
    if (target < 0) {
      leaf(c);
      return;
    }

    std::vector<Vertex> explored;
    for (Vertex w = 0; w < n_; ++w) {
      if (c[w] != target) continue;
      if (!explored.empty()) {
        const auto orb = orbits(prefix);
        if (std::any_of(explored.begin(), explored.end(),
                        [&](Vertex x) { return orb[x] == orb[w]; })) {
          continue;
        }
      }
      Coloring child = individualize(c, w);
      refine(child);
      prefix.push_back(w);
      search(child, prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }

  const Graph& g_;
  int n_;
  bool have_leaf_ = false;
  Cert first_cert_{}, best_cert_{};
  Perm first_order_{}, best_order_{};
  std::vector<Perm> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw InputError("canonical labeling supports at most " + std::to_string(kCanonicalMaxOrder) +
                     " vertices");
  }
  return Canonizer(g).run();
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).label; }

Graph canonical_graph(const Graph& g) { return graph6_decode(canonical_form(g)); }

}  // namespace rainbow
