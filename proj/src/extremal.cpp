#include "rainbow/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "rainbow/enumerate.hpp"

namespace rainbow {

const char* extremal_prefilter(const Graph& g, int d) {
  if (diameter(g) > d) return "diameter";
  if (static_cast<int>(bridges(g).size()) > d) return "bridges";
  if (d == 2 && g.order() >= 2 && max_degree(g) < eq1_min_max_degree(g.order())) return "degree";
  return nullptr;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct BatchKey {
  int m;
  std::size_t begin;
  friend auto operator<=>(const BatchKey&, const BatchKey&) = default;
};

struct BatchRecord {
  std::size_t end = 0;
  std::size_t prefiltered = 0;
  std::size_t searched = 0;
};

class Checkpoint {
 public:
  Checkpoint(const std::optional<std::filesystem::path>& path, int n, int d)
      : path_(path), n_(n), d_(d) {
    if (!path_) return;
    std::ifstream in(*path_);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string tag;
      ls >> tag;
      if (tag != "batch") continue;
      std::map<std::string, long long> kv;
      std::string tok;
      while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        kv[tok.substr(0, eq)] = std::stoll(tok.substr(eq + 1));
      }
      if (kv["n"] != n || kv["d"] != d) continue;
      done_[{static_cast<int>(kv["m"]), static_cast<std::size_t>(kv["begin"])}] = {
          static_cast<std::size_t>(kv["end"]), static_cast<std::size_t>(kv["prefiltered"]),
          static_cast<std::size_t>(kv["searched"])};
    }
  }

  const BatchRecord* find(int m, std::size_t begin, std::size_t end) const {
    auto it = done_.find({m, begin});
    return it != done_.end() && it->second.end == end ? &it->second : nullptr;
  }

  void record(int m, std::size_t begin, const BatchRecord& r) {
    if (!path_) return;
    std::ofstream out(*path_, std::ios::app);
    out << "batch n=" << n_ << " d=" << d_ << " m=" << m << " begin=" << begin
        << " end=" << r.end << " prefiltered=" << r.prefiltered << " searched=" << r.searched
        << " feasible=0\n";
  }

 private:
  std::optional<std::filesystem::path> path_;
  int n_, d_;
  std::map<BatchKey, BatchRecord> done_;
};

enum class Outcome : char { pending, prefiltered, infeasible, feasible, budget };

struct Slot {
  Outcome outcome = Outcome::pending;
  std::optional<EdgeColoring> coloring;
  std::string error;
};

// Tests graphs[begin, end) with a shared-nothing worker pool. Indexes past
// the smallest feasible one found so far are skipped; everything before it
// is always evaluated, so the outcome does not depend on scheduling.
void run_batch(const std::vector<Graph>& graphs, std::size_t begin, std::size_t end, int d,
               const ExtremalOptions& opts, std::vector<Slot>& slots, SearchStats& stats) {
  std::atomic<std::size_t> next{begin};
  std::atomic<std::size_t> best{kNone};
  std::mutex stats_mu;

  auto work = [&] {
    SearchStats local;
    for (std::size_t i; (i = next.fetch_add(1)) < end;) {
      if (i > best.load()) continue;
      Slot& slot = slots[i - begin];
      if (extremal_prefilter(graphs[i], d)) {
        slot.outcome = Outcome::prefiltered;
        continue;
      }
      try {
        slot.coloring = is_k_rainbow_connectable(graphs[i], d, opts.search, &local);
        slot.outcome = slot.coloring ? Outcome::feasible : Outcome::infeasible;
      } catch (const BudgetExceeded& e) {
        slot.outcome = Outcome::budget;
        slot.error = e.what();
      }
      if (slot.outcome == Outcome::feasible) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
    std::lock_guard lock(stats_mu);
    stats += local;
  };

  const int workers = std::max(1, opts.workers);
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
}

std::map<int, std::vector<Graph>> load_tiers(int n, int m_lo, int m_hi,
                                             const ExtremalOptions& opts) {
  EnumerationQuery q = EnumerationQuery::edges(n, m_lo, m_hi);
  q.graph6_file = opts.graph6_file;
  std::map<int, std::vector<Graph>> tiers;
  enumerate_connected(q, [&](const Graph& g) { tiers[g.size()].push_back(g); });
  return tiers;
}

}  // namespace

ExtremalResult compute_tnd(int n, int d, const ExtremalOptions& opts) {
  if (n < 2 || d < 1 || d > n - 1) {
    throw InputError("need n >= 2 and 1 <= d <= n-1; got n=" + std::to_string(n) +
                     ", d=" + std::to_string(d));
  }
  ExtremalResult out;
  out.n = n;
  out.d = d;
  Checkpoint checkpoint(opts.checkpoint, n, d);

  const int m_full = n * (n - 1) / 2;
  bool any_graph = false;
  // Generated sources are produced in widening edge windows so sparse answers
  // never pay for dense tiers; a file is read once.
  int lo = n - 1, width = 4;
  while (lo <= m_full) {
    const int hi = opts.graph6_file ? m_full : std::min(m_full, lo + width - 1);
    auto tiers = load_tiers(n, lo, hi, opts);
    for (int m = lo; m <= hi; ++m) {
      auto it = tiers.find(m);
      if (it == tiers.end()) continue;
      any_graph = true;
      const std::vector<Graph>& graphs = it->second;

      TierTally tally;
      tally.m = m;
      tally.classes = graphs.size();
      for (std::size_t begin = 0; begin < graphs.size(); begin += opts.batch_size) {
        const std::size_t end = std::min(graphs.size(), begin + opts.batch_size);
        if (const BatchRecord* rec = checkpoint.find(m, begin, end)) {
          tally.prefiltered += rec->prefiltered;
          tally.searched += rec->searched;
          continue;
        }
        std::vector<Slot> slots(end - begin);
        run_batch(graphs, begin, end, d, opts, slots, out.stats);

        std::size_t first_feasible = kNone;
        for (std::size_t i = 0; i < slots.size(); ++i)
          if (slots[i].outcome == Outcome::feasible) {
            first_feasible = i;
            break;
          }
        const std::size_t stop = first_feasible == kNone ? slots.size() : first_feasible + 1;
        BatchRecord rec;
        rec.end = end;
        for (std::size_t i = 0; i < stop; ++i) {
          if (slots[i].outcome == Outcome::budget) {
            tally.prefiltered += rec.prefiltered;
            tally.searched += rec.searched + 1;
            out.tallies.push_back(tally);
            throw ExtremalBudgetExceeded("t(" + std::to_string(n) + "," + std::to_string(d) +
                                             ") inconclusive at m=" + std::to_string(m) + ": " +
                                             slots[i].error,
                                         out.tallies);
          }
          if (slots[i].outcome == Outcome::prefiltered) ++rec.prefiltered;
          else ++rec.searched;
        }
        tally.prefiltered += rec.prefiltered;
        tally.searched += rec.searched;

        if (first_feasible != kNone) {
          tally.feasible = true;
          out.tallies.push_back(tally);
          out.t = m;
          out.witness = graphs[begin + first_feasible];
          out.coloring = *slots[first_feasible].coloring;
          for (const TierTally& t : out.tallies) out.graphs_tested += t.prefiltered + t.searched;
          return out;
        }
        checkpoint.record(m, begin, rec);
      }
      out.tallies.push_back(tally);
    }
    lo = hi + 1;
    width *= 2;
  }
  if (!any_graph) throw InputError("graph source holds no connected graphs of order " +
                                   std::to_string(n));
  // Only reachable for a file source that lacks a feasible graph.
  throw InputError("no graph in the source has rc <= " + std::to_string(d));
}

std::vector<TableCell> tnd_table(int n_lo, int n_hi, int d_lo, int d_hi,
                                 const ExtremalOptions& opts) {
  std::vector<TableCell> cells;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int d = std::max(1, d_lo); d <= std::min(d_hi, n - 1); ++d) {
      TableCell cell;
      cell.n = n;
      cell.d = d;
      try {
        cell.result = compute_tnd(n, d, opts);
        cell.sandwich = sandwich_check(n, d, cell.result->t);
      } catch (const Error& e) {
        cell.error = e.what();
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace rainbow
