#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

enum class BoundDirection { lower, upper, exact };
enum class BoundStatus { valid, out_of_range, vacuous };

const char* to_string(BoundDirection d);
const char* to_string(BoundStatus s);

struct BoundEntry {
  std::string name;  // e.g. "mid_upper", "bridge_lower"
  double value = 0.0;
  bool integral = true;
  BoundDirection direction = BoundDirection::lower;
  BoundStatus status = BoundStatus::valid;
};

/// Every bound on t(n,d) that applies at (n, d).
struct BoundReport {
  int n = 0;
  int d = 0;
  std::vector<BoundEntry> entries;
};

/// Ceiling division for signed integers with positive divisor.
long long ceil_div(long long a, long long b);
long long floor_log2(long long n);

/// The known exact values and upper bounds for t(n,d) that
/// apply at (n, d). Requires n >= 2 and 1 <= d <= n-1.
std::vector<BoundEntry> eval_theorem1(int n, int d);

struct RealBound {
  double value = 0.0;
  bool vacuous = false;  // below the trivial floor n-1
};

/// n log2 n - 4 n log2 log2 n - 2n, the asymptotic lower bound for t(n,2).
/// Requires n >= 4.
RealBound eval_prop1_lower(long long n);

/// n - d - 3 + ceil((n-1)/d), for 3 <= d < ceil(n/2).
long long eval_prop2_lower(long long n, long long d);
/// n - 2 + ceil(n/(d-1)), for 3 <= d < ceil(n/2).
long long eval_prop3_upper(long long n, long long d);

/// Minimum size of a 2-edge-connected graph of order n and diameter p.
long long eval_jarry_laugier(long long n, long long p);
/// The relaxed form n - 2 + ceil((n-2)/p); never exceeds eval_jarry_laugier.
long long eval_jl_simplified(long long n, long long p);

/// ceil(sqrt(n-1)): minimum possible maximum degree when rc <= 2.
int eq1_min_max_degree(int n);

/// The connectivity floor n-1 plus every applicable clause at (n, d): the
/// known values and upper bounds, the asymptotic t(n,2) bound (flagged
/// vacuous while below n-1), and the lower/upper pair for 3 <= d < ceil(n/2).
BoundReport bound_report(int n, int d);

struct ComponentCheck {
  int order = 0;
  int diameter = 0;
  int edges = 0;
  ComponentKind kind = ComponentKind::trivial;
  /// n_i - 2 + ceil((n_i - 2)/d_i), the component's size lower bound
  long long own_bound = 0;
  /// the same with d_i relaxed to d
  long long relaxed_bound = 0;
};

/// Per-graph replay of the structural argument behind the lower bound on
/// t(n,d): bridge count, component trichotomy, component diameters and the
/// edge-count chain.
struct DecompositionReport {
  int n = 0;
  int d = 0;
  int edges = 0;
  int bridge_count = 0;
  std::vector<ComponentCheck> components;
  long long chain_own = 0;      // k + sum(own_bound) over nontrivial components
  long long chain_relaxed = 0;  // k + sum(relaxed_bound)
  double final_bound = 0.0;     // n - d - 3 + (n-1)/d

  bool bridges_ok = false;      // k <= d
  bool trichotomy_ok = false;   // nontrivial components complete (>=3) or 2EC with diam >= 2
  bool diameters_ok = false;    // d_i <= d
  bool chain_ok = false;        // e(G) >= chain_own >= chain_relaxed
  bool final_ok = false;        // e(G) >= final_bound

  bool all_ok() const {
    return bridges_ok && trichotomy_ok && diameters_ok && chain_ok && final_ok;
  }
};

/// Requires `witness` to be a rainbow connected coloring of g with at most d
/// colors; throws InputError otherwise.
DecompositionReport prop2_decomposition_check(const Graph& g, int d, const EdgeColoring& witness);
/// Certifies rc(g) <= d with the solver first.
DecompositionReport prop2_decomposition_check(const Graph& g, int d,
                                              const SearchOptions& opts = {});

struct SandwichResult {
  bool pass = false;
  long long lower = 0;
  long long upper = 0;
  /// which entries produced the interval, e.g. "bridge_lower+hub_upper+d3_upper"
  std::string basis;
};

/// Whether t_value lies in the best known interval for t(n,d). Inside the
/// range 3 <= d < ceil(n/2) this is [max(n-1, bridge_lower), min(hub_upper,
/// known uppers)]; elsewhere the exact known value, or the d = 2 upper bound.
SandwichResult sandwich_check(int n, int d, long long t_value);

}  // namespace rainbow
