#include "rainbow/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

const char* to_string(BoundDirection d) {
  switch (d) {
    case BoundDirection::lower: return "lower";
    case BoundDirection::upper: return "upper";
    case BoundDirection::exact: return "exact";
  }
  return "?";
}

const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::valid: return "valid";
    case BoundStatus::out_of_range: return "out_of_range";
    case BoundStatus::vacuous: return "vacuous";
  }
  return "?";
}

long long ceil_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a > 0) == (b > 0))) ++q;
  return q;
}

long long floor_log2(long long n) {
  long long r = -1;
  for (; n > 0; n >>= 1) ++r;
  return r;
}

namespace {

bool in_prop_range(long long n, long long d) { return d >= 3 && d < ceil_div(n, 2); }

void require_prop_range(long long n, long long d) {
  if (!in_prop_range(n, d)) {
    throw InputError("need 3 <= d < ceil(n/2); got n=" + std::to_string(n) +
                     ", d=" + std::to_string(d));
  }
}

void require_nd(int n, int d) {
  if (n < 2 || d < 1 || d > n - 1) {
    throw InputError("need n >= 2 and 1 <= d <= n-1; got n=" + std::to_string(n) +
                     ", d=" + std::to_string(d));
  }
}

BoundEntry entry(std::string name, double value, BoundDirection dir) {
  BoundEntry e;
  e.name = std::move(name);
  e.value = value;
  e.direction = dir;
  return e;
}

}  // namespace

std::vector<BoundEntry> eval_theorem1(int n, int d) {
  require_nd(n, d);
  std::vector<BoundEntry> out;
  const long long nn = n;
  if (d == 1) out.push_back(entry("complete", nn * (nn - 1) / 2, BoundDirection::exact));
  if (d == 2) {
    const long long lg = floor_log2(nn);
    out.push_back(entry("d2_upper", (nn + 1) * lg - (1LL << lg) - 2, BoundDirection::upper));
  }
  if (d == 3) out.push_back(entry("d3_upper", 2 * nn - 5, BoundDirection::upper));
  if (d >= 4 && 2 * d < n - 1) {
    out.push_back(entry("mid_upper", nn - 1 + ceil_div(nn - 2, d - 2), BoundDirection::upper));
  }
  if (2 * d >= n && d <= n - 2) out.push_back(entry("half_exact", nn, BoundDirection::exact));
  if (d == n - 1) out.push_back(entry("tree_exact", nn - 1, BoundDirection::exact));
  return out;
}

RealBound eval_prop1_lower(long long n) {
  if (n < 4) throw InputError("the t(n,2) lower bound needs n >= 4");
  const double x = static_cast<double>(n);
  const double lg = std::log2(x);
  RealBound out;
  out.value = x * lg - 4.0 * x * std::log2(lg) - 2.0 * x;
  out.vacuous = out.value < x - 1.0;
  return out;
}

long long eval_prop2_lower(long long n, long long d) {
  require_prop_range(n, d);
  return n - d - 3 + ceil_div(n - 1, d);
}

long long eval_prop3_upper(long long n, long long d) {
  require_prop_range(n, d);
  return n - 2 + ceil_div(n, d - 1);
}

long long eval_jarry_laugier(long long n, long long p) {
  if (n < 3 || p < 2) throw InputError("need n >= 3 and diameter p >= 2");
  const long long first = ceil_div(n * p - (2 * p + 1), p - 1);
  if (p % 2 == 1) return first;
  return std::min(first, ceil_div((n - 1) * (p + 1), p));
}

long long eval_jl_simplified(long long n, long long p) {
  if (n < 3 || p < 2) throw InputError("need n >= 3 and diameter p >= 2");
  return n - 2 + ceil_div(n - 2, p);
}

int eq1_min_max_degree(int n) {
  if (n < 2) throw InputError("need n >= 2");
  int r = 0;
  while (r * r < n - 1) ++r;
  return r;
}

BoundReport bound_report(int n, int d) {
  require_nd(n, d);
  BoundReport report;
  report.n = n;
  report.d = d;
  report.entries.push_back(entry("connected_floor", n - 1, BoundDirection::lower));
  for (BoundEntry& e : eval_theorem1(n, d)) report.entries.push_back(std::move(e));
  if (d == 2 && n >= 4) {
    const RealBound p1 = eval_prop1_lower(n);
    BoundEntry e = entry("asymptotic_lower", p1.value, BoundDirection::lower);
    e.integral = false;
    e.status = p1.vacuous ? BoundStatus::vacuous : BoundStatus::valid;
    report.entries.push_back(e);
  }
  if (in_prop_range(n, d)) {
    BoundEntry lo = entry("bridge_lower", eval_prop2_lower(n, d), BoundDirection::lower);
    if (lo.value < n - 1) lo.status = BoundStatus::vacuous;
    report.entries.push_back(lo);
    report.entries.push_back(entry("hub_upper", eval_prop3_upper(n, d), BoundDirection::upper));
  }
  return report;
}

DecompositionReport prop2_decomposition_check(const Graph& g, int d, const EdgeColoring& witness) {
  if (d < 1) throw InputError("d must be at least 1");
  if (witness.k > d || !is_rainbow_connected(g, witness)) {
    throw InputError("precondition not certified: witness is not a rainbow coloring with <= " +
                     std::to_string(d) + " colors");
  }
  const BridgeDecomposition dec = bridge_decomposition(g);
  DecompositionReport r;
  r.n = g.order();
  r.d = d;
  r.edges = g.size();
  r.bridge_count = static_cast<int>(dec.bridges.size());
  r.bridges_ok = r.bridge_count <= d;
  r.trichotomy_ok = true;
  r.diameters_ok = true;
  r.chain_own = r.chain_relaxed = r.bridge_count;
  for (const BridgeComponent& c : dec.components) {
    ComponentCheck cc;
    cc.order = c.order;
    cc.diameter = c.diameter;
    cc.edges = c.edges;
    cc.kind = c.kind;
    if (c.order > 1) {
      if (c.kind != ComponentKind::complete && c.kind != ComponentKind::two_edge_connected) {
        r.trichotomy_ok = false;
      }
      if (c.diameter > d) r.diameters_ok = false;
      cc.own_bound = c.order - 2 + ceil_div(c.order - 2, std::max(c.diameter, 1));
      cc.relaxed_bound = c.order - 2 + ceil_div(c.order - 2, d);
      r.chain_own += cc.own_bound;
      r.chain_relaxed += cc.relaxed_bound;
    }
    r.components.push_back(cc);
  }
  r.chain_ok = r.edges >= r.chain_own && r.chain_own >= r.chain_relaxed;
  r.final_bound = r.n - d - 3 + static_cast<double>(r.n - 1) / d;
  r.final_ok = r.edges >= r.final_bound;
  return r;
}

DecompositionReport prop2_decomposition_check(const Graph& g, int d, const SearchOptions& opts) {
  auto witness = is_k_rainbow_connectable(g, d, opts);
  if (!witness) {
    throw InputError("precondition not certified: rc(G) > " + std::to_string(d));
  }
  return prop2_decomposition_check(g, d, *witness);
}

SandwichResult sandwich_check(int n, int d, long long t_value) {
  require_nd(n, d);
  SandwichResult r;
  if (in_prop_range(n, d)) {
    r.lower = std::max<long long>(n - 1, eval_prop2_lower(n, d));
    r.upper = eval_prop3_upper(n, d);
    r.basis = "bridge_lower+hub_upper";
    for (const BoundEntry& e : eval_theorem1(n, d)) {
      if (e.direction == BoundDirection::upper) {
        r.upper = std::min(r.upper, static_cast<long long>(e.value));
        r.basis += "+" + e.name;
      }
    }
  } else {
    r.lower = n - 1;
    r.upper = n * (n - 1) / 2;
    r.basis = "floor";
    for (const BoundEntry& e : eval_theorem1(n, d)) {
      const auto v = static_cast<long long>(e.value);
      if (e.direction == BoundDirection::exact) {
        r.lower = r.upper = v;
        r.basis = e.name;
        break;
      }
      if (e.direction == BoundDirection::upper) {
        r.upper = std::min(r.upper, v);
        r.basis += "+" + e.name;
      }
    }
  }
  r.pass = r.lower <= t_value && t_value <= r.upper;
  return r;
}

}  // namespace rainbow
