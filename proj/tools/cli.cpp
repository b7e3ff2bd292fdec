#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "rainbow/bounds.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/formats.hpp"
#include "rainbow/graph6.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

namespace rainbow::cli {

namespace {

// Flags override the environment, which overrides built-in defaults.
std::uint64_t env_budget() {
  if (const char* v = std::getenv("RAINBOW_BUDGET")) {
    try {
      const long long b = std::stoll(v);
      if (b > 0) return static_cast<std::uint64_t>(b);
    } catch (const std::exception&) {
    }
    throw InputError("RAINBOW_BUDGET must be a positive integer");
  }
  return SearchOptions{}.node_budget;
}

int env_workers() {
  if (const char* v = std::getenv("RAINBOW_WORKERS")) {
    try {
      const int w = std::stoi(v);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
    throw InputError("RAINBOW_WORKERS must be a positive integer");
  }
  return 1;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw InputError("malformed range '" + text + "' (expected a:b)");
  }
}

struct Options {
  std::string graph_arg, coloring_arg;
  std::string kind = "gdn", out_prefix, format, n_range, d_range, graph6_file, checkpoint;
  int n = 0, d = 0, kmax = 0, workers = 0;
  long long budget = 0;
};

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.node_budget = o.budget > 0 ? static_cast<std::uint64_t>(o.budget) : env_budget();
  return s;
}

int cmd_rc(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_arg);
  if (!is_connected(g)) throw DisconnectedError();
  out << "graph=" << graph6_encode(g) << " n=" << g.order() << " m=" << g.size() << '\n';
  if (g.order() < 2) {
    out << "rc=0\n";
    return kOk;
  }
  const int diam = diameter(g);
  const int nbridges = static_cast<int>(bridges(g).size());
  out << "lower_bound=" << std::max(diam, nbridges) << " diameter=" << diam
      << " bridges=" << nbridges << '\n';
  const int kmax = o.kmax > 0 ? o.kmax : std::min(g.size(), kMaxSearchColors);
  const RcResult r = rc_exact(g, kmax, search_options(o));
  out << "rc=" << r.rc << '\n';
  out << "nodes=" << r.stats.nodes << " colorings_tested=" << r.stats.colorings_tested << '\n';
  out << "witness:\n" << write_coloring(g, r.witness);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = parse_graph_text(read_text_file(o.graph_arg));
  const EdgeColoring col = parse_coloring(g, read_text_file(o.coloring_arg));
  const VerifyResult v = is_rainbow_connected(g, col);
  if (v) {
    if (!check_certificate(g, col, v.certificate)) throw Error("internal: certificate rejected");
    out << "VALID paths=" << v.certificate.paths.size() << '\n';
    return kOk;
  }
  out << "INVALID pair (" << v.failing_pair->first << "," << v.failing_pair->second << ")\n";
  return kNegative;
}

int cmd_construct(const Options& o, std::ostream& out) {
  Graph g;
  EdgeColoring col;
  if (o.kind == "gdn") {
    auto c = build_gdn(o.n, o.d);
    g = c.graph;
    col = c.coloring;
    const long long formula = eval_prop3_upper(o.n, o.d);
    out << "kind=gdn n=" << g.order() << " d=" << o.d << " q=" << c.plan.q
        << " pendants=" << c.plan.pendant_count << '\n';
    out << "edges=" << g.size() << " formula=" << formula << ' '
        << (g.size() == formula ? "match" : "MISMATCH") << '\n';
  } else {
    auto c = build_named(parse_named_kind(o.kind), o.n);
    g = c.graph;
    col = c.coloring;
    out << "kind=" << o.kind << " n=" << g.order() << '\n' << "edges=" << g.size() << '\n';
  }
  out << "colors=" << col.used_colors() << '\n';
  if (!o.out_prefix.empty()) {
    write_text_file(o.out_prefix + ".g6", graph6_encode(g) + "\n");
    write_text_file(o.out_prefix + ".col", write_coloring(g, col));
    out << "wrote " << o.out_prefix << ".g6 " << o.out_prefix << ".col\n";
  }
  return kOk;
}

int cmd_tnd(const Options& o, std::ostream& out) {
  ExtremalOptions opts;
  opts.search = search_options(o);
  opts.workers = o.workers > 0 ? o.workers : env_workers();
  if (!o.graph6_file.empty()) opts.graph6_file = o.graph6_file;
  if (!o.checkpoint.empty()) opts.checkpoint = o.checkpoint;
  const TableFormat fmt = parse_table_format(o.format.empty() ? "md" : o.format);

  const bool single = o.n_range.empty() && o.d_range.empty();
  if (single) {
    if (o.n <= 0 || o.d <= 0) throw InputError("tnd needs --n and --d, or --n-range/--d-range");
    if (fmt == TableFormat::json) {
      const ExtremalResult r = compute_tnd(o.n, o.d, opts);
      auto j = extremal_json(r);
      const SandwichResult s = sandwich_check(o.n, o.d, r.t);
      j["lower"] = s.lower;
      j["upper"] = s.upper;
      j["basis"] = s.basis;
      j["sandwich"] = s.pass ? "pass" : "FAIL";
      out << j.dump(2) << '\n';
      return kOk;
    }
  }
  const auto [n_lo, n_hi] = o.n_range.empty() ? std::pair{o.n, o.n} : parse_range(o.n_range);
  const auto [d_lo, d_hi] = o.d_range.empty() ? std::pair{o.d, o.d} : parse_range(o.d_range);
  if (o.d_range.empty() && o.d <= 0) throw InputError("tnd needs --d or --d-range");
  if (o.n_range.empty() && o.n <= 0) throw InputError("tnd needs --n or --n-range");
  const auto cells = tnd_table(n_lo, n_hi, d_lo, d_hi, opts);
  out << render_table(cells, fmt);
  if (single && !cells.empty() && !cells[0].result) {
    const bool budget = cells[0].error.find("budget") != std::string::npos;
    if (budget) throw BudgetExceeded(cells[0].error);
    throw InputError(cells[0].error);
  }
  return kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const BoundReport r = bound_report(o.n, o.d);
  const TableFormat fmt = parse_table_format(o.format.empty() ? "md" : o.format);
  out << render_bound_report(r, fmt);
  if (fmt != TableFormat::json && o.d == 2) {
    out << "rc<=2 forces max degree >= " << eq1_min_max_degree(o.n) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rainbow connection numbers and the extremal function t(n,d)"};
  app.require_subcommand(1);
  Options o;

  auto* rc = app.add_subcommand("rc", "exact rainbow connection number of a graph");
  rc->add_option("graph", o.graph_arg, "graph6 string, or a graph6/edge-list file")->required();
  rc->add_option("--kmax", o.kmax, "largest color count to try");
  rc->add_option("--budget", o.budget, "search node budget (env RAINBOW_BUDGET)");

  auto* verify = app.add_subcommand("verify", "check a coloring for rainbow connectivity");
  verify->add_option("graph", o.graph_arg, "graph file (graph6 or edge list)")->required();
  verify->add_option("coloring", o.coloring_arg, "coloring file")->required();

  auto* construct = app.add_subcommand("construct", "emit a named graph with its coloring");
  construct->add_option("--kind", o.kind, "gdn|path|cycle|complete|star");
  construct->add_option("--n", o.n, "order")->required();
  construct->add_option("--d", o.d, "color bound (gdn only)");
  construct->add_option("--out-prefix", o.out_prefix, "write <prefix>.g6 and <prefix>.col");

  auto* tnd = app.add_subcommand("tnd", "minimum edges over order-n graphs with rc <= d");
  tnd->add_option("--n", o.n, "order");
  tnd->add_option("--d", o.d, "color bound");
  tnd->add_option("--n-range", o.n_range, "orders a:b");
  tnd->add_option("--d-range", o.d_range, "color bounds a:b");
  tnd->add_option("--graph6", o.graph6_file, "candidate graphs from a graph6 file");
  tnd->add_option("--format", o.format, "csv|md|json");
  tnd->add_option("--workers", o.workers, "worker threads (env RAINBOW_WORKERS)");
  tnd->add_option("--budget", o.budget, "search node budget per graph (env RAINBOW_BUDGET)");
  tnd->add_option("--checkpoint", o.checkpoint, "resumable batch log");

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds on t(n,d)");
  bounds->add_option("--n", o.n, "order")->required();
  bounds->add_option("--d", o.d, "color bound")->required();
  bounds->add_option("--format", o.format, "csv|md|json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    if (rc->parsed()) return cmd_rc(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (tnd->parsed()) return cmd_tnd(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
  } catch (const BudgetExceeded& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace rainbow::cli
