#include "rainbow/formats.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "rainbow/errors.hpp"
#include "rainbow/graph6.hpp"

namespace rainbow {

namespace {

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

// Parses exactly `count` integers from a line; trailing junk is an error.
std::vector<long long> ints_of(const std::string& line, std::size_t count, int lineno) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long x;
  while (out.size() < count && in >> x) out.push_back(x);
  std::string rest;
  if (out.size() != count || (in >> rest)) {
    throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(count) +
                     " integers: '" + line + "'");
  }
  return out;
}

}  // namespace

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw InputError("edge list: empty input");
  const auto head = ints_of(lines[0], 2, 1);
  const long long n = head[0], m = head[1];
  if (n < 0 || m < 0) throw InputError("edge list: negative header values");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw InputError("edge list: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  if (n > Graph::kMaxOrder) throw InputError("edge list: order exceeds " +
                                             std::to_string(Graph::kMaxOrder));
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = ints_of(lines[i], 2, static_cast<int>(i + 1));
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n) {
      throw InputError("edge list: line " + std::to_string(i + 1) + ": vertex out of range");
    }
    pairs.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  return Graph::from_edge_list(static_cast<int>(n), pairs);
}

std::string write_coloring(const Graph& g, const EdgeColoring& col) {
  validate_coloring(g, col);
  std::ostringstream out;
  out << "k=" << col.k << '\n';
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    out << g.edges()[i].u << ' ' << g.edges()[i].v << ' ' << col.colors[i] << '\n';
  }
  return out.str();
}

EdgeColoring parse_coloring(const Graph& g, std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0].rfind("k=", 0) != 0) {
    throw InputError("coloring: first line must be 'k=<int>'");
  }
  EdgeColoring col;
  try {
    std::size_t used = 0;
    col.k = std::stoi(lines[0].substr(2), &used);
    if (2 + used != lines[0].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InputError("coloring: malformed header '" + lines[0] + "'");
  }
  if (col.k < 1) throw InputError("coloring: k must be positive");
  col.colors.assign(g.size(), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i + 1);
    const auto uvc = ints_of(lines[i], 3, lineno);
    const bool in_range = uvc[0] >= 0 && uvc[1] >= 0 && uvc[0] < g.order() && uvc[1] < g.order();
    const int e = in_range ? g.edge_index(static_cast<int>(uvc[0]), static_cast<int>(uvc[1])) : -1;
    if (e < 0) {
      throw InputError("coloring: line " + std::to_string(lineno) + ": (" +
                       std::to_string(uvc[0]) + "," + std::to_string(uvc[1]) +
                       ") is not an edge of the graph");
    }
    if (col.colors[e] != 0) {
      throw InputError("coloring: line " + std::to_string(lineno) + ": edge listed twice");
    }
    if (uvc[2] < 1 || uvc[2] > col.k) {
      throw InputError("coloring: line " + std::to_string(lineno) + ": color outside 1.." +
                       std::to_string(col.k));
    }
    col.colors[e] = static_cast<Color>(uvc[2]);
  }
  for (std::size_t e = 0; e < col.colors.size(); ++e) {
    if (col.colors[e] == 0) {
      throw InputError("coloring: edge (" + std::to_string(g.edges()[e].u) + "," +
                       std::to_string(g.edges()[e].v) + ") has no color");
    }
  }
  return col;
}

Graph parse_graph_text(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw InputError("empty graph input");
  std::istringstream first(lines[0]);
  long long a, b;
  std::string rest;
  if (first >> a >> b && !(first >> rest)) return parse_edge_list(text);
  if (lines.size() != 1) throw InputError("graph6 input must be a single line");
  return graph6_decode(lines[0]);
}

Graph load_graph(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return parse_graph_text(read_text_file(arg));
  return graph6_decode(arg);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

nlohmann::ordered_json coloring_json(const Graph& g, const EdgeColoring& col) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    edges.push_back({g.edges()[i].u, g.edges()[i].v, col.colors[i]});
  }
  return {{"k", col.k}, {"edges", edges}};
}

nlohmann::ordered_json extremal_json(const ExtremalResult& r) {
  nlohmann::ordered_json tallies = nlohmann::ordered_json::array();
  for (const TierTally& t : r.tallies) {
    tallies.push_back({{"m", t.m},
                       {"classes", t.classes},
                       {"prefiltered", t.prefiltered},
                       {"searched", t.searched},
                       {"feasible", t.feasible}});
  }
  return {{"schema", kJsonSchema},
          {"n", r.n},
          {"d", r.d},
          {"t", r.t},
          {"witness_graph6", graph6_encode(r.witness)},
          {"witness_coloring", coloring_json(r.witness, r.coloring)},
          {"graphs_tested", r.graphs_tested},
          {"tallies", tallies}};
}

std::string format_bound_value(const BoundEntry& e) {
  if (e.integral) return std::to_string(static_cast<long long>(e.value));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", e.value);
  return buf;
}

nlohmann::ordered_json bound_report_json(const BoundReport& r) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const BoundEntry& e : r.entries) {
    nlohmann::ordered_json j = {{"name", e.name}, {"direction", to_string(e.direction)}};
    if (e.integral) {
      j["value"] = static_cast<long long>(e.value);
    } else {
      j["value"] = std::stod(format_bound_value(e));
    }
    j["status"] = to_string(e.status);
    entries.push_back(j);
  }
  return {{"schema", kJsonSchema}, {"n", r.n}, {"d", r.d}, {"entries", entries}};
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "md") return TableFormat::md;
  if (name == "json") return TableFormat::json;
  throw InputError("unknown format '" + std::string(name) + "' (csv|md|json)");
}

namespace {

std::string bound_column(int n, int d, const char* which) {
  for (const BoundEntry& e : bound_report(n, d).entries)
    if (e.name == which) return format_bound_value(e);
  return "";
}

std::string known_column(int n, int d) {
  std::string out;
  for (const BoundEntry& e : eval_theorem1(n, d)) {
    if (!out.empty()) out += ";";
    out += e.name + std::string(" ") + to_string(e.direction) + " " + format_bound_value(e);
  }
  return out;
}

}  // namespace

std::string render_table(const std::vector<TableCell>& cells, TableFormat fmt) {
  if (fmt == TableFormat::json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const TableCell& c : cells) {
      nlohmann::ordered_json row = {{"n", c.n}, {"d", c.d}};
      if (c.result) {
        row["result"] = extremal_json(*c.result);
        row["lower"] = c.sandwich->lower;
        row["upper"] = c.sandwich->upper;
        row["basis"] = c.sandwich->basis;
        row["sandwich"] = c.sandwich->pass ? "pass" : "FAIL";
      } else {
        row["error"] = c.error;
      }
      rows.push_back(row);
    }
    return nlohmann::ordered_json{{"schema", kJsonSchema}, {"cells", rows}}.dump(2) + "\n";
  }

  const std::vector<std::string> header = {"n",      "d",      "t",     "lower", "upper",
                                           "t-lower", "upper-t", "basis", "bridge_lower", "hub_upper",
                                           "known",   "sandwich"};
  std::vector<std::vector<std::string>> rows;
  for (const TableCell& c : cells) {
    std::vector<std::string> row = {std::to_string(c.n), std::to_string(c.d)};
    if (c.result) {
      const auto& s = *c.sandwich;
      row.push_back(std::to_string(c.result->t));
      row.push_back(std::to_string(s.lower));
      row.push_back(std::to_string(s.upper));
      row.push_back(std::to_string(c.result->t - s.lower));
      row.push_back(std::to_string(s.upper - c.result->t));
      row.push_back(s.basis);
    } else {
      const bool budget = c.error.find("budget") != std::string::npos;
      row.push_back(budget ? "BUDGET" : "ERROR");
      for (int i = 0; i < 5; ++i) row.push_back("");
    }
    row.push_back(bound_column(c.n, c.d, "bridge_lower"));
    row.push_back(bound_column(c.n, c.d, "hub_upper"));
    row.push_back(known_column(c.n, c.d));
    row.push_back(c.result ? (c.sandwich->pass ? "pass" : "FAIL") : "n/a");
    rows.push_back(std::move(row));
  }

  std::ostringstream out;
  if (fmt == TableFormat::csv) {
    auto emit = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
      out << '\n';
    };
    emit(header);
    for (const auto& r : rows) emit(r);
  } else {
    auto emit = [&](const std::vector<std::string>& r) {
      out << '|';
      for (const auto& cell : r) out << ' ' << cell << " |";
      out << '\n';
    };
    emit(header);
    out << '|';
    for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& r : rows) emit(r);
  }
  return out.str();
}

std::string render_bound_report(const BoundReport& r, TableFormat fmt) {
  if (fmt == TableFormat::json) return bound_report_json(r).dump(2) + "\n";
  std::ostringstream out;
  if (fmt == TableFormat::csv) {
    out << "name,direction,value,status\n";
    for (const BoundEntry& e : r.entries) {
      out << e.name << ',' << to_string(e.direction) << ',' << format_bound_value(e) << ','
          << to_string(e.status) << '\n';
    }
  } else {
    out << "| bound | direction | value | status |\n|---|---|---|---|\n";
    for (const BoundEntry& e : r.entries) {
      out << "| " << e.name << " | " << to_string(e.direction) << " | " << format_bound_value(e)
          << " | " << to_string(e.status) << " |\n";
    }
  }
  return out.str();
}

}  // namespace rainbow
