#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rainbow/bounds.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

// Edge-list text: a header line "n m" followed by m lines "u v" (0-indexed).
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// Coloring text: a header line "k=<int>" followed by one "u v c" line per
// edge (0-indexed vertices, colors 1..k). Every edge of g must appear once.
std::string write_coloring(const Graph& g, const EdgeColoring& col);
EdgeColoring parse_coloring(const Graph& g, std::string_view text);

/// Edge-list text if the first line holds two integers, else one graph6 line.
Graph parse_graph_text(std::string_view text);
/// `arg` names a file when one exists at that path; otherwise it is taken as
/// a literal graph6 string.
Graph load_graph(const std::string& arg);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

inline constexpr int kJsonSchema = 1;

nlohmann::ordered_json coloring_json(const Graph& g, const EdgeColoring& col);
nlohmann::ordered_json extremal_json(const ExtremalResult& r);
nlohmann::ordered_json bound_report_json(const BoundReport& r);

enum class TableFormat { csv, md, json };
TableFormat parse_table_format(std::string_view name);

std::string render_table(const std::vector<TableCell>& cells, TableFormat fmt);
std::string render_bound_report(const BoundReport& r, TableFormat fmt);

/// Fixed three-decimal rendering used for real-valued bounds.
std::string format_bound_value(const BoundEntry& e);

}  // namespace rainbow
