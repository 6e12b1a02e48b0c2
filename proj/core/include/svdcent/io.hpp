#pragma once

#include <iosfwd>
#include <string>

#include "svdcent/centrality.hpp"
#include "svdcent/experiments.hpp"
#include "svdcent/graph.hpp"

namespace svdcent {

/// How vertex tokens in text inputs are interpreted. auto_detect uses plain
/// 0-based indices when every token is an unsigned integer and falls back to
/// label interning (first-seen order) otherwise.
enum class VertexIdMode { auto_detect, indices, labels };

/// Parses the edge-list format: one "tail head" pair per line, whitespace
/// separated; lines starting with '#' and blank lines are skipped. Errors
/// carry 1-based line numbers: malformed token counts, non-integer tokens in
/// index mode, and self-loops all throw io_error.
DirectedGraph parse_edgelist(const std::string& path, VertexIdMode mode = VertexIdMode::auto_detect);
DirectedGraph parse_edgelist_text(const std::string& text, VertexIdMode mode = VertexIdMode::auto_detect);

/// Parses the hyperedge-list format: one hyperedge per line listing its
/// member vertices. Same comment, blank-line, and mode rules as edge lists.
Hypergraph parse_hyperedgelist(const std::string& path, VertexIdMode mode = VertexIdMode::auto_detect);
Hypergraph parse_hyperedgelist_text(const std::string& text, VertexIdMode mode = VertexIdMode::auto_detect);

enum class OutputFormat { json, csv, dot };

const char* to_string(OutputFormat fmt);

/// Serializes a report. CSV emits a vertex table (id,label,c_v,s_v,s_hub,
/// s_auth) and an edge table (id,tail,head,c_e,s_e) separated by a blank
/// line; JSON mirrors both plus the parameter block; DOT colors vertices and
/// edges by normalized score for external rendering. Numbers are printed
/// with 17 significant digits so round-trips are exact.
std::string export_report(const CentralityReport& report, const DirectedGraph& g, OutputFormat fmt);

/// Hypergraph variant: the edge table becomes a hyperedge table
/// (id,members,c_e,s_e); DOT renders the bipartite vertex/hyperedge form.
std::string export_report(const CentralityReport& report, const Hypergraph& h, OutputFormat fmt);

/// Reconstructs a report from its JSON export (inverse of export_report).
CentralityReport import_report(const std::string& json_text);

/// Serializes an experiment result (JSON object or CSV key/value + tables).
/// DOT is not meaningful for experiment summaries and is rejected.
std::string export_experiment(const ExperimentResult& result, OutputFormat fmt);

/// Writes content to path, throwing io_error when the file cannot be opened.
void write_file(const std::string& path, const std::string& content);

} // namespace svdcent
