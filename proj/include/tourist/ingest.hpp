#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "tourist/graph.hpp"

namespace tourist {

struct EdgeListDocument {
    std::string source_path;
    long raw_edge_count = 0;       // data rows seen
    long dropped_self_loops = 0;
    long dropped_duplicates = 0;   // includes symmetrized directed duplicates
    std::vector<std::string> id_map;  // dense node id -> external id, first-appearance order
};

struct ParsedGraph {
    Graph graph;
    EdgeListDocument document;
};

// Whitespace-separated edge rows; '%' or '#' lines are comments; tokens past
// the first two (weights, timestamps) are ignored. Self-loops are dropped,
// duplicate undirected edges collapse, directed inputs symmetrize. Throws on
// rows with fewer than two tokens (with line number) and on inputs with no
// data rows.
ParsedGraph parse_edge_list(std::istream& in, const std::string& source_path = "");
ParsedGraph parse_edge_list_file(const std::string& path);

// Canonical cleaned form: one "u v" per line, u < v, lexicographic order.
void write_canonical_edge_list(const Graph& g, std::ostream& out);
void write_canonical_edge_list_file(const Graph& g, const std::string& path);

struct GraphSummary {
    int node_count = 0;
    long edge_count = 0;
    double mean_degree = 0.0;
    double clustering = 0.0;
    double avg_path_largest_component = 0.0;
    bool path_degenerate = false;
    int component_count = 0;
    long raw_edge_count = 0;
    long dropped_self_loops = 0;
    long dropped_duplicates = 0;
};

GraphSummary graph_summary(const Graph& g, const EdgeListDocument& doc);

}  // namespace tourist
