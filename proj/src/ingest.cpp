#include "tourist/ingest.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tourist {

namespace {

// Canonical decimal: no sign, no leading zeros. Files whose ids are exactly
// {0..N-1} in this form keep their numeric ids, which makes parsing the
// canonical output of write_canonical_edge_list an exact identity.
bool canonical_decimal(const std::string& token, long& value) {
    if (token.empty() || token.size() > 9) return false;
    if (token.size() > 1 && token[0] == '0') return false;
    for (char c : token)
        if (c < '0' || c > '9') return false;
    value = std::stol(token);
    return true;
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in, const std::string& source_path) {
    EdgeListDocument doc;
    doc.source_path = source_path;
    std::vector<std::pair<std::string, std::string>> edges;  // deduped, input order
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<std::string> appearance;
    std::unordered_map<std::string, int> token_index;
    long self_loops = 0;
    long duplicates = 0;

    auto note_token = [&](const std::string& ext) {
        if (token_index.try_emplace(ext, static_cast<int>(appearance.size())).second)
            appearance.push_back(ext);
    };

    std::string line;
    long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream row(line);
        std::string first, second;
        if (!(row >> first)) continue;                       // blank line
        if (first[0] == '%' || first[0] == '#') continue;    // comment
        if (!(row >> second))
            throw std::runtime_error(source_path + ": line " + std::to_string(line_number) +
                                     ": edge row needs two endpoint tokens");
        ++doc.raw_edge_count;
        if (first == second) {
            ++self_loops;
            continue;
        }
        note_token(first);
        note_token(second);
        auto key = first < second ? std::make_pair(first, second) : std::make_pair(second, first);
        if (seen.insert(key).second)
            edges.push_back(std::move(key));
        else
            ++duplicates;
    }
    if (doc.raw_edge_count == 0)
        throw std::runtime_error(source_path + ": no edge rows found");

    // Numeric identity mapping when the ids are exactly the dense range.
    bool numeric = true;
    long max_value = -1;
    for (const auto& token : appearance) {
        long value = 0;
        if (!canonical_decimal(token, value)) {
            numeric = false;
            break;
        }
        max_value = std::max(max_value, value);
    }
    numeric = numeric && max_value + 1 == static_cast<long>(appearance.size());

    const int n = static_cast<int>(appearance.size());
    doc.id_map.resize(static_cast<std::size_t>(n));
    std::unordered_map<std::string, int> dense;
    int next_id = 0;
    for (const auto& token : appearance) {
        const int id = numeric ? static_cast<int>(std::stol(token)) : next_id++;
        dense[token] = id;
        doc.id_map[static_cast<std::size_t>(id)] = token;
    }

    std::vector<std::pair<int, int>> dense_edges;
    dense_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        int u = dense.at(a);
        int v = dense.at(b);
        if (u > v) std::swap(u, v);
        dense_edges.emplace_back(u, v);
    }

    doc.dropped_self_loops = self_loops;
    doc.dropped_duplicates = duplicates;
    ParsedGraph out;
    out.graph = Graph::from_edges(n, dense_edges);
    out.document = std::move(doc);
    return out;
}

ParsedGraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return parse_edge_list(in, path);
}

void write_canonical_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_canonical_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_canonical_edge_list(g, out);
}

GraphSummary graph_summary(const Graph& g, const EdgeListDocument& doc) {
    GraphSummary s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    s.mean_degree = g.mean_degree();
    s.raw_edge_count = doc.raw_edge_count;
    s.dropped_self_loops = doc.dropped_self_loops;
    s.dropped_duplicates = doc.dropped_duplicates;
    if (g.node_count() > 0) {
        s.clustering = global_clustering(g);
        AvgPathResult path = average_shortest_path(g);
        s.avg_path_largest_component = path.value;
        s.path_degenerate = path.degenerate;
        std::vector<bool> seen(static_cast<std::size_t>(g.node_count()), false);
        for (int i = 0; i < g.node_count(); ++i) {
            if (seen[i]) continue;
            ++s.component_count;
            auto dist = bfs_distances(g, i);
            for (int v = 0; v < g.node_count(); ++v)
                if (dist[v] >= 0) seen[v] = true;
        }
    }
    return s;
}

}  // namespace tourist
