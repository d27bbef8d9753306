#include <doctest.h>

#include <sstream>

#include "tourist/generators.hpp"
#include "tourist/ingest.hpp"

using namespace tourist;

#ifndef TEST_DATA_DIR
#define TEST_DATA_DIR "data"
#endif

TEST_CASE("edge list parsing with comments") {
    std::istringstream in("% comment\n1 2\n2 3\n");
    ParsedGraph parsed = parse_edge_list(in);
    CHECK(parsed.graph.node_count() == 3);
    CHECK(parsed.graph.edge_count() == 2);
    CHECK(parsed.document.raw_edge_count == 2);
    CHECK(parsed.document.id_map == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("cleaning drops self-loops and duplicate orientations") {
    std::istringstream in("1 1\n1 2\n2 1\n");
    ParsedGraph parsed = parse_edge_list(in);
    CHECK(parsed.graph.node_count() == 2);
    CHECK(parsed.graph.edge_count() == 1);
    CHECK(parsed.document.dropped_self_loops == 1);
    CHECK(parsed.document.dropped_duplicates == 1);
    CHECK(parsed.document.raw_edge_count == 3);
}

TEST_CASE("extra tokens are ignored, short rows are errors") {
    std::istringstream weighted("a b 3.5 1700000000\nb c 1.0 1700000001\n");
    CHECK(parse_edge_list(weighted).graph.edge_count() == 2);

    std::istringstream short_row("1 2\n3\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(short_row, "input"),
                         doctest::Contains("line 2"), std::runtime_error);

    std::istringstream empty("% nothing\n");
    CHECK_THROWS(parse_edge_list(empty));
}

TEST_CASE("string ids map densely in first-appearance order") {
    std::istringstream in("alpha beta\ngamma alpha\nbeta gamma\n");
    ParsedGraph parsed = parse_edge_list(in);
    CHECK(parsed.document.id_map == std::vector<std::string>{"alpha", "beta", "gamma"});
    CHECK(parsed.graph.node_count() == 3);
    CHECK(parsed.graph.edge_count() == 3);
}

TEST_CASE("karate club ingests with the published shape") {
    ParsedGraph parsed = parse_edge_list_file(std::string(TEST_DATA_DIR) + "/real/karate.edges");
    CHECK(parsed.graph.node_count() == 34);
    CHECK(parsed.graph.edge_count() == 78);
    CHECK(global_clustering(parsed.graph) == doctest::Approx(0.57).epsilon(0.04));

    GraphSummary summary = graph_summary(parsed.graph, parsed.document);
    CHECK(summary.node_count == 34);
    CHECK(summary.component_count == 1);
    CHECK(summary.avg_path_largest_component > 2.0);
    CHECK(summary.avg_path_largest_component < 3.0);
}

TEST_CASE("canonical serialization round-trips") {
    Graph g = watts_strogatz(GeneratorSpec{GraphModel::WattsStrogatz, 60, 6, 0.2, 12});
    std::ostringstream out;
    write_canonical_edge_list(g, out);
    std::istringstream in(out.str());
    ParsedGraph parsed = parse_edge_list(in);
    CHECK(parsed.graph.node_count() == g.node_count());
    // Canonical output is sorted "u v" with u < v, so dense remapping is the
    // identity and the graphs compare equal edge-for-edge.
    CHECK(parsed.graph.edges() == g.edges());

    std::ostringstream again;
    write_canonical_edge_list(parsed.graph, again);
    CHECK(again.str() == out.str());
}

TEST_CASE("summary flags an empty-after-cleaning graph") {
    std::istringstream in("1 1\n2 2\n1 1\n");
    ParsedGraph parsed = parse_edge_list(in);
    CHECK(parsed.graph.node_count() == 0);
    CHECK(parsed.graph.edge_count() == 0);
    GraphSummary summary = graph_summary(parsed.graph, parsed.document);
    CHECK(summary.edge_count == 0);
    CHECK(summary.dropped_self_loops == 3);
}
