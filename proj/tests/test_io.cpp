#include "grundy/io.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/random_graphs.hpp"

using namespace grundy;

TEST_CASE("dimacs parsing") {
    Graph k3 = parse_graph("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::dimacs);
    CHECK(canonical_form(k3) == canonical_form(complete_graph(3)));

    Graph p4 = parse_graph("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n", GraphFormat::dimacs);
    CHECK(canonical_form(p4) == canonical_form(path_graph(4)));

    Graph dup = parse_graph("p edge 2 2\ne 1 2\ne 2 1\n", GraphFormat::dimacs);
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(parse_graph("p edge 5 1\ne 1 7\n", GraphFormat::dimacs),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::dimacs), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\nq 1 2\n", GraphFormat::dimacs),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("", GraphFormat::dimacs), std::invalid_argument);
}

TEST_CASE("edge list parsing") {
    Graph c4 = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n", GraphFormat::edge_list);
    CHECK(canonical_form(c4) == canonical_form(cycle_graph(4)));

    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n", GraphFormat::edge_list), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("3 1\n0 1\n2 0\n", GraphFormat::edge_list),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("3 1\n0 3\n", GraphFormat::edge_list), std::invalid_argument);
}

TEST_CASE("round trips") {
    SplitMix64 rng(97);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng.below(12));
        Graph g = random_graph(n, 35, rng);
        for (auto fmt : {GraphFormat::dimacs, GraphFormat::edge_list}) {
            Graph back = parse_graph(emit_graph(g, fmt), fmt);
            REQUIRE(back.n() == g.n());
            CHECK(back.edges() == g.edges());
        }
    }
}

TEST_CASE("dot rendering") {
    std::string plain = emit_dot(complete_graph(2));
    CHECK(plain.find("graph G {") != std::string::npos);
    CHECK(plain.find("v0 -- v1;") != std::string::npos);

    Coloring c(std::vector<int>{1, 3, 2, 1});
    std::string labeled = emit_dot(path_graph(4), &c);
    CHECK(labeled.find("v0:1") != std::string::npos);
    CHECK(labeled.find("v1:3") != std::string::npos);
    CHECK(labeled.find("v3:1") != std::string::npos);

    std::string empty = emit_dot(stable_graph(1));
    CHECK(empty.find("v0") != std::string::npos);
    CHECK(empty.find("--") == std::string::npos);
}

TEST_CASE("coloring documents") {
    Coloring c(std::vector<int>{1, 3, 2, 1});
    std::string doc = emit_coloring(c);
    CHECK(doc.find("\"n\"") != std::string::npos);
    CHECK(doc.find("\"colors\"") != std::string::npos);
    CHECK(parse_coloring(doc) == c);

    Coloring partial(std::vector<int>{0, 2, 0});
    CHECK(parse_coloring(emit_coloring(partial)) == partial);

    CHECK_THROWS_AS(parse_coloring("{\"n\": 2}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coloring("{\"n\": 2, \"colors\": [1]}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coloring("{\"n\": 2, \"colors\": [1, -4]}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coloring("not json"), std::invalid_argument);
}
