#include "grundy/graph.hpp"
#include "grundy/random_graphs.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "test_util.hpp"

using namespace grundy;

TEST_CASE("families use walk-order numbering") {
    Graph p4 = path_graph(4);
    CHECK(p4.n() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.adjacent(0, 1));
    CHECK(p4.adjacent(1, 2));
    CHECK(p4.adjacent(2, 3));
    CHECK_FALSE(p4.adjacent(0, 3));

    Graph c5 = cycle_graph(5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.adjacent(v, (v + 1) % 5));

    Graph k33 = complete_bipartite_graph(3, 3);
    CHECK(k33.edge_count() == 9);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) CHECK(k33.adjacent(u, v));
    CHECK_FALSE(k33.adjacent(0, 1));
    CHECK_FALSE(k33.adjacent(3, 4));

    CHECK(stable_graph(4).edge_count() == 0);
    CHECK(complete_graph(5).edge_count() == 10);

    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("make_family mirrors the builders") {
    CHECK(canonical_form(make_family("path", {4})) == canonical_form(path_graph(4)));
    CHECK(canonical_form(make_family("complete_bipartite", {2, 3})) ==
          canonical_form(complete_bipartite_graph(2, 3)));
    CHECK_THROWS_AS(make_family("frob", {1}), std::invalid_argument);
    CHECK_THROWS_AS(make_family("path", {1, 2}), std::invalid_argument);
}

TEST_CASE("binomial tree doubles and stays a tree") {
    CHECK(binomial_tree(1).n() == 1);
    CHECK(binomial_tree(2).n() == 2);
    CHECK(canonical_form(binomial_tree(3)) == canonical_form(path_graph(4)));
    Graph b5 = binomial_tree(5);
    CHECK(b5.n() == 16);
    CHECK(b5.edge_count() == 15);
    CHECK(is_connected(b5));
    CHECK(b5.degree(0) == 4);
}

TEST_CASE("cartesian product index law") {
    auto [g, co] = cartesian_product(path_graph(3), cycle_graph(4));
    Graph p3 = path_graph(3), c4 = cycle_graph(4);
    CHECK(g.n() == 12);
    CHECK(co.rows() == 3);
    CHECK(co.cols() == 4);
    CHECK(co.index(1, 2) == 6);
    CHECK(co.row_of(6) == 1);
    CHECK(co.col_of(6) == 2);

    CHECK(g.adjacent(co.index(0, 0), co.index(1, 0)));
    CHECK(g.adjacent(co.index(1, 0), co.index(1, 1)));
    CHECK(g.adjacent(co.index(1, 0), co.index(1, 3)));
    CHECK_FALSE(g.adjacent(co.index(0, 0), co.index(1, 1)));

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(g.degree(co.index(i, j)) == p3.degree(i) + c4.degree(j));

    auto col = co.g_copy(2);
    REQUIRE(col.size() == 3);
    CHECK(col[1] == co.index(1, 2));
    auto row = co.h_copy(1);
    REQUIRE(row.size() == 4);
    CHECK(row[3] == co.index(1, 3));
}

TEST_CASE("product is commutative up to isomorphism") {
    auto [gh, c1] = cartesian_product(path_graph(4), cycle_graph(5));
    auto [hg, c2] = cartesian_product(cycle_graph(5), path_graph(4));
    CHECK(canonical_form(gh) == canonical_form(hg));
}

TEST_CASE("complement is an involution with the right degrees") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : testutil::all_graphs(n)) {
            Graph co = complement(g);
            for (int v = 0; v < n; ++v) CHECK(co.degree(v) == n - 1 - g.degree(v));
            CHECK(canonical_form(complement(co)) == canonical_form(g));
        }
}

TEST_CASE("induced subgraphs renumber ascending") {
    Graph c5 = cycle_graph(5);
    Graph h = induced_subgraph(c5, std::vector<int>{0, 1, 3});
    CHECK(h.n() == 3);
    CHECK(h.adjacent(0, 1));
    CHECK_FALSE(h.adjacent(0, 2));
    CHECK_FALSE(h.adjacent(1, 2));
}

TEST_CASE("merge identifies a pair and shrinks by one") {
    Graph p4 = path_graph(4);
    Graph m = merge_vertices(p4, 0, 2);
    CHECK(m.n() == 3);
    CHECK(canonical_form(m) == canonical_form(path_graph(3)));
    CHECK_THROWS_AS(merge_vertices(p4, 0, 1), std::invalid_argument);
}

TEST_CASE("remove_edge") {
    Graph p5 = remove_edge(cycle_graph(5), 0, 4);
    CHECK(canonical_form(p5) == canonical_form(path_graph(5)));
    CHECK_THROWS_AS(remove_edge(path_graph(3), 0, 2), std::invalid_argument);
}

TEST_CASE("bipartition roots sit in the left part") {
    auto bip = bipartition(cycle_graph(4));
    REQUIRE(bip);
    CHECK(bip->left.contains(0));
    CHECK(bip->left.contains(2));
    CHECK(bip->right.contains(1));
    CHECK(bip->right.contains(3));

    CHECK_FALSE(bipartition(cycle_graph(5)));

    auto iso = bipartition(stable_graph(3));
    REQUIRE(iso);
    CHECK(iso->left.count() == 3);

    auto kb = bipartition(complete_bipartite_graph(3, 2));
    REQUIRE(kb);
    CHECK(kb->left.contains(0));
    CHECK(kb->left.contains(1));
    CHECK(kb->left.contains(2));
}

TEST_CASE("components ordered by smallest member") {
    Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto comps = components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].contains(0));
    CHECK(comps[1].contains(3));
    CHECK_FALSE(is_connected(two));
    CHECK(is_connected(complete_graph(1)));
}

TEST_CASE("canonical form is an isomorphism invariant") {
    const size_t expected[5] = {1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) CHECK(testutil::all_graphs(n).size() == expected[n - 1]);

    CHECK(canonical_form(path_graph(5)) != canonical_form(cycle_graph(5)));

    SplitMix64 rng(11);
    for (const Graph& g : testutil::all_graphs(5)) {
        std::vector<int> perm{0, 1, 2, 3, 4};
        for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        CHECK(canonical_form(testutil::relabel(g, perm)) == canonical_form(g));
    }
}

TEST_CASE("canonical form handles a few dozen vertices") {
    Graph b = binomial_tree(5);
    std::vector<int> perm(16);
    for (int i = 0; i < 16; ++i) perm[static_cast<size_t>(i)] = 15 - i;
    CHECK(canonical_form(testutil::relabel(b, perm)) == canonical_form(b));

    auto [grid, co] = cartesian_product(path_graph(4), path_graph(5));
    std::vector<int> rot(20);
    for (int i = 0; i < 20; ++i) rot[static_cast<size_t>(i)] = (i + 7) % 20;
    CHECK(canonical_form(testutil::relabel(grid, rot)) == canonical_form(grid));
    CHECK(canonical_form(grid) != canonical_form(stable_graph(20)));
    CHECK(canonical_form(complete_graph(16)) != canonical_form(complete_bipartite_graph(8, 8)));
}

TEST_CASE("colored canonical form respects colors") {
    Graph p4 = path_graph(4);
    std::vector<int> a{1, 2, 3, 1}, b{1, 2, 1, 3};
    CHECK(canonical_form_colored(p4, a) != canonical_form_colored(p4, b));

    // Reversal is an automorphism of the path, so the mirrored coloring is
    // the same colored graph.
    std::vector<int> mirrored{1, 3, 2, 1};
    CHECK(canonical_form_colored(p4, mirrored) == canonical_form_colored(p4, a));

    std::vector<int> rev{3, 2, 1, 0};
    Graph q = testutil::relabel(p4, rev);
    std::vector<int> arev{1, 3, 2, 1};
    CHECK(canonical_form_colored(q, arev) == canonical_form_colored(p4, a));

    std::vector<int> uniform{1, 1, 1, 1};
    CHECK(canonical_form_colored(p4, uniform) != canonical_form_colored(p4, a));
}
