#include "grundy/constructions.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/solver.hpp"

using namespace grundy;

namespace {

Coloring witness_of(const Graph& g) {
    auto r = grundy_exact(g);
    REQUIRE(r.exact);
    return r.witness;
}

void check_certificate(const ConstructionOutcome& out) {
    REQUIRE(out.verified);
    CHECK(is_grundy(out.product, out.coloring).grundy);
    CHECK(out.colors_used == out.coloring.num_colors());
    CHECK(out.colors_used >= out.claimed_lower_bound);
    CHECK(out.colors_used <= out.upper_bound);
    if (out.product.n() <= 20) {
        auto r = grundy_exact(out.product);
        REQUIRE(r.exact);
        CHECK(r.value >= out.claimed_lower_bound);
        CHECK(r.value >= out.colors_used);
    }
}

}  // namespace

TEST_CASE("bipartite factor times a path or cycle") {
    Graph p4 = path_graph(4);
    auto bip = bipartition(p4);
    REQUIRE(bip);
    auto out = bipartite_times_path_or_cycle(p4, *bip, witness_of(p4), {false, 3});
    check_certificate(out);
    CHECK(out.claimed_lower_bound == 5);
    CHECK(out.colors_used == 5);
    CHECK(out.exact);

    Graph k33 = complete_bipartite_graph(3, 3);
    auto bk = bipartition(k33);
    REQUIRE(bk);
    auto ring = bipartite_times_path_or_cycle(k33, *bk, witness_of(k33), {true, 4});
    check_certificate(ring);
    CHECK(ring.claimed_lower_bound == 4);

    Graph star = complete_bipartite_graph(1, 3);
    auto bs = bipartition(star);
    REQUIRE(bs);
    auto st = bipartite_times_path_or_cycle(star, *bs, witness_of(star), {false, 3});
    check_certificate(st);
    CHECK(st.claimed_lower_bound == 4);
}

TEST_CASE("bipartite construction rejects bad inputs") {
    Graph p4 = path_graph(4);
    auto bip = bipartition(p4);
    REQUIRE(bip);
    Coloring w = witness_of(p4);
    CHECK_THROWS_AS(bipartite_times_path_or_cycle(p4, *bip, w, {false, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(bipartite_times_path_or_cycle(p4, *bip, w, {true, 2}),
                    std::invalid_argument);

    Coloring not_grundy(std::vector<int>{1, 2, 3, 2});
    CHECK_THROWS_AS(bipartite_times_path_or_cycle(p4, *bip, not_grundy, {false, 3}),
                    std::invalid_argument);

    Bipartition wrong{VertexSet(4), VertexSet(4)};
    wrong.left.add(0);
    wrong.left.add(1);
    wrong.right.add(2);
    wrong.right.add(3);
    CHECK_THROWS_AS(bipartite_times_path_or_cycle(p4, wrong, w, {false, 3}),
                    std::invalid_argument);
}

TEST_CASE("non-bipartite factor times a path or cycle") {
    for (auto second : {PathOrCycle{false, 4}, PathOrCycle{true, 4}, PathOrCycle{true, 5}}) {
        Graph c5 = cycle_graph(5);
        auto out = nonbipartite_times_path_or_cycle(c5, witness_of(c5), second);
        check_certificate(out);
        CHECK(out.claimed_lower_bound == 4);
    }

    Graph k3 = complete_graph(3);
    auto out = nonbipartite_times_path_or_cycle(k3, witness_of(k3), {false, 4});
    check_certificate(out);
    CHECK(out.claimed_lower_bound == 4);
    CHECK(out.upper_bound == 5);

    CHECK_THROWS_AS(nonbipartite_times_path_or_cycle(k3, witness_of(k3), {false, 3}),
                    std::invalid_argument);
}

TEST_CASE("complete graph times a bipartite graph") {
    Graph p4 = path_graph(4);
    auto bip = bipartition(p4);
    REQUIRE(bip);
    auto out = complete_times_bipartite(3, p4, *bip, witness_of(p4));
    check_certificate(out);
    CHECK(out.claimed_lower_bound == 5);
    CHECK(out.exact);

    Graph k33 = complete_bipartite_graph(3, 3);
    auto bk = bipartition(k33);
    REQUIRE(bk);
    auto big = complete_times_bipartite(4, k33, *bk, witness_of(k33));
    check_certificate(big);
    CHECK(big.claimed_lower_bound == 5);
    CHECK(big.upper_bound == 7);

    Graph c6 = cycle_graph(6);
    auto bc = bipartition(c6);
    REQUIRE(bc);
    auto ring = complete_times_bipartite(3, c6, *bc, witness_of(c6));
    check_certificate(ring);
    CHECK(ring.claimed_lower_bound == 5);
    CHECK(ring.exact);

    CHECK_THROWS_AS(complete_times_bipartite(1, p4, *bip, witness_of(p4)),
                    std::invalid_argument);
}

TEST_CASE("complete graph times an arbitrary graph") {
    Graph p4 = path_graph(4);
    auto low = complete_times_any(5, p4, witness_of(p4));
    check_certificate(low);
    CHECK(low.claimed_lower_bound == 7);
    CHECK(low.exact);

    Graph c5 = cycle_graph(5);
    auto mid = complete_times_any(3, c5, witness_of(c5));
    check_certificate(mid);
    CHECK(mid.claimed_lower_bound == 4);

    Graph k4 = complete_graph(4);
    auto high = complete_times_any(3, k4, witness_of(k4));
    check_certificate(high);
    CHECK(high.claimed_lower_bound == 4);

    auto mid2 = complete_times_any(3, p4, witness_of(p4));
    check_certificate(mid2);
    CHECK(mid2.claimed_lower_bound == 4);

    auto tight = complete_times_any(4, p4, witness_of(p4));
    check_certificate(tight);
    CHECK(tight.claimed_lower_bound == 6);
    CHECK(tight.exact);

    CHECK_THROWS_AS(complete_times_any(1, p4, witness_of(p4)), std::invalid_argument);
}

TEST_CASE("meshes") {
    auto m45 = mesh_coloring({4, 5});
    check_certificate(m45);
    CHECK(m45.colors_used == 5);
    CHECK(m45.exact);

    auto m334 = mesh_coloring({3, 3, 4});
    REQUIRE(m334.verified);
    CHECK(m334.colors_used == 7);
    CHECK(m334.exact);
    CHECK(is_grundy(m334.product, m334.coloring).grundy);

    CHECK_THROWS_AS(mesh_coloring({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(mesh_coloring({2, 5}), std::invalid_argument);
    CHECK_THROWS_AS(mesh_coloring({5}), std::invalid_argument);
}

TEST_CASE("even tori") {
    auto t44 = even_torus_coloring({4, 4});
    check_certificate(t44);
    CHECK(t44.colors_used == 5);
    CHECK(t44.exact);

    auto t46 = even_torus_coloring({4, 6});
    check_certificate(t46);
    CHECK(t46.colors_used == 5);

    auto t444 = even_torus_coloring({4, 4, 4});
    REQUIRE(t444.verified);
    CHECK(t444.colors_used == 7);
    CHECK(t444.exact);

    CHECK_THROWS_AS(even_torus_coloring({4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(even_torus_coloring({4}), std::invalid_argument);
}

TEST_CASE("odd tori") {
    auto t35 = odd_torus_value({3, 5});
    check_certificate(t35);
    CHECK(t35.colors_used == 5);
    CHECK(t35.exact);

    CHECK_THROWS_AS(odd_torus_value({3, 5, 9}), std::invalid_argument);
    CHECK_THROWS_AS(odd_torus_value({5, 3}), std::invalid_argument);
    CHECK_THROWS_AS(odd_torus_value({3}), std::invalid_argument);

    SearchBudget tiny;
    tiny.max_nodes = 1;
    auto starved = odd_torus_value({3, 5}, tiny);
    CHECK(starved.inconclusive);
    CHECK_FALSE(starved.verified);
    CHECK(is_grundy(starved.product, starved.coloring).grundy);
}

TEST_CASE("closed forms for grids, cylinders and tori") {
    CHECK(grid_family_value(GridKind::grid, 2, 3) == 4);
    CHECK(grid_family_value(GridKind::grid, 3, 3) == 4);
    CHECK(grid_family_value(GridKind::grid, 4, 5) == 5);
    CHECK(grid_family_value(GridKind::cylinder, 2, 7) == 4);
    CHECK(grid_family_value(GridKind::cylinder, 3, 4) == 4);
    CHECK(grid_family_value(GridKind::cylinder, 3, 5) == 5);
    CHECK(grid_family_value(GridKind::torus, 3, 4) == 4);
    CHECK(grid_family_value(GridKind::torus, 3, 5) == 5);
    CHECK(grid_family_value(GridKind::torus, 4, 4) == 5);

    CHECK_THROWS_AS(grid_family_value(GridKind::grid, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(grid_family_value(GridKind::grid, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(grid_family_value(GridKind::cylinder, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(grid_family_value(GridKind::torus, 2, 4), std::invalid_argument);
}

TEST_CASE("closed forms match the search on small instances") {
    for (int n = 2; n <= 4; ++n)
        for (int m = n; m <= 20 / n; ++m) {
            if (n == 2 && m == 2) continue;
            auto [g, co] = cartesian_product(path_graph(n), path_graph(m));
            CHECK(grid_family_value(GridKind::grid, n, m) == grundy_exact(g).value);
        }
    for (int n = 2; n <= 4; ++n)
        for (int m = 3; m <= 20 / n; ++m) {
            auto [g, co] = cartesian_product(path_graph(n), cycle_graph(m));
            CHECK(grid_family_value(GridKind::cylinder, n, m) == grundy_exact(g).value);
        }
    for (int n = 3; n <= 4; ++n)
        for (int m = n; m <= 20 / n; ++m) {
            auto [g, co] = cartesian_product(cycle_graph(n), cycle_graph(m));
            CHECK(grid_family_value(GridKind::torus, n, m) == grundy_exact(g).value);
        }
}

TEST_CASE("additive bound counterexample family") {
    auto ce = ng_counterexample(1, 1, 1);
    CHECK(ce.graph.n() == 6);
    CHECK(ce.sum == ce.graph.n() + 2);
    CHECK(is_grundy(ce.graph, ce.coloring).grundy);
    CHECK(is_grundy(complement(ce.graph), ce.complement_coloring).grundy);
    CHECK(ce.coloring.num_colors() == 4);
    CHECK(ce.complement_coloring.num_colors() == ce.graph.n() - 2);

    auto r = grundy_exact(ce.graph);
    auto rc = grundy_exact(complement(ce.graph));
    REQUIRE(r.exact);
    REQUIRE(rc.exact);
    CHECK(r.value + rc.value > ce.graph.n() + 1);

    auto big = ng_counterexample(2, 3, 1);
    CHECK(big.graph.n() == 9);
    CHECK(big.sum == 11);
    CHECK(is_grundy(big.graph, big.coloring).grundy);

    CHECK_THROWS_AS(ng_counterexample(0, 1, 1), std::invalid_argument);
}
