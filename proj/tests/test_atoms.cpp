#include "grundy/atoms.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/solver.hpp"
#include "test_util.hpp"

using namespace grundy;

namespace {

std::set<std::string> member_forms(const AtomSet& atoms) {
    std::set<std::string> out;
    for (const auto& m : atoms.members) out.insert(canonical_form(m.graph));
    return out;
}

}  // namespace

TEST_CASE("smallest families") {
    auto one = generate_atoms(1);
    REQUIRE(one.members.size() == 1);
    CHECK(one.complete);
    CHECK(one.members[0].graph.n() == 1);

    auto two = generate_atoms(2);
    REQUIRE(two.members.size() == 1);
    CHECK(canonical_form(two.members[0].graph) == canonical_form(complete_graph(2)));

    auto three = generate_atoms(3);
    CHECK(three.complete);
    CHECK(member_forms(three) ==
          std::set<std::string>{canonical_form(path_graph(4)), canonical_form(complete_graph(3))});
}

TEST_CASE("members carry valid data") {
    auto atoms = generate_atoms(4);
    REQUIRE(atoms.complete);
    CHECK(atoms.k == 4);
    CHECK_FALSE(atoms.members.empty());
    CHECK_FALSE(atoms.trace.empty());

    bool saw_k4 = false, saw_seed = false;
    for (const auto& m : atoms.members) {
        CHECK(m.graph.n() >= 4);
        CHECK(m.graph.n() <= 8);
        CHECK(m.graph.edge_count() >= 3);
        CHECK(is_connected(m.graph));
        CHECK(m.witness.num_colors() == 4);
        CHECK(is_grundy(m.graph, m.witness).grundy);
        CHECK(m.label == canonical_form(m.graph));
        if (m.graph.n() == 4) {
            CHECK(canonical_form(m.graph) == canonical_form(complete_graph(4)));
            saw_k4 = true;
        }
        if (m.graph.n() == 8) saw_seed = true;
    }
    CHECK(saw_k4);
    CHECK(saw_seed);

    for (const auto& m : atoms.members) CHECK(grundy_oracle(m.graph) == 4);
}

TEST_CASE("trace rows connect known members") {
    auto atoms = generate_atoms(3);
    std::set<std::string> forms = member_forms(atoms);
    for (const auto& ev : atoms.trace) {
        CHECK(forms.contains(ev.parent));
        CHECK(forms.contains(ev.child));
    }
}

TEST_CASE("generation is deterministic") {
    auto a = generate_atoms(4);
    auto b = generate_atoms(4);
    REQUIRE(a.members.size() == b.members.size());
    for (size_t i = 0; i < a.members.size(); ++i) {
        CHECK(a.members[i].label == b.members[i].label);
        CHECK(a.members[i].edge_critical == b.members[i].edge_critical);
    }
}

TEST_CASE("edge criticality") {
    CHECK(is_edge_critical(path_graph(4), 3));
    CHECK(is_edge_critical(complete_graph(3), 3));
    CHECK_FALSE(is_edge_critical(cycle_graph(5), 3));
    CHECK_THROWS_AS(is_edge_critical(cycle_graph(5), 4), std::invalid_argument);

    auto atoms = generate_atoms(3);
    for (const auto& m : atoms.members) CHECK(m.edge_critical);
}

TEST_CASE("critical filter is a subset") {
    auto all = generate_atoms(4);
    auto crit = generate_atoms(4, {}, true);
    REQUIRE(crit.complete);
    CHECK(crit.members.size() <= all.members.size());
    auto forms = member_forms(all);
    for (const auto& m : crit.members) {
        CHECK(forms.contains(canonical_form(m.graph)));
        CHECK(m.edge_critical);
    }
    for (const auto& m : all.members)
        if (m.edge_critical) CHECK(member_forms(crit).contains(canonical_form(m.graph)));
}

TEST_CASE("starved generation is flagged") {
    SearchBudget tiny;
    tiny.max_nodes = 1;
    auto atoms = generate_atoms(4, tiny);
    CHECK_FALSE(atoms.complete);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(generate_atoms(0), std::invalid_argument);
    CHECK_THROWS_AS(generate_atoms(7), std::invalid_argument);
}
