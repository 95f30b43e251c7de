#pragma once

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/solver.hpp"

#include <string>
#include <vector>

namespace grundy {

struct AtomMember {
    Graph graph;
    std::string label;
    Coloring witness;
    bool edge_critical = false;
};

// One successful merge step: parent and child identified by canonical label,
// (u, v) the merged pair in the parent's own vertex numbering.
struct MergeEvent {
    std::string parent;
    int u = 0;
    int v = 0;
    std::string child;
};

struct AtomSet {
    int k = 0;
    std::vector<AtomMember> members;
    std::vector<MergeEvent> trace;
    // false when some solver subcall ran out of budget and the set may be
    // missing members or critical flags
    bool complete = true;
};

// Grows the set of edge-minimal graphs with Grundy number k. Seeded by the
// binomial tree on 2^(k-1) vertices with its standard k-coloring, the search
// merges same-colored non-adjacent vertex pairs, keeps results whose
// inherited coloring is still a Grundy k-coloring and whose Grundy number is
// exactly k, and repeats from everything kept, deduplicating by canonical
// form. Members come back sorted by size then label; critical_only narrows
// them to the edge-critical ones.
AtomSet generate_atoms(int k, const SearchBudget& budget = {}, bool critical_only = false);

// True iff deleting any single edge drops the Grundy number below k.
// Verifies that g itself has Grundy number k first.
bool is_edge_critical(const Graph& g, int k, const SearchBudget& budget = {});

}  // namespace grundy
