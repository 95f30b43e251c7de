#pragma once

#include <string>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/solver.hpp"

namespace grundy {

// Second factor of a product construction.
struct PathOrCycle {
    bool cycle = false;
    int length = 0;
};

// Result of a certified product construction. `coloring` lives on `product`;
// `verified` means it passed is_grundy with at least `claimed_lower_bound`
// colors. An unverified outcome always says why in `note`; `inconclusive`
// marks a budget-limited witness search, not a refuted claim.
struct ConstructionOutcome {
    Graph product;
    ProductCoords coords;
    Coloring coloring;
    int colors_used = 0;
    int claimed_lower_bound = 0;
    int upper_bound = 0;  // max degree of the product + 1
    bool verified = false;
    bool inconclusive = false;
    bool exact = false;  // verified and colors_used == upper_bound
    std::string note;
};

// First factor bipartite: copy 1 carries the witness shifted by 2, copies 0
// and 2 carry a 1/2 pattern by side, the rest is extended. Certifies two
// extra colors over the witness.
ConstructionOutcome bipartite_times_path_or_cycle(const Graph& g, const Bipartition& bip,
                                                  const Coloring& witness, PathOrCycle second);

// First factor non-bipartite with a top-color vertex x_p: copies 0..2 carry
// shifted/punched variants of the witness around x_p's images. Certifies one
// extra color.
ConstructionOutcome nonbipartite_times_path_or_cycle(const Graph& g, const Coloring& witness,
                                                     PathOrCycle second);

// K_p times a bipartite graph: copy 0 carries the witness shifted by p-1,
// the other copies a cyclic 1..p-1 pattern by side. Certifies witness+p-1
// colors against the p+max-degree upper bound.
ConstructionOutcome complete_times_bipartite(int p, const Graph& g, const Bipartition& bip,
                                             const Coloring& witness);

// K_n times an arbitrary graph, case split on the witness color count k:
// k <= n-1 shifts the witness onto copy 0 and cycles the rest (claims
// n+k-1); n <= k <= 2n-3 stacks colors 2n-2..n down the K_n copy at a
// top-color vertex and cycles 1..n-1 down its witness neighbors (claims
// 2n-2); k >= 2n-2 plants the witness on copy 0 (claims k). On verification
// failure falls back to a budgeted witness search for the claim.
ConstructionOutcome complete_times_any(int n, const Graph& g, const Coloring& witness,
                                       const SearchBudget& budget = {});

// Product of k >= 2 paths, all lengths >= 3 and one > 3: chained
// bipartite_times_path_or_cycle from a 3-color witness on the longest path.
// Claims and certifies 2k+1 = max degree + 1.
ConstructionOutcome mesh_coloring(const std::vector<int>& dims);

// Product of k >= 2 even cycles (lengths >= 4): 2-D base settled by witness
// search, then the cycle branch of the bipartite chain. Certifies 2k+1.
ConstructionOutcome even_torus_coloring(const std::vector<int>& dims,
                                        const SearchBudget& budget = {});

// Product C_3 x C_5 x ... x C_{2k+1}: witness search for 2k+1 colors under
// budget against the matching max-degree+1 upper bound. Budget exhaustion
// yields an inconclusive outcome carrying the best coloring found.
ConstructionOutcome odd_torus_value(const std::vector<int>& dims,
                                    const SearchBudget& budget = {});

enum class GridKind { grid, cylinder, torus };

// Closed-form value for products of two paths (grid), path and cycle
// (cylinder), or two cycles (torus). Throws on inputs outside the stated
// domain: grid n,m >= 2 without (2,2); cylinder path >= 2, cycle >= 3;
// torus n,m >= 3.
int grid_family_value(GridKind kind, int n, int m);

// Triangle with n1, n2, n3 pendant leaves and explicit colorings of the
// graph and its complement whose color counts sum to n+2.
struct NgCounterexample {
    Graph graph;
    Coloring coloring;             // on graph, 4 colors
    Coloring complement_coloring;  // on complement(graph), n-2 colors
    int sum = 0;                   // combined color count, = n+2
};
NgCounterexample ng_counterexample(int n1, int n2, int n3);

}  // namespace grundy
