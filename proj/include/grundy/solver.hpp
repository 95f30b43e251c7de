#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"

namespace grundy {

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    double max_time = 300.0;  // seconds
    // Accepted for interface stability; searches run sequentially so the
    // reported value never depends on it.
    int threads = 1;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

enum class WitnessStatus { found, absent, budget_exhausted };

struct WitnessResult {
    WitnessStatus status = WitnessStatus::budget_exhausted;
    Coloring coloring;  // meaningful only when status == found
    SearchStats stats;
};

struct GrundyResult {
    int value = 0;
    Coloring witness;
    bool exact = false;
    SearchStats stats;
};

struct BoundsReport {
    int delta_plus_one = 0;              // max degree + 1
    std::optional<int> stability_bound;  // n + 1 - independence number, connected input only
    int best() const {
        return stability_bound && *stability_bound < delta_plus_one ? *stability_bound
                                                                    : delta_plus_one;
    }
};

struct NgReport {
    int n = 0;
    int gamma = 0;
    int gamma_complement = 0;
    int sum = 0;
    bool bound_holds = false;        // sum <= n + 1
    bool regular_condition = false;  // graph is k-regular for some k >= 1
    bool degree_condition = false;   // min degree over A <= max degree over B
    bool attain_condition = false;   // A and B intersect
    std::vector<int> attaining;             // A: vertices taking the top color in some
                                            // optimal coloring of the graph
    std::vector<int> attaining_complement;  // B: same for the complement
};

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest k admitting a greedy coloring with k colors. Exact when the flag
// says so; otherwise value is the best certified lower bound found within
// budget. The witness is always a verified greedy-reachable coloring whose
// color count equals value.
GrundyResult grundy_exact(const Graph& g, const SearchBudget& budget = {});

// Searches for a greedy coloring reaching at least `target` colors. `absent`
// is a proof that none exists; `budget_exhausted` says nothing either way.
WitnessResult grundy_witness(const Graph& g, int target, const SearchBudget& budget = {});

// Same, but the vertex taking color `target` is pinned to `apex`.
WitnessResult grundy_witness_rooted(const Graph& g, int target, int apex,
                                    const SearchBudget& budget = {});

// Exact maximum independent set size by branch and bound.
int independence_number(const Graph& g);

BoundsReport upper_bounds(const Graph& g);

// Max first-fit colors over every one of the n! vertex orders, with its own
// inline first-fit. Deliberately brute force; n <= 9.
int grundy_oracle(const Graph& g);

// Evaluates the additive bound gamma(G) + gamma(co-G) <= n + 1 together with
// the three sufficient conditions under which it is claimed. Throws
// BudgetExhausted if any sub-solve comes back inexact.
NgReport ng_check(const Graph& g, const SearchBudget& budget = {});

}  // namespace grundy
