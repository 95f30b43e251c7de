#include "grundy/atoms.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace grundy {

namespace {

Coloring seed_coloring(int k, const Graph& tree) {
    Coloring c(tree.n());
    c[0] = k;
    for (int v = 1; v < tree.n(); ++v)
        c[v] = std::countr_zero(static_cast<unsigned>(v)) + 1;
    return c;
}

std::pair<Graph, Coloring> merge_state(const Graph& g, const Coloring& c, int u, int v) {
    Graph h = merge_vertices(g, u, v);
    Coloring nc(h.n());
    for (int w = 0; w < h.n(); ++w) nc[w] = c[w < v ? w : w + 1];
    return {std::move(h), std::move(nc)};
}

}  // namespace

AtomSet generate_atoms(int k, const SearchBudget& budget, bool critical_only) {
    if (k < 1 || k > 6) throw std::invalid_argument("generate_atoms supports 1 <= k <= 6");
    AtomSet out;
    out.k = k;

    Graph seed = binomial_tree(k);
    Coloring sc = seed_coloring(k, seed);

    // States are deduplicated by colored canonical form so a known graph
    // reached with a genuinely different witness is still expanded; the
    // member list itself is deduplicated by plain canonical form.
    std::deque<std::pair<Graph, Coloring>> frontier;
    std::set<std::string> seen_states;
    std::set<std::string> emitted;

    auto emit = [&](const Graph& g, const std::string& label, const Coloring& w) {
        if (!emitted.insert(label).second) return false;
        out.members.push_back({g, label, w, false});
        return true;
    };

    seen_states.insert(canonical_form_colored(seed, sc.colors));
    emit(seed, canonical_form(seed), sc);
    frontier.emplace_back(std::move(seed), std::move(sc));

    while (!frontier.empty()) {
        auto [g, c] = std::move(frontier.front());
        frontier.pop_front();
        const std::string parent_label = canonical_form(g);
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v) {
                if (c[u] != c[v] || g.adjacent(u, v)) continue;
                auto [h, nc] = merge_state(g, c, u, v);
                if (nc.num_colors() != k || !is_grundy_fast(h, nc)) continue;
                WitnessResult above = grundy_witness(h, k + 1, budget);
                if (above.status == WitnessStatus::budget_exhausted) {
                    out.complete = false;
                    continue;
                }
                if (above.status == WitnessStatus::found) continue;
                if (!seen_states.insert(canonical_form_colored(h, nc.colors)).second) continue;
                std::string label = canonical_form(h);
                if (emit(h, label, nc))
                    out.trace.push_back({parent_label, u, v, std::move(label)});
                frontier.emplace_back(std::move(h), std::move(nc));
            }
    }

    std::sort(out.members.begin(), out.members.end(), [](const AtomMember& a, const AtomMember& b) {
        if (a.graph.n() != b.graph.n()) return a.graph.n() < b.graph.n();
        return a.label < b.label;
    });

    for (AtomMember& m : out.members) {
        try {
            m.edge_critical = is_edge_critical(m.graph, k, budget);
        } catch (const BudgetExhausted&) {
            out.complete = false;
        }
    }
    if (critical_only)
        std::erase_if(out.members, [](const AtomMember& m) { return !m.edge_critical; });
    return out;
}

bool is_edge_critical(const Graph& g, int k, const SearchBudget& budget) {
    GrundyResult own = grundy_exact(g, budget);
    if (!own.exact) throw BudgetExhausted("budget exhausted while confirming the Grundy number");
    if (own.value != k)
        throw std::invalid_argument("graph does not have the stated Grundy number");
    for (auto [u, v] : g.edges()) {
        WitnessResult still = grundy_witness(remove_edge(g, u, v), k, budget);
        if (still.status == WitnessStatus::budget_exhausted)
            throw BudgetExhausted("budget exhausted on an edge-deleted subinstance");
        if (still.status == WitnessStatus::found) return false;
    }
    return true;
}

}  // namespace grundy
