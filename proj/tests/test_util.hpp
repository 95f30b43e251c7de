#pragma once

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace testutil {

// One representative per isomorphism class of graphs on n vertices.
// Feasible up to n = 5 (2^10 edge subsets).
inline std::vector<grundy::Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::set<std::string> seen;
    std::vector<grundy::Graph> out;
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> e;
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) e.push_back(slots[i]);
        grundy::Graph g(n, e);
        if (seen.insert(grundy::canonical_form(g)).second) out.push_back(std::move(g));
    }
    return out;
}

// One representative per isomorphism class of connected graphs, keyed by
// order, grown by attaching a new vertex to every nonempty subset of a
// smaller connected graph. Every connected graph has a non-cut vertex, so
// the augmentation reaches everything.
inline std::map<int, std::vector<grundy::Graph>> connected_graphs_up_to(int nmax) {
    std::map<int, std::vector<grundy::Graph>> by_n;
    by_n[1].push_back(grundy::stable_graph(1));
    for (int n = 2; n <= nmax; ++n) {
        std::set<std::string> seen;
        for (const grundy::Graph& g : by_n[n - 1]) {
            std::vector<std::pair<int, int>> base = g.edges();
            for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
                auto e = base;
                for (int v = 0; v < n - 1; ++v)
                    if (mask >> v & 1) e.emplace_back(v, n - 1);
                grundy::Graph cand(n, e);
                if (seen.insert(grundy::canonical_form(cand)).second)
                    by_n[n].push_back(std::move(cand));
            }
        }
    }
    return by_n;
}

// Relabels g by a permutation: vertex v of the output is perm[v] of g.
// Smallest color vector, in index order, among the colorings that reach
// `k` colors and pass the greedy check. Exhaustive: n and k stay tiny.
inline grundy::Coloring lex_least_witness(const grundy::Graph& g, int k) {
    const int n = g.n();
    std::vector<int> cur(static_cast<size_t>(n), 1);
    grundy::Coloring best;
    bool have = false;
    while (true) {
        grundy::Coloring c{std::vector<int>(cur)};
        if (c.num_colors() == k && grundy::is_grundy_fast(g, c) &&
            (!have || c.colors < best.colors)) {
            best = c;
            have = true;
        }
        int i = n - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == k) {
            cur[static_cast<size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
    }
    if (!have) throw std::logic_error("no witness at the requested color count");
    return best;
}

inline grundy::Graph relabel(const grundy::Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> e;
    std::vector<int> inverse(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inverse[static_cast<size_t>(perm[i])] = static_cast<int>(i);
    for (auto [u, v] : g.edges())
        e.emplace_back(inverse[static_cast<size_t>(u)], inverse[static_cast<size_t>(v)]);
    return grundy::Graph(g.n(), e);
}

}  // namespace testutil
