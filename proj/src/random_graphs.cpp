#include "grundy/random_graphs.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace grundy {

Graph random_graph(int n, int edge_percent, SplitMix64& rng) {
    if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_percent)) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph random_connected_graph(int n, int edge_percent, SplitMix64& rng) {
    for (int tries = 0; tries < 10000; ++tries) {
        Graph g = random_graph(n, edge_percent, rng);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("failed to sample a connected graph; raise the edge probability");
}

std::optional<Graph> random_regular_graph(int n, int k, SplitMix64& rng) {
    if (n < 1 || k < 0 || k >= n || (n * k) % 2 != 0) return std::nullopt;
    std::vector<int> stubs(static_cast<size_t>(n) * static_cast<size_t>(k));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < k; ++i) stubs[static_cast<size_t>(v * k + i)] = v;
    for (int attempt = 0; attempt < 200; ++attempt) {
        for (size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);
        std::vector<std::pair<int, int>> e;
        bool simple = true;
        std::vector<VertexSet> adj(static_cast<size_t>(n), VertexSet(n));
        for (size_t i = 0; simple && i < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || adj[static_cast<size_t>(u)].contains(v)) {
                simple = false;
                break;
            }
            adj[static_cast<size_t>(u)].add(v);
            adj[static_cast<size_t>(v)].add(u);
            e.emplace_back(u, v);
        }
        if (simple) return Graph(n, e);
    }
    return std::nullopt;
}

}  // namespace grundy
