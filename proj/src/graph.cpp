#include "grundy/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grundy {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    adj_.assign(static_cast<size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj_[static_cast<size_t>(u)].add(v);
        adj_[static_cast<size_t>(v)].add(u);
    }
    for (int v = 0; v < n; ++v) m_ += degree(v);
    m_ /= 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[static_cast<size_t>(u)].next(u); v >= 0;
             v = adj_[static_cast<size_t>(u)].next(v))
            out.emplace_back(u, v);
    return out;
}

// ---- Families ----------------------------------------------------------

Graph stable_graph(int n) {
    if (n < 1) throw std::invalid_argument("stable graph needs n >= 1");
    return Graph(n, {});
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

Graph complete_bipartite_graph(int n, int p) {
    if (n < 1 || p < 1) throw std::invalid_argument("complete bipartite needs both parts >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < p; ++v) e.emplace_back(u, n + v);
    return Graph(n + p, e);
}

Graph binomial_tree(int k) {
    if (k < 1) throw std::invalid_argument("binomial tree needs k >= 1");
    if (k > 20) throw std::invalid_argument("binomial tree parameter too large");
    int n = 1 << (k - 1);
    std::vector<std::pair<int, int>> e;
    // Doubling: copy t joins its root 2^(t-1) to vertex 0, so each nonzero
    // vertex hangs off itself with the lowest set bit cleared.
    for (int v = 1; v < n; ++v) e.emplace_back(v & (v - 1), v);
    return Graph(n, e);
}

Graph make_family(const std::string& kind, const std::vector<int>& params) {
    auto need = [&](size_t c) {
        if (params.size() != c)
            throw std::invalid_argument("family " + kind + " expects " +
                                        std::to_string(c) + " parameter(s)");
    };
    if (kind == "stable") { need(1); return stable_graph(params[0]); }
    if (kind == "complete") { need(1); return complete_graph(params[0]); }
    if (kind == "path") { need(1); return path_graph(params[0]); }
    if (kind == "cycle") { need(1); return cycle_graph(params[0]); }
    if (kind == "complete_bipartite") { need(2); return complete_bipartite_graph(params[0], params[1]); }
    if (kind == "binomial_tree") { need(1); return binomial_tree(params[0]); }
    throw std::invalid_argument("unknown family: " + kind);
}

// ---- Cartesian product -------------------------------------------------

std::vector<int> ProductCoords::g_copy(int j) const {
    if (j < 0 || j >= cols_) throw std::invalid_argument("copy index out of range");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out.push_back(index(i, j));
    return out;
}

std::vector<int> ProductCoords::h_copy(int i) const {
    if (i < 0 || i >= rows_) throw std::invalid_argument("copy index out of range");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out.push_back(index(i, j));
    return out;
}

std::pair<Graph, ProductCoords> cartesian_product(const Graph& g, const Graph& h) {
    if (g.n() < 1 || h.n() < 1) throw std::invalid_argument("product factors must be nonempty");
    ProductCoords coords(g.n(), h.n());
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < g.n(); ++i)
        for (auto [a, b] : h.edges()) e.emplace_back(coords.index(i, a), coords.index(i, b));
    for (int j = 0; j < h.n(); ++j)
        for (auto [a, b] : g.edges()) e.emplace_back(coords.index(a, j), coords.index(b, j));
    return {Graph(g.n() * h.n(), e), coords};
}

// ---- Derived graphs ----------------------------------------------------

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph(g.n(), e);
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
    std::vector<int> keep = vs.to_vector();
    std::vector<int> newid(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= g.n()) throw std::invalid_argument("vertex out of range");
        newid[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> e;
    for (int u : keep)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
            if (newid[static_cast<size_t>(v)] >= 0)
                e.emplace_back(newid[static_cast<size_t>(u)], newid[static_cast<size_t>(v)]);
    return Graph(static_cast<int>(keep.size()), e);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    VertexSet set(g.n());
    for (int v : vs) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range");
        if (set.contains(v)) throw std::invalid_argument("duplicate vertex in subset");
        set.add(v);
    }
    return induced_subgraph(g, set);
}

Graph merge_vertices(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n() || u == v)
        throw std::invalid_argument("merge needs two distinct vertices in range");
    if (g.adjacent(u, v)) throw std::invalid_argument("cannot merge adjacent vertices");
    if (u > v) std::swap(u, v);
    auto newid = [&](int x) { return x < v ? x : x - 1; };
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges()) {
        int aa = (a == v) ? u : a;
        int bb = (b == v) ? u : b;
        e.emplace_back(newid(aa), newid(bb));
    }
    return Graph(g.n() - 1, e);
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
        throw std::invalid_argument("vertex out of range");
    if (!g.adjacent(u, v)) throw std::invalid_argument("edge not present");
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges())
        if (!(a == u && b == v)) e.emplace_back(a, b);
    return Graph(g.n(), e);
}

// ---- Structure ---------------------------------------------------------

std::optional<Bipartition> bipartition(const Graph& g) {
    Bipartition bip{VertexSet(g.n()), VertexSet(g.n())};
    std::vector<int> side(static_cast<size_t>(g.n()), -1);
    std::vector<int> queue;
    for (int r = 0; r < g.n(); ++r) {
        if (side[static_cast<size_t>(r)] >= 0) continue;
        side[static_cast<size_t>(r)] = 0;
        queue.assign(1, r);
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            bool found_conflict = false;
            g.neighbors(x).for_each([&](int y) {
                if (side[static_cast<size_t>(y)] < 0) {
                    side[static_cast<size_t>(y)] = 1 - side[static_cast<size_t>(x)];
                    queue.push_back(y);
                } else if (side[static_cast<size_t>(y)] == side[static_cast<size_t>(x)]) {
                    found_conflict = true;
                }
            });
            if (found_conflict) return std::nullopt;
        }
    }
    for (int v = 0; v < g.n(); ++v)
        (side[static_cast<size_t>(v)] == 0 ? bip.left : bip.right).add(v);
    return bip;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen(g.n());
    for (int r = 0; r < g.n(); ++r) {
        if (seen.contains(r)) continue;
        VertexSet comp(g.n());
        std::vector<int> stack{r};
        seen.add(r);
        comp.add(r);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            g.neighbors(x).for_each([&](int y) {
                if (!seen.contains(y)) {
                    seen.add(y);
                    comp.add(y);
                    stack.push_back(y);
                }
            });
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

// ---- Canonical form ----------------------------------------------------

namespace {

// Split every cell by the vector of neighbor counts into the current cells,
// until no cell splits. Sub-cells are ordered by signature, which keeps the
// outcome independent of the input labeling.
void refine_partition(const Graph& g, std::vector<std::vector<int>>& cells) {
    const int n = g.n();
    for (;;) {
        std::vector<int> cell_of(static_cast<size_t>(n), 0);
        for (size_t ci = 0; ci < cells.size(); ++ci)
            for (int v : cells[ci]) cell_of[static_cast<size_t>(v)] = static_cast<int>(ci);
        std::vector<std::vector<int>> next;
        bool split = false;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                g.neighbors(v).for_each([&](int w) { ++sig[static_cast<size_t>(cell_of[static_cast<size_t>(w)])]; });
                keyed.emplace_back(std::move(sig), v);
            }
            std::sort(keyed.begin(), keyed.end());
            size_t i = 0;
            while (i < keyed.size()) {
                size_t j = i;
                std::vector<int> group;
                while (j < keyed.size() && keyed[j].first == keyed[i].first)
                    group.push_back(keyed[j++].second);
                std::sort(group.begin(), group.end());
                if (group.size() != cell.size()) split = true;
                next.push_back(std::move(group));
                i = j;
            }
        }
        cells = std::move(next);
        if (!split) return;
    }
}

// True when every permutation within each cell is an automorphism: each cell
// induces a complete or empty subgraph and its members share one neighbor set
// outside the cell. Lets the search close whole subtrees at once, which is
// what keeps highly symmetric graphs (stable sets, cliques, bipartite blocks)
// cheap.
bool cells_homogeneous(const Graph& g, const std::vector<std::vector<int>>& cells) {
    for (const auto& cell : cells) {
        if (cell.size() == 1) continue;
        VertexSet members(g.n());
        for (int v : cell) members.add(v);
        VertexSet ref(g.n());
        bool first = true;
        for (int v : cell) {
            VertexSet outside = g.neighbors(v);
            outside.subtract(members);
            VertexSet inside = g.neighbors(v);
            inside &= members;
            int want = inside.count();
            if (want != 0 && want != static_cast<int>(cell.size()) - 1) return false;
            if (first) {
                ref = outside;
                first = false;
            } else if (!(ref == outside)) {
                return false;
            }
        }
    }
    return true;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::uint64_t> best_bits;
    std::vector<int> best_lab;
    bool have_best = false;
    std::vector<int> orbit;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n()), orbit(static_cast<size_t>(graph.n())) {
        for (int v = 0; v < n; ++v) orbit[static_cast<size_t>(v)] = v;
    }

    int find(int x) {
        while (orbit[static_cast<size_t>(x)] != x)
            x = orbit[static_cast<size_t>(x)] = orbit[static_cast<size_t>(orbit[static_cast<size_t>(x)])];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) orbit[static_cast<size_t>(a)] = b;
    }

    std::vector<std::uint64_t> bits_for(const std::vector<int>& lab) const {
        int nbits = n * (n - 1) / 2;
        std::vector<std::uint64_t> bits(static_cast<size_t>((nbits + 63) / 64), 0);
        int k = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q, ++k)
                if (g.adjacent(lab[static_cast<size_t>(p)], lab[static_cast<size_t>(q)]))
                    bits[static_cast<size_t>(k) >> 6] |= std::uint64_t{1} << (k & 63);
        return bits;
    }

    void leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> lab;
        lab.reserve(static_cast<size_t>(n));
        for (const auto& cell : cells)
            for (int v : cell) lab.push_back(v);
        auto bits = bits_for(lab);
        if (!have_best || bits < best_bits) {
            best_bits = std::move(bits);
            best_lab = lab;
            have_best = true;
        } else if (bits == best_bits) {
            for (int p = 0; p < n; ++p) unite(best_lab[static_cast<size_t>(p)], lab[static_cast<size_t>(p)]);
        }
        for (const auto& cell : cells)
            for (size_t i = 1; i < cell.size(); ++i) unite(cell[0], cell[i]);
    }

    void dfs(std::vector<std::vector<int>> cells, bool root) {
        refine_partition(g, cells);
        size_t target = cells.size();
        for (size_t ci = 0; ci < cells.size(); ++ci)
            if (cells[ci].size() > 1) {
                target = ci;
                break;
            }
        if (target == cells.size() || cells_homogeneous(g, cells)) {
            leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            if (root) {
                bool skip = false;
                for (int u : tried)
                    if (find(u) == find(v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
                tried.push_back(v);
            }
            auto child = cells;
            std::vector<int> rest;
            for (int u : cells[target])
                if (u != v) rest.push_back(u);
            child[target] = {v};
            child.insert(child.begin() + static_cast<long>(target) + 1, std::move(rest));
            dfs(std::move(child), false);
        }
    }
};

std::string hex_bits(const std::vector<std::uint64_t>& bits) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bits.size() * 16);
    for (std::uint64_t w : bits)
        for (int shift = 60; shift >= 0; shift -= 4)
            out.push_back(digits[(w >> shift) & 15]);
    return out;
}

std::string canonical_label(const Graph& g, const std::vector<std::vector<int>>& initial,
                            const std::vector<int>* color) {
    if (g.n() > 64)
        throw std::invalid_argument("canonical form supported up to 64 vertices");
    CanonSearch search(g);
    search.dfs(initial, true);
    std::ostringstream out;
    out << g.n() << ":";
    if (color) {
        for (size_t p = 0; p < search.best_lab.size(); ++p) {
            if (p) out << ",";
            out << (*color)[static_cast<size_t>(search.best_lab[p])];
        }
        out << ":";
    }
    out << hex_bits(search.best_bits);
    return out.str();
}

}  // namespace

std::string canonical_form(const Graph& g) {
    if (g.n() == 0) return "0:";
    std::vector<int> all(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) all[static_cast<size_t>(v)] = v;
    return canonical_label(g, {all}, nullptr);
}

std::string canonical_form_colored(const Graph& g, const std::vector<int>& color) {
    if (static_cast<int>(color.size()) != g.n())
        throw std::invalid_argument("color vector size must match graph order");
    if (g.n() == 0) return "0:";
    std::vector<int> order(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (color[static_cast<size_t>(a)] != color[static_cast<size_t>(b)])
            return color[static_cast<size_t>(a)] < color[static_cast<size_t>(b)];
        return a < b;
    });
    std::vector<std::vector<int>> cells;
    size_t i = 0;
    while (i < order.size()) {
        size_t j = i;
        std::vector<int> cell;
        while (j < order.size() &&
               color[static_cast<size_t>(order[j])] == color[static_cast<size_t>(order[i])])
            cell.push_back(order[j++]);
        cells.push_back(std::move(cell));
        i = j;
    }
    return canonical_label(g, cells, &color);
}

}  // namespace grundy
