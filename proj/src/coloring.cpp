#include "grundy/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace grundy {

bool Coloring::total() const {
    return std::all_of(colors.begin(), colors.end(), [](int c) { return c > 0; });
}

int Coloring::num_colors() const {
    int m = 0;
    for (int c : colors) m = std::max(m, c);
    return m;
}

static void check_shape(const Graph& g, const Coloring& c) {
    if (c.n() != g.n()) throw std::invalid_argument("coloring size must match graph order");
    for (int v = 0; v < c.n(); ++v)
        if (c[v] < 0) throw std::invalid_argument("colors must be non-negative");
}

static void collect_conflicts(const Graph& g, const Coloring& c, VerificationReport& rep) {
    for (auto [u, v] : g.edges())
        if (c.assigned(u) && c.assigned(v) && c[u] == c[v])
            rep.violations.push_back({u, v, c[u], VerificationReport::Kind::conflict});
}

VerificationReport is_proper(const Graph& g, const Coloring& c) {
    check_shape(g, c);
    if (!c.total()) throw std::invalid_argument("is_proper expects a total coloring");
    VerificationReport rep;
    collect_conflicts(g, c, rep);
    rep.proper = rep.violations.empty();
    rep.grundy = false;
    return rep;
}

VerificationReport is_grundy(const Graph& g, const Coloring& c) {
    VerificationReport rep = is_proper(g, c);
    for (int v = 0; v < g.n(); ++v) {
        std::vector<char> seen(static_cast<size_t>(c[v]) + 1, 0);
        g.neighbors(v).for_each([&](int w) {
            if (c[w] < c[v]) seen[static_cast<size_t>(c[w])] = 1;
        });
        for (int j = 1; j < c[v]; ++j)
            if (!seen[static_cast<size_t>(j)])
                rep.violations.push_back({v, -1, j, VerificationReport::Kind::missing});
    }
    rep.grundy = rep.violations.empty();
    return rep;
}

bool is_grundy_fast(const Graph& g, const Coloring& c) {
    if (c.n() != g.n()) return false;
    int top = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (c[v] <= 0) return false;
        top = std::max(top, c[v]);
    }
    std::vector<char> seen(static_cast<size_t>(top) + 1, 0);
    for (int v = 0; v < g.n(); ++v) {
        std::fill(seen.begin(), seen.begin() + c[v] + 1, 0);
        bool ok = true;
        g.neighbors(v).for_each([&](int w) {
            if (c[w] == c[v]) ok = false;
            if (c[w] < c[v]) seen[static_cast<size_t>(c[w])] = 1;
        });
        if (!ok) return false;
        for (int j = 1; j < c[v]; ++j)
            if (!seen[static_cast<size_t>(j)]) return false;
    }
    return true;
}

Coloring greedy_color(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n())
        throw std::invalid_argument("order must list every vertex exactly once");
    std::vector<char> present(order.size(), 0);
    for (int v : order) {
        if (v < 0 || v >= g.n() || present[static_cast<size_t>(v)])
            throw std::invalid_argument("order must be a permutation of the vertices");
        present[static_cast<size_t>(v)] = 1;
    }
    Coloring c(g.n());
    std::vector<char> used(static_cast<size_t>(g.n()) + 2, 0);
    for (int v : order) {
        int top = 0;
        g.neighbors(v).for_each([&](int w) {
            if (c[w] > 0) {
                used[static_cast<size_t>(c[w])] = 1;
                top = std::max(top, c[w]);
            }
        });
        int col = 1;
        while (used[static_cast<size_t>(col)]) ++col;
        c[v] = col;
        std::fill(used.begin(), used.begin() + top + 1, 0);
    }
    assert(is_grundy_fast(g, c));
    return c;
}

Coloring extend_proper(const Graph& g, const Coloring& partial) {
    check_shape(g, partial);
    VerificationReport conflicts;
    collect_conflicts(g, partial, conflicts);
    if (!conflicts.violations.empty())
        throw std::invalid_argument("partial coloring has a conflict");
    Coloring c = partial;
    std::vector<char> used(static_cast<size_t>(g.n()) + 2 + static_cast<size_t>(c.num_colors()), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (c.assigned(v)) continue;
        int top = 0;
        g.neighbors(v).for_each([&](int w) {
            if (c[w] > 0) {
                used[static_cast<size_t>(c[w])] = 1;
                top = std::max(top, c[w]);
            }
        });
        int col = 1;
        while (used[static_cast<size_t>(col)]) ++col;
        c[v] = col;
        std::fill(used.begin(), used.begin() + top + 1, 0);
    }
    assert(c.total());
    return c;
}

}  // namespace grundy
