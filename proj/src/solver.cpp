#include "grundy/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <climits>
#include <numeric>

namespace grundy {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void shuffle_order(std::vector<int>& v, std::uint64_t& state) {
    for (size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[splitmix64(state) % i]);
}

struct Tracker {
    std::uint64_t max_nodes;
    double max_time;
    std::chrono::steady_clock::time_point start;
    std::uint64_t nodes = 0;
    bool dead = false;

    explicit Tracker(const SearchBudget& b)
        : max_nodes(b.max_nodes), max_time(b.max_time),
          start(std::chrono::steady_clock::now()) {
        if (b.max_nodes == 0 || !(b.max_time > 0) || b.threads < 1)
            throw std::invalid_argument("budget fields must be positive");
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    bool tick() {
        if (dead) return false;
        ++nodes;
        if (nodes > max_nodes) {
            dead = true;
            return false;
        }
        if ((nodes & 2047) == 0 && elapsed() > max_time) {
            dead = true;
            return false;
        }
        return true;
    }
};

// Searches for disjoint independent classes W_1..W_t where every vertex of
// W_j has a neighbor in each W_i below it; such a family exists exactly when
// some greedy order reaches t colors. One vertex is pinned to W_t up front
// and unmet lower-class requirements are settled one at a time, most
// constrained first.
struct DemandSearch {
    const Graph& g;
    int t;
    Tracker& trk;
    std::vector<int> cls;             // class per vertex, 0 = free
    std::vector<VertexSet> classes;   // 1..t
    std::vector<std::uint64_t> have;  // classes present in each vertex's neighborhood
    std::vector<int> assigned;

    DemandSearch(const Graph& graph, int target, Tracker& tracker)
        : g(graph), t(target), trk(tracker),
          cls(static_cast<size_t>(graph.n()), 0),
          classes(static_cast<size_t>(target) + 1, VertexSet(graph.n())),
          have(static_cast<size_t>(graph.n()), 0) {}

    void place(int v, int j) {
        cls[static_cast<size_t>(v)] = j;
        classes[static_cast<size_t>(j)].add(v);
        assigned.push_back(v);
        g.neighbors(v).for_each([&](int w) { have[static_cast<size_t>(w)] |= std::uint64_t{1} << j; });
    }

    void unplace(int v, int j) {
        cls[static_cast<size_t>(v)] = 0;
        classes[static_cast<size_t>(j)].remove(v);
        assigned.pop_back();
        g.neighbors(v).for_each([&](int w) {
            if (!g.neighbors(w).intersects(classes[static_cast<size_t>(j)]))
                have[static_cast<size_t>(w)] &= ~(std::uint64_t{1} << j);
        });
    }

    bool addable(int u, int j) const {
        return cls[static_cast<size_t>(u)] == 0 &&
               !g.neighbors(u).intersects(classes[static_cast<size_t>(j)]);
    }

    // 1 = family completed, 0 = subtree exhausted, -1 = budget
    int dfs() {
        int bv = -1, bj = -1, bcount = INT_MAX;
        for (int v : assigned) {
            for (int j = 1; j < cls[static_cast<size_t>(v)]; ++j) {
                if ((have[static_cast<size_t>(v)] >> j) & 1) continue;
                int count = 0;
                for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
                    if (addable(u, j)) ++count;
                if (count == 0) return 0;
                if (count < bcount) {
                    bcount = count;
                    bv = v;
                    bj = j;
                }
            }
        }
        if (bv < 0) return 1;
        for (int u = g.neighbors(bv).first(); u >= 0; u = g.neighbors(bv).next(u)) {
            if (!addable(u, bj)) continue;
            if (!trk.tick()) return -1;
            place(u, bj);
            int r = dfs();
            if (r == 1) return 1;
            unplace(u, bj);
            if (r == -1) return -1;
        }
        return 0;
    }

    Coloring extract() const {
        std::vector<int> order;
        order.reserve(static_cast<size_t>(g.n()));
        for (int j = 1; j <= t; ++j)
            classes[static_cast<size_t>(j)].for_each([&](int v) { order.push_back(v); });
        for (int v = 0; v < g.n(); ++v)
            if (cls[static_cast<size_t>(v)] == 0) order.push_back(v);
        Coloring c = greedy_color(g, order);
        assert(c.num_colors() >= t);
        return c;
    }
};

Coloring greedy_identity(const Graph& g) {
    std::vector<int> order(static_cast<size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    return greedy_color(g, order);
}

// Seeded first-fit probes; returns the best coloring seen, never fails.
Coloring greedy_probe(const Graph& g, int rounds, Tracker& trk,
                      int stop_at = INT_MAX) {
    Coloring best = greedy_identity(g);
    if (best.num_colors() >= stop_at) return best;
    std::vector<int> order(static_cast<size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::uint64_t state = 0x5eed0000ull + static_cast<std::uint64_t>(g.n()) * 977ull;
    for (int round = 0; round < rounds; ++round) {
        if (!trk.tick()) break;
        Coloring c = greedy_color(g, order);
        if (c.num_colors() > best.num_colors()) best = c;
        if (best.num_colors() >= stop_at) break;
        shuffle_order(order, state);
    }
    return best;
}

WitnessResult witness_search(const Graph& g, int target, int apex_pin, bool probe_first,
                             Tracker& trk) {
    WitnessResult res;
    bool any_apex = false;
    for (int v = 0; v < g.n(); ++v)
        if ((apex_pin < 0 || v == apex_pin) && g.degree(v) >= target - 1) {
            any_apex = true;
            break;
        }
    if (!any_apex) {
        res.status = WitnessStatus::absent;
        return res;
    }
    if (probe_first) {
        int rounds = 100 + 12 * g.n();
        Coloring c = greedy_probe(g, rounds, trk, target);
        if (c.num_colors() >= target) {
            res.status = WitnessStatus::found;
            res.coloring = std::move(c);
            return res;
        }
        if (trk.dead) {
            res.status = WitnessStatus::budget_exhausted;
            return res;
        }
    }
    for (int a = 0; a < g.n(); ++a) {
        if (apex_pin >= 0 && a != apex_pin) continue;
        if (g.degree(a) < target - 1) continue;
        DemandSearch search(g, target, trk);
        search.place(a, target);
        int r = search.dfs();
        if (r == 1) {
            res.status = WitnessStatus::found;
            res.coloring = search.extract();
            return res;
        }
        if (r == -1) {
            res.status = WitnessStatus::budget_exhausted;
            return res;
        }
    }
    res.status = WitnessStatus::absent;
    return res;
}

// Smallest color vector among greedy-reachable colorings of g with exactly k
// colors. Vertices are decided in index order; a vertex is re-checked once
// its whole neighborhood is decided.
Coloring lex_least_witness(const Graph& g, int k) {
    const int n = g.n();
    std::vector<std::vector<int>> ready(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
        int last = u;
        g.neighbors(u).for_each([&](int w) { last = std::max(last, w); });
        ready[static_cast<size_t>(last)].push_back(u);
    }
    Coloring c(n);
    auto complete_at = [&](int u) {
        std::uint64_t seen = 0;
        g.neighbors(u).for_each([&](int w) { seen |= std::uint64_t{1} << c[w]; });
        for (int j = 1; j < c[u]; ++j)
            if (!((seen >> j) & 1)) return false;
        return true;
    };
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return c.num_colors() == k;
        for (int col = 1; col <= k; ++col) {
            bool clash = false;
            g.neighbors(v).for_each([&](int w) {
                if (c[w] == col) clash = true;
            });
            if (clash) continue;
            c[v] = col;
            bool ok = true;
            for (int u : ready[static_cast<size_t>(v)])
                if (!complete_at(u)) {
                    ok = false;
                    break;
                }
            if (ok && self(self, v + 1)) return true;
            c[v] = 0;
        }
        return false;
    };
    bool found = rec(rec, 0);
    assert(found);
    (void)found;
    assert(is_grundy_fast(g, c));
    return c;
}

struct ConnectedResult {
    int value = 0;
    Coloring witness;
    bool exact = false;
};

ConnectedResult solve_connected(const Graph& g, Tracker& trk) {
    ConnectedResult out;
    int ub = g.max_degree() + 1;
    if (g.n() <= 40) ub = std::min(ub, g.n() + 1 - independence_number(g));
    out.witness = greedy_probe(g, 32 + 4 * g.n(), trk, ub);
    int lb = out.witness.num_colors();
    while (lb < ub) {
        WitnessResult r = witness_search(g, lb + 1, -1, false, trk);
        if (r.status == WitnessStatus::found) {
            out.witness = std::move(r.coloring);
            lb = out.witness.num_colors();
        } else if (r.status == WitnessStatus::absent) {
            ub = lb;
        } else {
            out.value = lb;
            out.exact = false;
            return out;
        }
    }
    out.value = lb;
    out.exact = true;
    return out;
}

}  // namespace

GrundyResult grundy_exact(const Graph& g, const SearchBudget& budget) {
    if (g.n() < 1) throw std::invalid_argument("graph must be nonempty");
    Tracker trk(budget);
    GrundyResult res;
    res.exact = true;
    res.witness = Coloring(g.n());
    auto comps = components(g);
    for (const auto& comp : comps) {
        ConnectedResult sub;
        std::vector<int> back;
        if (comps.size() == 1) {
            sub = solve_connected(g, trk);
            back.resize(static_cast<size_t>(g.n()));
            std::iota(back.begin(), back.end(), 0);
        } else {
            back = comp.to_vector();
            sub = solve_connected(induced_subgraph(g, comp), trk);
        }
        for (size_t i = 0; i < back.size(); ++i)
            res.witness[back[i]] = sub.witness[static_cast<int>(i)];
        res.value = std::max(res.value, sub.value);
        res.exact = res.exact && sub.exact;
    }
    if (res.exact && g.n() <= 9) res.witness = lex_least_witness(g, res.value);
    assert(is_grundy_fast(g, res.witness));
    res.stats.nodes = trk.nodes;
    res.stats.seconds = trk.elapsed();
    return res;
}

WitnessResult grundy_witness(const Graph& g, int target, const SearchBudget& budget) {
    if (g.n() < 1) throw std::invalid_argument("graph must be nonempty");
    if (target < 1) throw std::invalid_argument("target must be at least 1");
    if (target > 63) throw std::invalid_argument("target above supported range");
    Tracker trk(budget);
    WitnessResult res = witness_search(g, target, -1, true, trk);
    res.stats.nodes = trk.nodes;
    res.stats.seconds = trk.elapsed();
    return res;
}

WitnessResult grundy_witness_rooted(const Graph& g, int target, int apex,
                                    const SearchBudget& budget) {
    if (g.n() < 1) throw std::invalid_argument("graph must be nonempty");
    if (target < 1) throw std::invalid_argument("target must be at least 1");
    if (target > 63) throw std::invalid_argument("target above supported range");
    if (apex < 0 || apex >= g.n()) throw std::invalid_argument("apex out of range");
    Tracker trk(budget);
    WitnessResult res = witness_search(g, target, apex, false, trk);
    res.stats.nodes = trk.nodes;
    res.stats.seconds = trk.elapsed();
    return res;
}

namespace {

struct AlphaSearch {
    const Graph& g;
    int best = 0;

    void dfs(VertexSet p, int cur) {
        for (;;) {
            int cnt = p.count();
            if (cur + cnt <= best) return;
            if (cnt == 0) {
                best = std::max(best, cur);
                return;
            }
            int vmin = -1, dmin = INT_MAX, vmax = -1, dmax = -1;
            p.for_each([&](int v) {
                VertexSet nb = g.neighbors(v);
                nb &= p;
                int d = nb.count();
                if (d < dmin) {
                    dmin = d;
                    vmin = v;
                }
                if (d > dmax) {
                    dmax = d;
                    vmax = v;
                }
            });
            if (dmin <= 1) {
                // a vertex of degree 0 or 1 sits in some maximum independent set
                p.remove(vmin);
                p.subtract(g.neighbors(vmin));
                ++cur;
                continue;
            }
            VertexSet inc = p;
            inc.remove(vmax);
            inc.subtract(g.neighbors(vmax));
            dfs(inc, cur + 1);
            p.remove(vmax);
        }
    }
};

}  // namespace

int independence_number(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("graph must be nonempty");
    if (g.n() > 128) throw std::invalid_argument("independence number supported up to 128 vertices");
    AlphaSearch s{g};
    VertexSet all(g.n());
    all.fill();
    s.dfs(all, 0);
    return s.best;
}

BoundsReport upper_bounds(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("graph must be nonempty");
    BoundsReport rep;
    rep.delta_plus_one = g.max_degree() + 1;
    if (g.n() <= 40 && is_connected(g))
        rep.stability_bound = g.n() + 1 - independence_number(g);
    return rep;
}

int grundy_oracle(const Graph& g) {
    if (g.n() < 1 || g.n() > 9)
        throw std::invalid_argument("oracle supports 1 to 9 vertices");
    const int n = g.n();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> col(static_cast<size_t>(n));
    int best = 0;
    do {
        std::fill(col.begin(), col.end(), 0);
        int top = 0;
        for (int v : order) {
            unsigned used = 0;
            g.neighbors(v).for_each([&](int w) { used |= 1u << col[static_cast<size_t>(w)]; });
            int c = 1;
            while ((used >> c) & 1) ++c;
            col[static_cast<size_t>(v)] = c;
            top = std::max(top, c);
        }
        best = std::max(best, top);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

NgReport ng_check(const Graph& g, const SearchBudget& budget) {
    if (g.n() < 1) throw std::invalid_argument("graph must be nonempty");
    NgReport rep;
    rep.n = g.n();
    GrundyResult rg = grundy_exact(g, budget);
    if (!rg.exact) throw BudgetExhausted("graph value not settled within budget");
    Graph co = complement(g);
    GrundyResult rc = grundy_exact(co, budget);
    if (!rc.exact) throw BudgetExhausted("complement value not settled within budget");
    rep.gamma = rg.value;
    rep.gamma_complement = rc.value;
    rep.sum = rep.gamma + rep.gamma_complement;
    rep.bound_holds = rep.sum <= rep.n + 1;

    int d0 = g.degree(0);
    rep.regular_condition = d0 >= 1;
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) != d0) rep.regular_condition = false;

    auto attainers = [&](const Graph& h, int gamma) {
        std::vector<int> out;
        for (int v = 0; v < h.n(); ++v) {
            WitnessResult r = grundy_witness_rooted(h, gamma, v, budget);
            if (r.status == WitnessStatus::budget_exhausted)
                throw BudgetExhausted("attainment scan not settled within budget");
            if (r.status == WitnessStatus::found) out.push_back(v);
        }
        return out;
    };
    rep.attaining = attainers(g, rep.gamma);
    rep.attaining_complement = attainers(co, rep.gamma_complement);

    int min_a = INT_MAX, max_b = INT_MIN;
    for (int v : rep.attaining) min_a = std::min(min_a, g.degree(v));
    for (int v : rep.attaining_complement) max_b = std::max(max_b, g.degree(v));
    rep.degree_condition = !rep.attaining.empty() && !rep.attaining_complement.empty() &&
                           min_a <= max_b;
    for (int v : rep.attaining) {
        if (std::find(rep.attaining_complement.begin(), rep.attaining_complement.end(), v) !=
            rep.attaining_complement.end()) {
            rep.attain_condition = true;
            break;
        }
    }
    return rep;
}

}  // namespace grundy
