#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grundy/vertex_set.hpp"

namespace grundy {

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    long edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }
    int max_degree() const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<VertexSet> adj_;
};

// ---- Families ----------------------------------------------------------

Graph stable_graph(int n);            // n isolated vertices
Graph complete_graph(int n);
Graph path_graph(int n);              // edges i -- i+1
Graph cycle_graph(int n);             // n >= 3
Graph complete_bipartite_graph(int n, int p);  // parts {0..n-1}, {n..n+p-1}

// Tree on 2^(k-1) vertices whose worst-case greedy coloring uses k colors.
// Built by doubling: two copies of the previous tree joined by an edge
// between their roots (vertex 0 and vertex 2^(k-2)).
Graph binomial_tree(int k);

// Named lookup: kind in {stable, complete, path, cycle, complete_bipartite,
// binomial_tree}; complete_bipartite takes two parameters, the rest one.
Graph make_family(const std::string& kind, const std::vector<int>& params);

// ---- Cartesian product -------------------------------------------------

// Bijection between product vertices and (i, j) pairs for g box h:
// vertex (i, j) is copy j of g's vertex i, equivalently copy i of h's
// vertex j, numbered i * h.n() + j.
class ProductCoords {
public:
    ProductCoords() = default;
    ProductCoords(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int index(int i, int j) const { return i * cols_ + j; }
    int row_of(int v) const { return v / cols_; }
    int col_of(int v) const { return v % cols_; }

    // Product vertices of the j-th copy of the first factor (column j),
    // in first-factor vertex order.
    std::vector<int> g_copy(int j) const;
    // Product vertices of the i-th copy of the second factor (row i).
    std::vector<int> h_copy(int i) const;

private:
    int rows_ = 0;
    int cols_ = 0;
};

// (i, j) ~ (i', j') iff i == i' and j ~_h j', or j == j' and i ~_g i'.
std::pair<Graph, ProductCoords> cartesian_product(const Graph& g, const Graph& h);

// ---- Derived graphs ----------------------------------------------------

Graph complement(const Graph& g);

// Subgraph induced on vs, renumbered 0..|vs|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, const VertexSet& vs);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

// Identify non-adjacent u and v. The merged vertex keeps u's slot, indices
// above v shift down by one; neighborhoods are unioned.
Graph merge_vertices(const Graph& g, int u, int v);

Graph remove_edge(const Graph& g, int u, int v);

// ---- Structure ---------------------------------------------------------

struct Bipartition {
    VertexSet left, right;
};

// Two-coloring by BFS, roots at the smallest unvisited index and placed in
// left. nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

// Connected components, each as a vertex set, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

// ---- Canonical form ----------------------------------------------------

// Label equal exactly for isomorphic graphs, via refinement plus
// individualization backtracking. Practical to a few dozen vertices.
std::string canonical_form(const Graph& g);

// Variant that also respects vertex colors: labels are equal exactly for
// color-preserving isomorphisms.
std::string canonical_form_colored(const Graph& g, const std::vector<int>& color);

}  // namespace grundy
