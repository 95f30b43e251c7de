#pragma once

#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

// Vertex colors, 1-based. 0 means unassigned.
struct Coloring {
    std::vector<int> colors;

    Coloring() = default;
    explicit Coloring(int n) : colors(static_cast<size_t>(n), 0) {}
    explicit Coloring(std::vector<int> c) : colors(std::move(c)) {}

    int n() const { return static_cast<int>(colors.size()); }
    int operator[](int v) const { return colors[static_cast<size_t>(v)]; }
    int& operator[](int v) { return colors[static_cast<size_t>(v)]; }
    bool assigned(int v) const { return colors[static_cast<size_t>(v)] > 0; }
    bool total() const;
    // Largest assigned color, 0 when nothing is assigned.
    int num_colors() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct VerificationReport {
    enum class Kind {
        conflict,  // adjacent vertices share a color
        missing,   // a smaller color absent from the vertex's neighborhood
    };
    struct Violation {
        int vertex = -1;
        int other = -1;  // clashing neighbor for conflicts, -1 for missing
        int color = 0;   // the shared color, or the absent smaller color
        Kind kind = Kind::conflict;
    };
    bool proper = false;
    bool grundy = false;
    std::vector<Violation> violations;
};

// Total colorings only (throws on a partial one). proper=true iff no
// monochromatic edge; every offending edge is listed. The grundy flag is
// only meaningful from is_grundy.
VerificationReport is_proper(const Graph& g, const Coloring& c);

// Total colorings only. grundy=true iff proper and every vertex colored i
// has, for each j < i, a neighbor colored j. All violations are enumerated.
VerificationReport is_grundy(const Graph& g, const Coloring& c);

// Allocation-light predicate form of is_grundy, for hot paths and asserts.
bool is_grundy_fast(const Graph& g, const Coloring& c);

// First-fit along the given vertex order (a permutation of 0..n-1): each
// vertex takes the smallest color absent from its already-colored neighbors.
Coloring greedy_color(const Graph& g, const std::vector<int>& order);

// Colors the unassigned vertices in ascending index order, each taking the
// smallest color absent from its colored neighbors. The assigned part must
// be conflict-free.
Coloring extend_proper(const Graph& g, const Coloring& partial);

}  // namespace grundy
