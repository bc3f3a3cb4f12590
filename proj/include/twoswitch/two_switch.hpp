#pragma once

#include <vector>

#include "twoswitch/graph.hpp"

namespace twoswitch {

/// Action matrix (a b / c d): removes edges ab and cd, adds ac and bd, when
/// ab,cd are present and disjoint and ac,bd absent; identity otherwise.
/// Row swaps and simultaneous column swaps give the same function, so the
/// canonical form is the least of the four equivalent tuples. The transpose
/// (a c / b d) is the inverse, a different function.
struct TwoSwitch {
    int a, b, c, d;

    TwoSwitch(int a_, int b_, int c_, int d_);

    TwoSwitch canonical() const;
    TwoSwitch inverse() const { return TwoSwitch(a, c, b, d); }

    friend bool operator==(const TwoSwitch& x, const TwoSwitch& y);
    friend bool operator<(const TwoSwitch& x, const TwoSwitch& y);
};

bool is_active(const TwoSwitch& t, const Graph& g);
/// Rewired graph when t is active in g; g itself otherwise.
Graph apply(const TwoSwitch& t, const Graph& g);

/// All active 2-switches in canonical form, sorted. Length equals deg(g).
std::vector<TwoSwitch> enumerate_active_switches(const Graph& g);
/// Number of active 2-switches, i.e. g's degree in the realization graph.
long long two_switch_degree(const Graph& g);

struct ActivityReport {
    std::vector<int> active_vertices;
    std::vector<int> inactive_vertices;
};

/// Active vertices: those appearing in some active 2-switch, equivalently
/// those lying in an induced P4, C4 or 2K2.
ActivityReport active_vertices(const Graph& g);
bool is_active_graph(const Graph& g); // every vertex active (true for K0)

/// Induced subgraph on the active vertices, relabeled in ascending order.
Graph active_part(const Graph& g);

/// Appends extra_vertices fresh vertices and the given edges; every new edge
/// must touch at least one new vertex.
Graph extend(const Graph& g, int extra_vertices,
             const std::vector<std::pair<int, int>>& extra_edges);

/// A sequence th with th(g) = h, every step active. Bidirectional BFS over the
/// realization space (shortest) for order <= 10, canonical-realization
/// alignment beyond. Requires equal per-vertex degree tuples.
std::vector<TwoSwitch> find_switch_sequence(const Graph& g, const Graph& h);

} // namespace twoswitch
