#pragma once

#include <vector>

#include "twoswitch/census.hpp"
#include "twoswitch/graph.hpp"
#include "twoswitch/realization.hpp"
#include "twoswitch/two_switch.hpp"

namespace twoswitch {

enum class SwitchFamily { Forests, Unicyclic };
enum class SwitchClass { Preserving, Breaking, Inactive };

/// Classifies a 2-switch on a member of the family: Preserving if the result
/// stays in the family, Breaking if it leaves it, Inactive if the switch does
/// not act. For unicyclic graphs the cycle/forest case analysis decides and a
/// direct apply-and-test cross-check guards it.
SwitchClass classify_switch(const TwoSwitch& t, const Graph& g, SwitchFamily family);

/// Neighbor count within the forest-induced realization subgraph. Trees use
/// the closed form dpe(s); other forests are counted by direct classification.
long long f_degree(const Graph& g);

/// 2-switch-degree of a tree: 2 deg_f - sum over edges of (d_u-1)(d_v-1),
/// equivalently (n-1)^2 - zagreb2; both are computed and must agree.
long long tree_degree(const Graph& g);

/// The unique cycle C and the forest F = U - E(C) - {degree-2 cycle vertices}.
struct UnicyclicDecomposition {
    std::vector<int> cycle;           // cyclic order, starts at the smallest id
    std::vector<int> forest_vertices; // original ids, ascending
    Graph forest;                     // relabeled along forest_vertices
    int attachment_count = 0;         // |V(F) cap V(C)| = number of F components
};

UnicyclicDecomposition decompose_unicyclic(const Graph& g);

/// Neighbor count within the unicyclic-induced realization subgraph,
/// via deg(U) - deg(C) + dpe(C) - dpe(F) + p4(F); cross-computed through the
/// cycle-length case formula, which must agree.
long long u_degree(const Graph& g);

} // namespace twoswitch
