#pragma once

#include <vector>

#include "twoswitch/graph.hpp"
#include "twoswitch/two_switch.hpp"

namespace twoswitch {

/// A (clique, independent) vertex bipartition of a split graph. The clique
/// side is always listed first.
struct SplitBipartition {
    std::vector<int> clique;
    std::vector<int> independent;
    bool operator==(const SplitBipartition&) const = default;
};

struct SplitCheck {
    bool split = false;
    /// On failure: vertices of an induced C4, 2K2 or C5.
    std::vector<int> witness;
};

/// Split recognition (degree test), with a forbidden-subgraph witness when the
/// graph is not split.
SplitCheck is_split(const Graph& g);

bool is_valid_bipartition(const Graph& g, const SplitBipartition& bip);

/// All bipartitions, deduplicated, ordered by clique size descending then
/// lexicographically. Throws ArgumentError on non-split input.
std::vector<SplitBipartition> bipartitions(const Graph& g);

std::vector<int> universal_vertices(const Graph& g);
/// Vertices w with N(w) = K - w relative to the given bipartition.
std::vector<int> swing_vertices(const Graph& g, const SplitBipartition& bip);

/// Activity from neighborhood comparability: a vertex is inactive iff its
/// neighborhood in S - E(K) is comparable by inclusion with every other
/// neighborhood on its side of the bipartition.
ActivityReport split_active_vertices(const Graph& g, const SplitBipartition& bip);

struct SplitAnalysis {
    std::vector<SplitBipartition> bipartitions;
    bool balanced = false; // exactly one bipartition
    std::vector<int> swing;     // relative to the first listed bipartition
    std::vector<int> universal;
};

SplitAnalysis analyze_split(const Graph& g);

/// Composition S o G: disjoint union plus all edges between the clique side
/// of s and every vertex of g; g's vertices are relabeled after s's.
Graph compose(const Graph& s, const SplitBipartition& bip, const Graph& g);

/// True iff g = s1 o g2 with both factors nonempty and s1 split. Exhaustive
/// search is capped at order 12 (CapError beyond) unless a fast path decides.
bool is_decomposable(const Graph& g);

/// Active and indecomposable.
bool is_prime(const Graph& g);

/// True iff the bipartite graph S - E(K) contains a 4-cycle (as a subgraph).
bool bipartite_part_has_c4(const Graph& g, const SplitBipartition& bip);

} // namespace twoswitch
