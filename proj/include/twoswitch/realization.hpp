#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "twoswitch/graph.hpp"
#include "twoswitch/two_switch.hpp"

namespace twoswitch {

struct EnumerationLimits {
    int max_order = 12;
    long long max_count = 1'000'000;
};

/// All labeled graphs whose per-vertex degree tuple equals s, in ascending
/// lexicographic order of the upper-triangle edge bits. DomainError for
/// non-graphical s, CapError past the limits.
std::vector<Graph> enumerate_realizations(const DegreeSequence& s,
                                          const EnumerationLimits& limits = {});

enum class SpaceFilter { All, Forests, Unicyclic, Connected };
const char* to_string(SpaceFilter f);
bool passes_filter(const Graph& g, SpaceFilter f);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_unicyclic(const Graph& g);

/// Metagraph over the (filtered) realizations of s: vertices are graphs,
/// edges join pairs one active 2-switch apart.
struct RealizationGraph {
    DegreeSequence sequence;
    SpaceFilter filter = SpaceFilter::All;
    std::vector<Graph> vertices;
    std::vector<std::pair<int, int>> edges; // i<j, sorted

    std::vector<int> metagraph_degrees() const;
    bool connected() const;
    bool regular() const;
    std::optional<int> index_of(const Graph& g) const;
};

RealizationGraph build_realization_graph(const DegreeSequence& s,
                                         SpaceFilter filter = SpaceFilter::All,
                                         const EnumerationLimits& limits = {});
/// Custom-predicate space.
RealizationGraph build_realization_graph(const DegreeSequence& s,
                                         const std::function<bool(const Graph&)>& keep,
                                         const EnumerationLimits& limits = {});

/// The 2-switch carrying g to h when the two differ by exactly one switch.
std::optional<TwoSwitch> one_switch_apart(const Graph& g, const Graph& h);

struct DualIsomorphismReport {
    bool isomorphic = false;
    long long vertex_count = 0;
    long long edge_count = 0;
};

/// Checks that complementation is a metagraph isomorphism from the space of s
/// onto the space of the dual sequence.
DualIsomorphismReport verify_dual_isomorphism(const DegreeSequence& s,
                                              const EnumerationLimits& limits = {});

struct ActiveSpaceReport {
    bool isomorphic = false;       // G -> G* preserves metagraph adjacency both ways
    bool e0_invariant = false;     // inactive-incident edge set equal across realizations
    bool activity_invariant = false; // act identical across realizations
    std::vector<int> active;       // act(s)
    RealizationGraph image;        // the active space
};

ActiveSpaceReport active_space(const RealizationGraph& x);

} // namespace twoswitch
