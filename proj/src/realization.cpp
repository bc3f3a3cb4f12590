#include "twoswitch/realization.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

namespace twoswitch {

std::vector<Graph> enumerate_realizations(const DegreeSequence& s,
                                          const EnumerationLimits& limits) {
    if (!s.is_graphical()) throw DomainError("degree sequence is not graphical");
    int n = s.order();
    if (n > limits.max_order)
        throw CapError("realization enumeration capped at order " +
                       std::to_string(limits.max_order));

    std::vector<Graph> out;
    Graph work(n);
    std::vector<int> residual = s.degrees();

    // decide pairs (i,j), i<j, in lexicographic order; skip branch first
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i >= n - 1) {
            out.push_back(work);
            if (static_cast<long long>(out.size()) > limits.max_count)
                throw CapError("realization count exceeds cap of " +
                               std::to_string(limits.max_count));
            return;
        }
        int ni = (j == n - 1) ? i + 1 : i;
        int nj = (j == n - 1) ? i + 2 : j + 1;
        int ri = residual[static_cast<std::size_t>(i)];
        int rj = residual[static_cast<std::size_t>(j)];
        // skipping (i,j) leaves row i with n-1-j slots and j with
        // (j-i-1) + (n-1-j) future slots
        if (ri <= n - 1 - j && rj <= (j - i - 1) + (n - 1 - j)) self(self, ni, nj);
        if (ri > 0 && rj > 0 && ri - 1 <= n - 1 - j) {
            work.add_edge(i, j);
            residual[static_cast<std::size_t>(i)] = ri - 1;
            residual[static_cast<std::size_t>(j)] = rj - 1;
            self(self, ni, nj);
            residual[static_cast<std::size_t>(i)] = ri;
            residual[static_cast<std::size_t>(j)] = rj;
            work.remove_edge(i, j);
        }
    };
    if (n <= 1) {
        out.push_back(work);
        return out;
    }
    rec(rec, 0, 1);
    return out;
}

const char* to_string(SpaceFilter f) {
    switch (f) {
        case SpaceFilter::All: return "all";
        case SpaceFilter::Forests: return "forests";
        case SpaceFilter::Unicyclic: return "unicyclic";
        case SpaceFilter::Connected: return "connected";
    }
    return "?";
}

bool is_forest(const Graph& g) {
    return g.size() == g.order() - static_cast<long long>(components(g).size());
}

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

bool is_unicyclic(const Graph& g) { return is_connected(g) && g.size() == g.order(); }

bool passes_filter(const Graph& g, SpaceFilter f) {
    switch (f) {
        case SpaceFilter::All: return true;
        case SpaceFilter::Forests: return is_forest(g);
        case SpaceFilter::Unicyclic: return is_unicyclic(g);
        case SpaceFilter::Connected: return is_connected(g);
    }
    return false;
}

std::vector<int> RealizationGraph::metagraph_degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (auto [i, j] : edges) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
    }
    return deg;
}

bool RealizationGraph::connected() const {
    if (vertices.empty()) return true;
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [i, j] : edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    std::vector<char> vis(vertices.size(), 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!vis[static_cast<std::size_t>(w)]) {
                vis[static_cast<std::size_t>(w)] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == vertices.size();
}

bool RealizationGraph::regular() const {
    auto deg = metagraph_degrees();
    return std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<int>()) == deg.end();
}

std::optional<int> RealizationGraph::index_of(const Graph& g) const {
    auto key = g.edge_key();
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].edge_key() == key) return static_cast<int>(i);
    return std::nullopt;
}

RealizationGraph build_realization_graph(const DegreeSequence& s,
                                         const std::function<bool(const Graph&)>& keep,
                                         const EnumerationLimits& limits) {
    RealizationGraph rg;
    rg.sequence = s;
    for (Graph& g : enumerate_realizations(s, limits))
        if (keep(g)) rg.vertices.push_back(std::move(g));

    std::unordered_map<std::vector<uint64_t>, int, EdgeKeyHash> index;
    index.reserve(rg.vertices.size() * 2);
    for (std::size_t i = 0; i < rg.vertices.size(); ++i)
        index.emplace(rg.vertices[i].edge_key(), static_cast<int>(i));

    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < rg.vertices.size(); ++i) {
        for (const TwoSwitch& t : enumerate_active_switches(rg.vertices[i])) {
            Graph h = apply(t, rg.vertices[i]);
            auto it = index.find(h.edge_key());
            if (it == index.end()) continue; // neighbor filtered out of the space
            int j = it->second;
            if (static_cast<int>(i) < j) edges.emplace(static_cast<int>(i), j);
            else if (j < static_cast<int>(i)) edges.emplace(j, static_cast<int>(i));
        }
    }
    rg.edges.assign(edges.begin(), edges.end());
    return rg;
}

RealizationGraph build_realization_graph(const DegreeSequence& s, SpaceFilter filter,
                                         const EnumerationLimits& limits) {
    RealizationGraph rg =
        build_realization_graph(s, [filter](const Graph& g) { return passes_filter(g, filter); },
                                limits);
    rg.filter = filter;
    return rg;
}

std::optional<TwoSwitch> one_switch_apart(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return std::nullopt;
    std::vector<std::pair<int, int>> removed, added;
    auto eg = g.edges(), eh = h.edges();
    std::set_difference(eg.begin(), eg.end(), eh.begin(), eh.end(), std::back_inserter(removed));
    std::set_difference(eh.begin(), eh.end(), eg.begin(), eg.end(), std::back_inserter(added));
    if (removed.size() != 2 || added.size() != 2) return std::nullopt;
    auto [a, b] = removed[0];
    auto [c, d] = removed[1];
    if (a == c || a == d || b == c || b == d) return std::nullopt;
    for (const TwoSwitch& t : {TwoSwitch(a, b, c, d), TwoSwitch(a, b, d, c)}) {
        if (is_active(t, g) && apply(t, g) == h) return t.canonical();
    }
    return std::nullopt;
}

DualIsomorphismReport verify_dual_isomorphism(const DegreeSequence& s,
                                              const EnumerationLimits& limits) {
    RealizationGraph x = build_realization_graph(s, SpaceFilter::All, limits);
    RealizationGraph y = build_realization_graph(s.dual(), SpaceFilter::All, limits);
    DualIsomorphismReport rep;
    rep.vertex_count = static_cast<long long>(x.vertices.size());
    rep.edge_count = static_cast<long long>(x.edges.size());
    if (x.vertices.size() != y.vertices.size() || x.edges.size() != y.edges.size()) return rep;

    std::unordered_map<std::vector<uint64_t>, int, EdgeKeyHash> yindex;
    for (std::size_t i = 0; i < y.vertices.size(); ++i)
        yindex.emplace(y.vertices[i].edge_key(), static_cast<int>(i));

    std::vector<int> map(x.vertices.size(), -1);
    for (std::size_t i = 0; i < x.vertices.size(); ++i) {
        auto it = yindex.find(complement(x.vertices[i]).edge_key());
        if (it == yindex.end()) return rep;
        map[i] = it->second;
    }
    std::set<std::pair<int, int>> yedges(y.edges.begin(), y.edges.end());
    for (auto [i, j] : x.edges) {
        int mi = map[static_cast<std::size_t>(i)], mj = map[static_cast<std::size_t>(j)];
        if (mi > mj) std::swap(mi, mj);
        if (!yedges.count({mi, mj})) return rep;
    }
    rep.isomorphic = true; // edge counts equal and the map is an injection on edges
    return rep;
}

ActiveSpaceReport active_space(const RealizationGraph& x) {
    ActiveSpaceReport rep;
    if (x.vertices.empty()) {
        rep.isomorphic = rep.e0_invariant = rep.activity_invariant = true;
        return rep;
    }

    rep.active = active_vertices(x.vertices.front()).active_vertices;
    rep.activity_invariant = true;
    for (const Graph& g : x.vertices)
        if (active_vertices(g).active_vertices != rep.active) rep.activity_invariant = false;

    std::vector<char> is_act(static_cast<std::size_t>(x.vertices.front().order()), 0);
    for (int v : rep.active) is_act[static_cast<std::size_t>(v)] = 1;
    auto inactive_incident = [&](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (auto [u, v] : g.edges())
            if (!is_act[static_cast<std::size_t>(u)] || !is_act[static_cast<std::size_t>(v)])
                out.emplace_back(u, v);
        return out;
    };
    auto e0 = inactive_incident(x.vertices.front());
    rep.e0_invariant = true;
    for (const Graph& g : x.vertices)
        if (inactive_incident(g) != e0) rep.e0_invariant = false;

    rep.image.sequence = DegreeSequence(
        induced_subgraph(x.vertices.front(), rep.active).degrees());
    rep.image.filter = x.filter;
    for (const Graph& g : x.vertices)
        rep.image.vertices.push_back(induced_subgraph(g, rep.active));

    // injective image, and adjacency must carry over exactly
    std::set<std::vector<uint64_t>> keys;
    for (const Graph& g : rep.image.vertices) keys.insert(g.edge_key());
    bool injective = keys.size() == rep.image.vertices.size();

    std::set<std::pair<int, int>> xedges(x.edges.begin(), x.edges.end());
    bool adjacency_ok = injective;
    for (std::size_t i = 0; i < rep.image.vertices.size() && adjacency_ok; ++i)
        for (std::size_t j = i + 1; j < rep.image.vertices.size(); ++j) {
            bool meta = one_switch_apart(rep.image.vertices[i], rep.image.vertices[j]).has_value();
            if (meta) rep.image.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            if (meta != (xedges.count({static_cast<int>(i), static_cast<int>(j)}) > 0)) {
                adjacency_ok = false;
                break;
            }
        }
    rep.isomorphic = adjacency_ok && rep.activity_invariant && rep.e0_invariant;
    return rep;
}

} // namespace twoswitch
