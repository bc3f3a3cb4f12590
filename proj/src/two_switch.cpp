#include "twoswitch/two_switch.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace twoswitch {

TwoSwitch::TwoSwitch(int a_, int b_, int c_, int d_) : a(a_), b(b_), c(c_), d(d_) {
    std::array<int, 4> v{a, b, c, d};
    std::sort(v.begin(), v.end());
    if (v[0] < 0 || v[0] == v[1] || v[1] == v[2] || v[2] == v[3])
        throw ArgumentError("2-switch vertices must be distinct and non-negative");
}

TwoSwitch TwoSwitch::canonical() const {
    std::array<std::tuple<int, int, int, int>, 4> forms{
        std::tuple{a, b, c, d}, // identity
        std::tuple{c, d, a, b}, // row swap
        std::tuple{b, a, d, c}, // column swap
        std::tuple{d, c, b, a}, // both
    };
    auto m = *std::min_element(forms.begin(), forms.end());
    return TwoSwitch(std::get<0>(m), std::get<1>(m), std::get<2>(m), std::get<3>(m));
}

bool operator==(const TwoSwitch& x, const TwoSwitch& y) {
    TwoSwitch cx = x.canonical(), cy = y.canonical();
    return cx.a == cy.a && cx.b == cy.b && cx.c == cy.c && cx.d == cy.d;
}

bool operator<(const TwoSwitch& x, const TwoSwitch& y) {
    TwoSwitch cx = x.canonical(), cy = y.canonical();
    return std::tie(cx.a, cx.b, cx.c, cx.d) < std::tie(cy.a, cy.b, cy.c, cy.d);
}

bool is_active(const TwoSwitch& t, const Graph& g) {
    for (int v : {t.a, t.b, t.c, t.d})
        if (v < 0 || v >= g.order())
            throw ArgumentError("2-switch vertex " + std::to_string(v) + " out of range");
    return g.has_edge(t.a, t.b) && g.has_edge(t.c, t.d) && !g.has_edge(t.a, t.c) &&
           !g.has_edge(t.b, t.d);
}

Graph apply(const TwoSwitch& t, const Graph& g) {
    if (!is_active(t, g)) return g;
    Graph h = g;
    h.remove_edge(t.a, t.b);
    h.remove_edge(t.c, t.d);
    h.add_edge(t.a, t.c);
    h.add_edge(t.b, t.d);
    return h;
}

namespace {

// Calls fn(a,b,c,d) for the candidate matrices of every unordered disjoint
// edge pair {ab,cd}; exactly two distinct functions exist per pair.
template <typename Fn>
void for_each_active_switch(const Graph& g, Fn&& fn) {
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        auto [a, b] = es[i];
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (!g.has_edge(a, c) && !g.has_edge(b, d)) fn(a, b, c, d);
            if (!g.has_edge(a, d) && !g.has_edge(b, c)) fn(a, b, d, c);
        }
    }
}

} // namespace

std::vector<TwoSwitch> enumerate_active_switches(const Graph& g) {
    std::vector<TwoSwitch> out;
    for_each_active_switch(g, [&](int a, int b, int c, int d) {
        out.push_back(TwoSwitch(a, b, c, d).canonical());
    });
    std::sort(out.begin(), out.end());
    return out;
}

long long two_switch_degree(const Graph& g) {
    long long deg = 0;
    for_each_active_switch(g, [&](int, int, int, int) { ++deg; });
    return deg;
}

ActivityReport active_vertices(const Graph& g) {
    std::vector<char> active(static_cast<std::size_t>(g.order()), 0);
    int remaining = g.order();
    auto mark = [&](int v) {
        if (!active[static_cast<std::size_t>(v)]) {
            active[static_cast<std::size_t>(v)] = 1;
            --remaining;
        }
    };
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size() && remaining > 0; ++i) {
        auto [a, b] = es[i];
        for (std::size_t j = i + 1; j < es.size() && remaining > 0; ++j) {
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (active[static_cast<std::size_t>(a)] && active[static_cast<std::size_t>(b)] &&
                active[static_cast<std::size_t>(c)] && active[static_cast<std::size_t>(d)])
                continue;
            if ((!g.has_edge(a, c) && !g.has_edge(b, d)) ||
                (!g.has_edge(a, d) && !g.has_edge(b, c))) {
                mark(a);
                mark(b);
                mark(c);
                mark(d);
            }
        }
    }
    ActivityReport rep;
    for (int v = 0; v < g.order(); ++v)
        (active[static_cast<std::size_t>(v)] ? rep.active_vertices : rep.inactive_vertices)
            .push_back(v);
    return rep;
}

bool is_active_graph(const Graph& g) {
    return active_vertices(g).inactive_vertices.empty();
}

Graph active_part(const Graph& g) {
    return induced_subgraph(g, active_vertices(g).active_vertices);
}

Graph extend(const Graph& g, int extra_vertices,
             const std::vector<std::pair<int, int>>& extra_edges) {
    if (extra_vertices < 0) throw ArgumentError("extension vertex count must be non-negative");
    int n = g.order();
    Graph h(n + extra_vertices);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (auto [u, v] : extra_edges) {
        if (u < 0 || v < 0 || u >= h.order() || v >= h.order())
            throw ArgumentError("extension edge endpoint out of range");
        if (u < n && v < n)
            throw ArgumentError("extension edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " lies inside the original vertex set");
        h.add_edge(u, v);
    }
    return h;
}

// ---- switch-sequence search --------------------------------------------------

namespace {

struct SearchNode {
    Graph graph;
    std::vector<uint64_t> parent; // empty at the roots
    TwoSwitch step{0, 1, 2, 3};   // applied to parent to reach this node
};

using NodeMap = std::unordered_map<std::vector<uint64_t>, SearchNode, EdgeKeyHash>;

std::vector<TwoSwitch> chain_to_root(const NodeMap& side, std::vector<uint64_t> key) {
    std::vector<TwoSwitch> out;
    for (;;) {
        const SearchNode& node = side.at(key);
        if (node.parent.empty()) break;
        out.push_back(node.step);
        key = node.parent;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// Bidirectional BFS over the implicit realization space. Returns a shortest
// sequence, or nullopt if the explored-state cap is hit.
std::optional<std::vector<TwoSwitch>> bfs_sequence(const Graph& g, const Graph& h,
                                                   std::size_t state_cap) {
    NodeMap fwd, bwd;
    std::queue<std::vector<uint64_t>> qf, qb;
    fwd[g.edge_key()] = SearchNode{g, {}, TwoSwitch(0, 1, 2, 3)};
    bwd[h.edge_key()] = SearchNode{h, {}, TwoSwitch(0, 1, 2, 3)};
    qf.push(g.edge_key());
    qb.push(h.edge_key());

    auto assemble = [&](const std::vector<uint64_t>& meet) {
        std::vector<TwoSwitch> seq = chain_to_root(fwd, meet);
        std::vector<TwoSwitch> back = chain_to_root(bwd, meet);
        for (auto it = back.rbegin(); it != back.rend(); ++it) seq.push_back(it->inverse());
        return seq;
    };

    if (bwd.count(g.edge_key())) return assemble(g.edge_key());

    while (!qf.empty() && !qb.empty()) {
        bool forward = qf.size() <= qb.size();
        auto& q = forward ? qf : qb;
        auto& mine = forward ? fwd : bwd;
        auto& other = forward ? bwd : fwd;
        std::size_t level = q.size();
        while (level-- > 0) {
            std::vector<uint64_t> key = q.front();
            q.pop();
            Graph cur = mine.at(key).graph;
            std::optional<std::vector<uint64_t>> meet;
            for_each_active_switch(cur, [&](int a, int b, int c, int d) {
                if (meet) return;
                TwoSwitch t(a, b, c, d);
                Graph nxt = apply(t, cur);
                auto nkey = nxt.edge_key();
                if (mine.emplace(nkey, SearchNode{nxt, key, t}).second) {
                    q.push(nkey);
                    if (other.count(nkey)) meet = nkey;
                }
            });
            if (meet) return assemble(*meet);
            if (fwd.size() + bwd.size() > state_cap) return std::nullopt;
        }
    }
    return std::nullopt; // unreachable for valid inputs: realization spaces are connected
}

// Switches transforming g into the canonical realization of its degree tuple.
// Vertices are fixed one at a time (priority: residual degree desc, id asc);
// the current vertex's unfixed neighborhood is aligned to the top-priority
// target set by exchange switches.
std::vector<TwoSwitch> align_to_canonical(Graph g) {
    int n = g.order();
    std::vector<TwoSwitch> seq;
    std::vector<char> fixed(static_cast<std::size_t>(n), 0);
    std::vector<int> residual = g.degrees();

    auto priority_less = [&](int x, int y) {
        if (residual[static_cast<std::size_t>(x)] != residual[static_cast<std::size_t>(y)])
            return residual[static_cast<std::size_t>(x)] > residual[static_cast<std::size_t>(y)];
        return x < y;
    };

    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!fixed[static_cast<std::size_t>(u)] && (v < 0 || priority_less(u, v))) v = u;

        std::vector<int> cand;
        for (int u = 0; u < n; ++u)
            if (!fixed[static_cast<std::size_t>(u)] && u != v) cand.push_back(u);
        std::sort(cand.begin(), cand.end(), priority_less);
        int dv = residual[static_cast<std::size_t>(v)];
        std::vector<char> target(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < dv; ++i) target[static_cast<std::size_t>(cand[static_cast<std::size_t>(i)])] = 1;

        for (;;) {
            int u = -1, w = -1;
            for (int x : cand) {
                bool nb = g.has_edge(v, x);
                if (target[static_cast<std::size_t>(x)] && !nb && u < 0) u = x;
                if (!target[static_cast<std::size_t>(x)] && nb) w = x; // lowest priority kept
            }
            if (u < 0) break;
            // residual degree of u is >= that of w, so a partner x with
            // ux present and wx absent exists among the unfixed vertices
            int x = -1;
            for (int y : cand) {
                if (y == u || y == w) continue;
                if (g.has_edge(u, y) && !g.has_edge(w, y)) {
                    x = y;
                    break;
                }
            }
            if (x < 0) throw std::logic_error("exchange partner must exist");
            TwoSwitch t(v, w, u, x); // removes vw,ux; adds vu,wx
            g = apply(t, g);
            seq.push_back(t);
        }

        fixed[static_cast<std::size_t>(v)] = 1;
        residual[static_cast<std::size_t>(v)] = 0;
        for (int u : cand)
            if (g.has_edge(v, u)) --residual[static_cast<std::size_t>(u)];
    }
    return seq;
}

} // namespace

std::vector<TwoSwitch> find_switch_sequence(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.degrees() != h.degrees())
        throw ArgumentError("graphs do not share a degree sequence");
    if (g == h) return {};

    std::optional<std::vector<TwoSwitch>> seq;
    if (g.order() <= 10) seq = bfs_sequence(g, h, 2'000'000);
    if (!seq) {
        std::vector<TwoSwitch> forward = align_to_canonical(g);
        std::vector<TwoSwitch> back = align_to_canonical(h);
        for (auto it = back.rbegin(); it != back.rend(); ++it) forward.push_back(it->inverse());
        seq = std::move(forward);
    }

    Graph replay = g;
    for (const TwoSwitch& t : *seq) replay = apply(t, replay);
    if (!(replay == h)) throw std::logic_error("switch sequence replay mismatch");
    return *seq;
}

} // namespace twoswitch
