#include "twoswitch/forests.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoswitch {

namespace {

bool edge_in_cycle(const std::vector<int>& cycle, int u, int v) {
    int c = static_cast<int>(cycle.size());
    for (int i = 0; i < c; ++i) {
        int a = cycle[static_cast<std::size_t>(i)];
        int b = cycle[static_cast<std::size_t>((i + 1) % c)];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

} // namespace

UnicyclicDecomposition decompose_unicyclic(const Graph& g) {
    if (!is_unicyclic(g)) throw ArgumentError("graph is not unicyclic");
    int n = g.order();

    // peel leaves; what survives is the cycle
    std::vector<int> deg = g.degrees();
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        removed[static_cast<std::size_t>(v)] = 1;
        for (int w : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(w)]) continue;
            if (--deg[static_cast<std::size_t>(w)] == 1) stack.push_back(w);
        }
    }

    UnicyclicDecomposition out;
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) {
            start = v;
            break;
        }
    if (start < 0) throw std::logic_error("unicyclic graph without a cycle");
    int prev = -1, cur = start;
    do {
        out.cycle.push_back(cur);
        int nxt = -1;
        for (int w : g.neighbors(cur))
            if (!removed[static_cast<std::size_t>(w)] && w != prev) {
                nxt = w;
                break;
            }
        prev = cur;
        cur = nxt;
    } while (cur != start);

    std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
    for (int v : out.cycle) on_cycle[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v)
        if (!on_cycle[static_cast<std::size_t>(v)] || g.degree(v) > 2)
            out.forest_vertices.push_back(v);

    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < out.forest_vertices.size(); ++i)
        pos[static_cast<std::size_t>(out.forest_vertices[i])] = static_cast<int>(i);
    Graph f(static_cast<int>(out.forest_vertices.size()));
    for (auto [u, v] : g.edges()) {
        if (edge_in_cycle(out.cycle, u, v)) continue;
        f.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    }
    out.forest = std::move(f);

    int attach = 0;
    for (int v : out.forest_vertices)
        if (on_cycle[static_cast<std::size_t>(v)]) ++attach;
    out.attachment_count = attach;
    if (attach != static_cast<int>(components(out.forest).size()))
        throw std::logic_error("attachment count must equal forest component count");
    return out;
}

SwitchClass classify_switch(const TwoSwitch& t, const Graph& g, SwitchFamily family) {
    if (family == SwitchFamily::Forests) {
        if (!is_forest(g)) throw ArgumentError("graph is not a forest");
        if (!is_active(t, g)) return SwitchClass::Inactive;
        return is_forest(apply(t, g)) ? SwitchClass::Preserving : SwitchClass::Breaking;
    }

    auto dec = decompose_unicyclic(g); // also validates the family
    if (!is_active(t, g)) return SwitchClass::Inactive;

    bool e1_cycle = edge_in_cycle(dec.cycle, t.a, t.b);
    bool e2_cycle = edge_in_cycle(dec.cycle, t.c, t.d);
    SwitchClass decided;
    if (!e1_cycle && !e2_cycle) {
        // both rows in F: a u-switch iff a t-switch on U - e, any cycle edge e
        Graph cut = g;
        cut.remove_edge(dec.cycle[0], dec.cycle[1]);
        if (!is_active(t, cut)) throw std::logic_error("forest-row switch inactive on U - e");
        decided = is_tree(apply(t, cut)) ? SwitchClass::Preserving : SwitchClass::Breaking;
    } else if (e1_cycle != e2_cycle) {
        decided = SwitchClass::Preserving;
    } else {
        // both rows on C: preserving iff the rewired cycle is again one cycle
        Graph c(g.order());
        int len = static_cast<int>(dec.cycle.size());
        for (int i = 0; i < len; ++i)
            c.add_edge(dec.cycle[static_cast<std::size_t>(i)],
                       dec.cycle[static_cast<std::size_t>((i + 1) % len)]);
        Graph rc = apply(t, c);
        int reach = 0;
        {
            auto dist = distances(rc, dec.cycle[0]);
            for (int v : dec.cycle)
                if (dist[static_cast<std::size_t>(v)]) ++reach;
        }
        decided = (reach == len) ? SwitchClass::Preserving : SwitchClass::Breaking;
    }

    SwitchClass direct =
        is_unicyclic(apply(t, g)) ? SwitchClass::Preserving : SwitchClass::Breaking;
    if (decided != direct)
        throw std::logic_error("cycle/forest case analysis disagrees with direct application");
    return decided;
}

long long f_degree(const Graph& g) {
    if (!is_forest(g)) throw ArgumentError("graph is not a forest");
    if (is_tree(g)) return dpe(degree_sequence(g));
    long long count = 0;
    for (const TwoSwitch& t : enumerate_active_switches(g))
        if (classify_switch(t, g, SwitchFamily::Forests) == SwitchClass::Preserving) ++count;
    return count;
}

long long tree_degree(const Graph& g) {
    if (!is_tree(g)) throw ArgumentError("graph is not a tree");
    auto deg = g.degrees();
    long long edge_sum = 0;
    for (auto [u, v] : g.edges())
        edge_sum += static_cast<long long>(deg[static_cast<std::size_t>(u)] - 1) *
                    (deg[static_cast<std::size_t>(v)] - 1);
    long long via_f = 2 * f_degree(g) - edge_sum;
    long long n1 = g.order() - 1;
    long long via_zagreb = n1 * n1 - zagreb(g).second;
    if (via_f != via_zagreb) throw std::logic_error("tree degree formulas disagree");
    return via_f;
}

long long u_degree(const Graph& g) {
    auto dec = decompose_unicyclic(g);
    int c = static_cast<int>(dec.cycle.size());
    long long deg_u_graph = degree_formula(g);
    long long deg_c = (c == 3) ? 0 : (c == 4) ? 2 : static_cast<long long>(c) * (c - 4);
    long long dpe_c = binom2_checked(c) - c;
    CountSummary f = count_summary(dec.forest);
    long long via_decomposition = deg_u_graph - deg_c + dpe_c - f.dpe + f.p4;

    // cycle-length case formula over p4(U) = zagreb2 - zagreb1 + n (- 3 when c = 3)
    auto [z1, z2] = zagreb(g);
    long long n = g.order();
    long long p4_u = z2 - z1 + n - (c == 3 ? 3 : 0);
    long long deg_f = degree_formula(dec.forest);
    long long adjust = (c == 3) ? 0 : (c == 4) ? 2 : -static_cast<long long>(c) * (c - 5) / 2;
    long long via_cases = 2 * dpe(degree_sequence(g)) + f.dpe - deg_f - p4_u + adjust;

    if (via_decomposition != via_cases)
        throw std::logic_error("unicyclic degree case formula disagrees");
    return via_decomposition;
}

} // namespace twoswitch
