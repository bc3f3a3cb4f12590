#include "twoswitch/generate.hpp"

#include <algorithm>

namespace twoswitch {

namespace {

void descending_tuples(int n, int max_val, int min_val, std::vector<int>& cur,
                       std::vector<DegreeSequence>& out, bool require_graphical) {
    if (static_cast<int>(cur.size()) == n) {
        long long sum = 0;
        for (int d : cur) sum += d;
        if (sum % 2 != 0) return;
        DegreeSequence s(cur);
        if (!require_graphical || s.is_graphical()) out.push_back(std::move(s));
        return;
    }
    int hi = cur.empty() ? max_val : cur.back();
    for (int d = hi; d >= min_val; --d) {
        cur.push_back(d);
        descending_tuples(n, max_val, min_val, cur, out, require_graphical);
        cur.pop_back();
    }
}

} // namespace

std::vector<DegreeSequence> graphical_sequences_sorted(int n) {
    std::vector<DegreeSequence> out;
    std::vector<int> cur;
    descending_tuples(n, std::max(0, n - 1), 0, cur, out, true);
    return out;
}

std::vector<DegreeSequence> tree_sequences_sorted(int n) {
    std::vector<DegreeSequence> out;
    if (n == 1) {
        out.push_back(DegreeSequence(std::vector<int>{0}));
        return out;
    }
    std::vector<int> cur;
    std::vector<DegreeSequence> all;
    descending_tuples(n, std::max(0, n - 1), 1, cur, all, true);
    for (auto& s : all)
        if (s.sum() == 2ll * (n - 1)) out.push_back(std::move(s));
    return out;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_tree(std::mt19937_64& rng, int n) {
    Graph g(n);
    if (n <= 1) return g;
    // Pruefer decode of a uniform random sequence
    std::vector<int> code(static_cast<std::size_t>(std::max(0, n - 2)));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& c : code) c = pick(rng);
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int c : code) ++deg[static_cast<std::size_t>(c)];
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int c : code) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
                leaf = v;
                break;
            }
        g.add_edge(leaf, c);
        used[static_cast<std::size_t>(leaf)] = 1;
        --deg[static_cast<std::size_t>(c)];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1) {
            if (a < 0) a = v;
            else b = v;
        }
    g.add_edge(a, b);
    return g;
}

std::vector<Graph> threshold_graphs(int n) {
    std::vector<Graph> out;
    if (n <= 0) {
        out.push_back(Graph(0));
        return out;
    }
    unsigned long long total = 1ull << (n - 1);
    for (unsigned long long mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (int v = 1; v < n; ++v)
            if ((mask >> (v - 1)) & 1)
                for (int u = 0; u < v; ++u) g.add_edge(u, v);
        out.push_back(std::move(g));
    }
    return out;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

} // namespace twoswitch
