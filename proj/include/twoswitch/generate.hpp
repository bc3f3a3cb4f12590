#pragma once

#include <random>
#include <vector>

#include "twoswitch/graph.hpp"

namespace twoswitch {

/// Visits every labeled graph on n vertices exactly once (Gray-code order:
/// consecutive graphs differ in one edge). fn may return void, or false to
/// stop early.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    Graph g(n);
    auto visit = [&](const Graph& x) {
        if constexpr (std::is_void_v<decltype(fn(x))>) {
            fn(x);
            return true;
        } else {
            return fn(x);
        }
    };
    if (!visit(g)) return;
    unsigned long long total = 1ull << pairs.size();
    for (unsigned long long k = 1; k < total; ++k) {
        unsigned long long gray = k ^ (k >> 1), prev = (k - 1) ^ ((k - 1) >> 1);
        int bit = std::countr_zero(gray ^ prev);
        g.toggle_edge(pairs[static_cast<std::size_t>(bit)].first,
                      pairs[static_cast<std::size_t>(bit)].second);
        if (!visit(g)) return;
    }
}

/// All graphical degree sequences on n vertices as descending tuples.
std::vector<DegreeSequence> graphical_sequences_sorted(int n);

/// Degree sequences of trees on n vertices (positive entries summing to
/// 2(n-1)), descending tuples; n = 1 yields (0).
std::vector<DegreeSequence> tree_sequences_sorted(int n);

Graph random_graph(std::mt19937_64& rng, int n, double p);
Graph random_tree(std::mt19937_64& rng, int n);

/// All 2^(n-1) threshold graphs on n >= 1 labeled vertices, built by creation
/// sequences (each next vertex either isolated or dominating).
std::vector<Graph> threshold_graphs(int n);

Graph petersen_graph();

} // namespace twoswitch
