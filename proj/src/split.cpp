#include "twoswitch/split.hpp"

#include <algorithm>
#include <numeric>

namespace twoswitch {

namespace {

bool split_by_degrees(const Graph& g) {
    // Hammer-Simeone: with d_1 >= ... >= d_n and h = max{i : d_i >= i-1},
    // split iff sum_{i<=h} d_i = h(h-1) + sum_{i>h} min(d_i, h).
    std::vector<int> d = g.degrees();
    std::sort(d.begin(), d.end(), std::greater<int>());
    int n = g.order();
    int h = 0;
    while (h < n && d[static_cast<std::size_t>(h)] >= h) ++h;
    long long lhs = 0, rhs = static_cast<long long>(h) * (h - 1);
    for (int i = 0; i < h; ++i) lhs += d[static_cast<std::size_t>(i)];
    for (int i = h; i < n; ++i) rhs += std::min(d[static_cast<std::size_t>(i)], h);
    return lhs == rhs;
}

} // namespace

SplitCheck is_split(const Graph& g) {
    if (split_by_degrees(g)) return {true, {}};
    SplitCheck out;
    int n = g.order();
    // witness: an induced 2K2 or C4 among quadruples, else an induced C5
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    int e = g.has_edge(i, j) + g.has_edge(i, k) + g.has_edge(i, l) +
                            g.has_edge(j, k) + g.has_edge(j, l) + g.has_edge(k, l);
                    if (e != 2 && e != 4) continue;
                    Graph q = induced_subgraph(g, {i, j, k, l});
                    auto deg = q.degrees();
                    int maxd = *std::max_element(deg.begin(), deg.end());
                    if ((e == 2 && maxd == 1) || (e == 4 && maxd == 2)) {
                        out.witness = {i, j, k, l};
                        return out;
                    }
                }
    std::vector<int> pick;
    auto c5 = [&](auto&& self, int start) -> bool {
        if (pick.size() == 5) {
            Graph q = induced_subgraph(g, pick);
            if (q.size() != 5) return false;
            for (int v = 0; v < 5; ++v)
                if (q.degree(v) != 2) return false;
            return is_connected(q);
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            if (self(self, v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (c5(c5, 0)) {
        out.witness = pick;
        return out;
    }
    throw std::logic_error("non-split graph without a forbidden induced subgraph");
}

bool is_valid_bipartition(const Graph& g, const SplitBipartition& bip) {
    int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : bip.clique) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : bip.independent) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
    for (std::size_t i = 0; i < bip.clique.size(); ++i)
        for (std::size_t j = i + 1; j < bip.clique.size(); ++j)
            if (!g.has_edge(bip.clique[i], bip.clique[j])) return false;
    for (std::size_t i = 0; i < bip.independent.size(); ++i)
        for (std::size_t j = i + 1; j < bip.independent.size(); ++j)
            if (g.has_edge(bip.independent[i], bip.independent[j])) return false;
    return true;
}

std::vector<SplitBipartition> bipartitions(const Graph& g) {
    if (!is_split(g).split) throw ArgumentError("not a split graph");
    int n = g.order();
    auto deg = g.degrees();
    std::vector<SplitBipartition> out;

    for (int k = 0; k <= n; ++k) {
        std::vector<int> forced_k, forced_i, flexible;
        for (int v = 0; v < n; ++v) {
            if (deg[static_cast<std::size_t>(v)] >= k + 1) forced_k.push_back(v);
            else if (deg[static_cast<std::size_t>(v)] <= k - 2) forced_i.push_back(v);
            else flexible.push_back(v);
        }
        if (static_cast<int>(forced_k.size()) > k) continue;
        int need = k - static_cast<int>(forced_k.size());
        if (need > static_cast<int>(flexible.size())) continue;

        bool base_ok = true;
        for (std::size_t i = 0; i < forced_k.size() && base_ok; ++i)
            for (std::size_t j = i + 1; j < forced_k.size(); ++j)
                if (!g.has_edge(forced_k[i], forced_k[j])) { base_ok = false; break; }
        for (std::size_t i = 0; i < forced_i.size() && base_ok; ++i)
            for (std::size_t j = i + 1; j < forced_i.size(); ++j)
                if (g.has_edge(forced_i[i], forced_i[j])) { base_ok = false; break; }
        if (!base_ok) continue;

        std::vector<int> side_k = forced_k, side_i = forced_i;
        auto rec = [&](auto&& self, std::size_t at, int still) -> void {
            if (still == 0) {
                // remaining flexible vertices must all fit the independent side
                std::vector<int> rest_i = side_i;
                bool ok = true;
                for (std::size_t t = at; t < flexible.size() && ok; ++t) {
                    int v = flexible[t];
                    for (int w : rest_i)
                        if (g.has_edge(v, w)) { ok = false; break; }
                    rest_i.push_back(v);
                }
                if (!ok) return;
                SplitBipartition bip;
                bip.clique = side_k;
                bip.independent = rest_i;
                std::sort(bip.clique.begin(), bip.clique.end());
                std::sort(bip.independent.begin(), bip.independent.end());
                out.push_back(std::move(bip));
                return;
            }
            if (at >= flexible.size() ||
                static_cast<int>(flexible.size() - at) < still)
                return;
            int v = flexible[at];
            bool can_k = true;
            for (int w : side_k)
                if (!g.has_edge(v, w)) { can_k = false; break; }
            if (can_k) {
                side_k.push_back(v);
                self(self, at + 1, still - 1);
                side_k.pop_back();
            }
            bool can_i = true;
            for (int w : side_i)
                if (g.has_edge(v, w)) { can_i = false; break; }
            if (can_i) {
                side_i.push_back(v);
                self(self, at + 1, still);
                side_i.pop_back();
            }
        };
        rec(rec, 0, need);
    }

    std::sort(out.begin(), out.end(), [](const SplitBipartition& a, const SplitBipartition& b) {
        if (a.clique.size() != b.clique.size()) return a.clique.size() > b.clique.size();
        return a.clique < b.clique;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> universal_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) out.push_back(v);
    return out;
}

std::vector<int> swing_vertices(const Graph& g, const SplitBipartition& bip) {
    if (!is_valid_bipartition(g, bip)) throw ArgumentError("invalid split bipartition");
    std::vector<char> in_k(static_cast<std::size_t>(g.order()), 0);
    for (int v : bip.clique) in_k[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out;
    for (int w = 0; w < g.order(); ++w) {
        bool swing = true;
        for (int v = 0; v < g.order() && swing; ++v) {
            if (v == w) continue;
            bool want = in_k[static_cast<std::size_t>(v)] != 0;
            if (g.has_edge(w, v) != want) swing = false;
        }
        if (swing) out.push_back(w);
    }
    return out;
}

ActivityReport split_active_vertices(const Graph& g, const SplitBipartition& bip) {
    if (!is_valid_bipartition(g, bip)) throw ArgumentError("invalid split bipartition");
    int words = g.words_per_row();
    std::vector<uint64_t> i_mask(static_cast<std::size_t>(words), 0);
    for (int v : bip.independent)
        i_mask[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);

    // neighborhood of u restricted by mask, as words
    auto masked_row = [&](int u, bool restrict_i) {
        std::vector<uint64_t> r(static_cast<std::size_t>(words));
        for (int w = 0; w < words; ++w)
            r[static_cast<std::size_t>(w)] =
                g.row(u)[w] & (restrict_i ? i_mask[static_cast<std::size_t>(w)] : ~0ull);
        return r;
    };
    auto subset = [&](const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
        for (int w = 0; w < words; ++w)
            if (a[static_cast<std::size_t>(w)] & ~b[static_cast<std::size_t>(w)]) return false;
        return true;
    };

    std::vector<char> inactive(static_cast<std::size_t>(g.order()), 0);
    for (int pass = 0; pass < 2; ++pass) {
        const auto& side = pass == 0 ? bip.independent : bip.clique;
        bool restrict_i = pass == 1;
        std::vector<std::vector<uint64_t>> rows;
        rows.reserve(side.size());
        for (int u : side) rows.push_back(masked_row(u, restrict_i));
        for (std::size_t i = 0; i < side.size(); ++i) {
            bool comparable_all = true;
            for (std::size_t j = 0; j < side.size() && comparable_all; ++j) {
                if (i == j) continue;
                if (!subset(rows[i], rows[j]) && !subset(rows[j], rows[i]))
                    comparable_all = false;
            }
            if (comparable_all) inactive[static_cast<std::size_t>(side[i])] = 1;
        }
    }
    ActivityReport rep;
    for (int v = 0; v < g.order(); ++v)
        (inactive[static_cast<std::size_t>(v)] ? rep.inactive_vertices : rep.active_vertices)
            .push_back(v);
    return rep;
}

SplitAnalysis analyze_split(const Graph& g) {
    SplitAnalysis a;
    a.bipartitions = bipartitions(g);
    a.balanced = a.bipartitions.size() == 1;
    if (!a.bipartitions.empty()) a.swing = swing_vertices(g, a.bipartitions.front());
    a.universal = universal_vertices(g);
    return a;
}

Graph compose(const Graph& s, const SplitBipartition& bip, const Graph& g) {
    if (!is_valid_bipartition(s, bip)) throw ArgumentError("invalid split bipartition");
    Graph out = disjoint_union(s, g);
    for (int k : bip.clique)
        for (int v = 0; v < g.order(); ++v) out.add_edge(k, s.order() + v);
    return out;
}

bool bipartite_part_has_c4(const Graph& g, const SplitBipartition& bip) {
    if (!is_valid_bipartition(g, bip)) throw ArgumentError("invalid split bipartition");
    // a 4-cycle in S - E(K) means two independent vertices with two common
    // clique neighbors
    for (std::size_t i = 0; i < bip.independent.size(); ++i)
        for (std::size_t j = i + 1; j < bip.independent.size(); ++j)
            if (g.common_neighbors(bip.independent[i], bip.independent[j]) >= 2) return true;
    return false;
}

bool is_decomposable(const Graph& g) {
    int n = g.order();
    if (n <= 1) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1 || g.degree(v) == 0) return true;

    auto chk = is_split(g);
    if (chk.split) {
        auto bips = bipartitions(g);
        if (bips.size() == 1) {
            bool degree_ok = true;
            for (int v = 0; v < n && degree_ok; ++v) {
                int d = g.degree(v);
                if (d == 0 || d == 1 || d == n - 1) degree_ok = false;
            }
            if (degree_ok && !bipartite_part_has_c4(g, bips.front())) return false;
        }
    }

    if (n > 12)
        throw CapError("decomposition search capped at order 12 (got " + std::to_string(n) + ")");

    std::vector<uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1ull << v;
        adj[static_cast<std::size_t>(v)] |= 1ull << u;
    }
    uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (uint64_t w = 1; w < full; ++w) {
        uint64_t k1 = 0, i1 = 0;
        bool ok = true;
        int wsize = std::popcount(w);
        for (int v = 0; v < n && ok; ++v) {
            if ((w >> v) & 1) continue;
            uint64_t hits = adj[static_cast<std::size_t>(v)] & w;
            if (hits == w) k1 |= 1ull << v;
            else if (hits == 0) i1 |= 1ull << v;
            else ok = false;
        }
        (void)wsize;
        if (!ok) continue;
        for (int v = 0; v < n && ok; ++v) {
            uint64_t bit = 1ull << v;
            if (k1 & bit) {
                if ((adj[static_cast<std::size_t>(v)] & k1) != (k1 ^ bit)) ok = false;
            } else if (i1 & bit) {
                if (adj[static_cast<std::size_t>(v)] & i1) ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool is_prime(const Graph& g) {
    if (!is_active_graph(g)) return false;
    auto chk = is_split(g);
    if (chk.split && g.order() > 0) {
        bool no_leaves = true;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) <= 1) no_leaves = false;
        if (no_leaves) {
            auto bips = bipartitions(g);
            if (bips.size() == 1 && !bipartite_part_has_c4(g, bips.front())) return true;
        }
    }
    return !is_decomposable(g);
}

} // namespace twoswitch
