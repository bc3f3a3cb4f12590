#include "twoswitch/census.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "twoswitch/two_switch.hpp"

namespace twoswitch {

long long binom2_checked(long long x) {
    if (x < 2) return 0;
    long long prod;
    if (__builtin_mul_overflow(x, x - 1, &prod)) throw std::overflow_error("binom2 overflow");
    return prod / 2;
}

namespace {

long long mul_checked(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("count overflow");
    return out;
}

// Class of a quadruple by its 6 pair bits (ij, ik, il, jk, jl, kl).
enum QuadClass : int {
    Q_K4BAR, Q_D4BAR, Q_2K2, Q_U4BAR, Q_P4, Q_S4, Q_S4BAR, Q_U4, Q_C4, Q_D4, Q_K4
};

std::array<int, 64> make_quad_table() {
    std::array<int, 64> table{};
    for (int mask = 0; mask < 64; ++mask) {
        int ij = mask & 1, ik = (mask >> 1) & 1, il = (mask >> 2) & 1;
        int jk = (mask >> 3) & 1, jl = (mask >> 4) & 1, kl = (mask >> 5) & 1;
        int deg[4] = {ij + ik + il, ij + jk + jl, ik + jk + kl, il + jl + kl};
        int edges = ij + ik + il + jk + jl + kl;
        int maxd = std::max({deg[0], deg[1], deg[2], deg[3]});
        int cls;
        switch (edges) {
            case 0: cls = Q_K4BAR; break;
            case 1: cls = Q_D4BAR; break;
            case 2: cls = (maxd == 1) ? Q_2K2 : Q_U4BAR; break;
            case 3:
                if (maxd == 3) cls = Q_S4;
                else if (maxd == 2 && (deg[0] == 0 || deg[1] == 0 || deg[2] == 0 || deg[3] == 0))
                    cls = Q_S4BAR;
                else cls = Q_P4;
                break;
            case 4: cls = (maxd == 2) ? Q_C4 : Q_U4; break;
            case 5: cls = Q_D4; break;
            default: cls = Q_K4; break;
        }
        table[static_cast<std::size_t>(mask)] = cls;
    }
    return table;
}

inline bool adj(const Graph& g, int u, int v) {
    return (g.row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
}

} // namespace

Census4 census4(const Graph& g) {
    static const std::array<int, 64> table = make_quad_table();
    std::array<long long, 11> counts{};
    int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int ij = adj(g, i, j);
            for (int k = j + 1; k < n; ++k) {
                int base = ij | (adj(g, i, k) << 1) | (adj(g, j, k) << 3);
                for (int l = k + 1; l < n; ++l) {
                    int mask = base | (adj(g, i, l) << 2) | (adj(g, j, l) << 4) |
                               (adj(g, k, l) << 5);
                    ++counts[static_cast<std::size_t>(table[static_cast<std::size_t>(mask)])];
                }
            }
        }
    Census4 c;
    c.k4bar = counts[Q_K4BAR];
    c.d4bar = counts[Q_D4BAR];
    c.two_k2 = counts[Q_2K2];
    c.u4bar = counts[Q_U4BAR];
    c.p4 = counts[Q_P4];
    c.s4 = counts[Q_S4];
    c.s4bar = counts[Q_S4BAR];
    c.u4 = counts[Q_U4];
    c.c4 = counts[Q_C4];
    c.d4 = counts[Q_D4];
    c.k4 = counts[Q_K4];
    return c;
}

long long dpe(const DegreeSequence& s) {
    long long out = binom2_checked(s.sum() / 2);
    for (int d : s.degrees()) out -= binom2_checked(d);
    return out;
}

long long dpe(const Graph& g) {
    long long direct = 0;
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a != c && a != d && b != c && b != d) ++direct;
        }
    if (direct != dpe(degree_sequence(g)))
        throw std::logic_error("dpe direct count disagrees with the sequence formula");
    return direct;
}

std::pair<long long, long long> p4_k3_counts(const Graph& g) {
    auto deg = g.degrees();
    long long k3_times3 = 0, p4 = 0, edge_sum = 0;
    for (auto [u, v] : g.edges()) {
        long long common = g.common_neighbors(u, v);
        long long du = deg[static_cast<std::size_t>(u)], dv = deg[static_cast<std::size_t>(v)];
        k3_times3 += common;
        p4 += mul_checked(du - 1, dv - 1) - common;
        edge_sum += mul_checked(du - 1, dv - 1);
    }
    long long k3 = k3_times3 / 3;
    if (p4 + 3 * k3 != edge_sum)
        throw std::logic_error("p4/k3 edge-sum identity violated");
    return {p4, k3};
}

long long k3_trace(const Graph& g) {
    // tr(A^3) = sum_v sum_{w in N(v)} |N(v) cap N(w)|
    long long tr = 0;
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) tr += g.common_neighbors(v, w);
    if (tr % 6 != 0) throw std::logic_error("tr(A^3) not divisible by 6");
    return tr / 6;
}

long long trace_a4(const Graph& g) {
    // tr(A^4) = sum_v d_v^2 + sum_{v != w} |N(v) cap N(w)|^2
    long long tr = 0;
    for (int v = 0; v < g.order(); ++v) {
        long long d = g.degree(v);
        tr += d * d;
    }
    for (int v = 0; v < g.order(); ++v)
        for (int w = v + 1; w < g.order(); ++w) {
            long long c = g.common_neighbors(v, w);
            tr += 2 * c * c;
        }
    return tr;
}

long long c4_trace(const Graph& g) {
    auto [z1, z2] = zagreb(g);
    (void)z2;
    long long t = trace_a4(g) + 2 * g.size() - 2 * z1;
    if (t % 8 != 0) throw std::logic_error("tr(A^4) identity residue");
    return t / 8;
}

std::pair<long long, long long> zagreb(const Graph& g) {
    auto deg = g.degrees();
    long long z1 = 0, z2 = 0;
    for (int d : deg) z1 += static_cast<long long>(d) * d;
    for (auto [u, v] : g.edges())
        z2 += mul_checked(deg[static_cast<std::size_t>(u)], deg[static_cast<std::size_t>(v)]);
    return {z1, z2};
}

CountSummary count_summary(const Graph& g) {
    CountSummary s;
    auto deg = g.degrees();
    std::tie(s.zagreb1, s.zagreb2) = zagreb(g);
    s.dpe = binom2_checked(g.size());
    for (int d : deg) s.dpe -= binom2_checked(d);
    std::tie(s.p4, s.k3) = p4_k3_counts(g);

    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) s.c4 += binom2_checked(g.common_neighbors(u, v));
    if (s.c4 % 2 != 0) throw std::logic_error("4-cycle pair count must be even");
    s.c4 /= 2;

    // 4-cliques: common-neighbor row of each edge, restricted to higher ids
    int words = g.words_per_row();
    std::vector<uint64_t> uv(static_cast<std::size_t>(words));
    for (auto [u, v] : g.edges()) {
        for (int w = 0; w < words; ++w) uv[static_cast<std::size_t>(w)] = g.row(u)[w] & g.row(v)[w];
        // zero out ids <= v
        for (int w = 0; w <= (v >> 6); ++w) {
            if (w < (v >> 6))
                uv[static_cast<std::size_t>(w)] = 0;
            else
                uv[static_cast<std::size_t>(w)] &= ~((v & 63) == 63 ? ~0ull : ((1ull << ((v & 63) + 1)) - 1));
        }
        for (int w = 0; w < words; ++w) {
            uint64_t bits = uv[static_cast<std::size_t>(w)];
            while (bits) {
                int x = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                // count common elements of uv and N(x) with id > x
                for (int w2 = x >> 6; w2 < words; ++w2) {
                    uint64_t cand = uv[static_cast<std::size_t>(w2)] & g.row(x)[w2];
                    if (w2 == (x >> 6)) cand &= ((x & 63) == 63 ? 0ull : ~((2ull << (x & 63)) - 1));
                    s.k4 += std::popcount(cand);
                }
            }
        }
    }
    return s;
}

long long degree_formula(const Graph& g) {
    CountSummary s = count_summary(g);
    return 2 * s.dpe + 2 * s.c4 - s.p4;
}

bool census_relations_hold(const Census4& c, const CountSummary& s) {
    bool r1 = s.c4 == c.d4 + c.c4 + 3 * c.k4;
    bool r2 = s.p4 == 4 * c.c4 + c.p4 + 2 * c.u4 + 6 * c.d4 + 12 * c.k4;
    bool r3 = s.dpe == 2 * c.c4 + c.p4 + c.two_k2 + c.u4 + 2 * c.d4 + 3 * c.k4;
    return r1 && r2 && r3;
}

ZagrebRelation degree_zagreb_relation(const Graph& g) {
    CountSummary s = count_summary(g);
    ZagrebRelation rel;
    rel.degree = two_switch_degree(g);
    rel.lhs = rel.degree + s.zagreb2;
    rel.rhs = mul_checked(g.size(), g.size()) + 2 * s.c4 + 3 * s.k3;
    rel.holds = rel.lhs == rel.rhs;
    return rel;
}

} // namespace twoswitch
