#pragma once

#include "twoswitch/graph.hpp"

namespace twoswitch {

/// Induced counts of the 11 order-4 isomorphism classes. A quadruple is
/// classified by (edge count, within-quadruple degree multiset):
///   0 edges  K4bar   empty
///   1 edge   D4bar   single edge (complement of the diamond)
///   2 edges  2K2     degrees 1111; U4bar = P3 plus isolated (degrees 2110,
///            complement of the paw)
///   3 edges  P4      degrees 2211; S4 = claw (3111); S4bar = triangle plus
///            isolated (2220, complement of the claw)
///   4 edges  C4      degrees 2222; U4 = paw (3221)
///   5 edges  D4      diamond
///   6 edges  K4
struct Census4 {
    long long k4bar = 0, d4bar = 0, two_k2 = 0, u4bar = 0, p4 = 0, s4 = 0, s4bar = 0, u4 = 0,
              c4 = 0, d4 = 0, k4 = 0;
    long long total() const {
        return k4bar + d4bar + two_k2 + u4bar + p4 + s4 + s4bar + u4 + c4 + d4 + k4;
    }
    bool operator==(const Census4&) const = default;
};

Census4 census4(const Graph& g);

/// Subgraph (not induced) counters and the Zagreb indices.
struct CountSummary {
    long long dpe = 0;     // unordered pairs of disjoint edges
    long long p4 = 0;      // paths on 4 vertices
    long long c4 = 0;      // 4-cycles
    long long k3 = 0;      // triangles
    long long k4 = 0;      // 4-cliques
    long long zagreb1 = 0; // sum of squared degrees
    long long zagreb2 = 0; // sum of degree products over edges
    bool operator==(const CountSummary&) const = default;
};

CountSummary count_summary(const Graph& g);

/// dpe from the degree sequence alone: C(m,2) - sum_v C(d_v,2).
long long dpe(const DegreeSequence& s);
/// Direct pair count; cross-checked against the sequence formula.
long long dpe(const Graph& g);

/// Directly counted (p4, k3); asserts p4 + 3 k3 = sum over edges of
/// (d_u - 1)(d_v - 1).
std::pair<long long, long long> p4_k3_counts(const Graph& g);

long long k3_trace(const Graph& g); // tr(A^3)/6
long long c4_trace(const Graph& g); // from tr(A^4) = 8 c4 - 2m + 2 zagreb1
long long trace_a4(const Graph& g);

std::pair<long long, long long> zagreb(const Graph& g); // (zagreb1, zagreb2)

/// Closed-form 2-switch-degree: 2 dpe(s) + 2 c4 - p4. Equals the enumerated
/// degree on every graph (the 4-clique contributions cancel exactly).
long long degree_formula(const Graph& g);

/// The three linear relations tying subgraph counts to the induced census:
///   c4  = |D4| + |C4| + 3 k4
///   p4  = 4|C4| + |P4| + 2|U4| + 6|D4| + 12 k4
///   dpe = 2|C4| + |P4| + |2K2| + |U4| + 2|D4| + 3 k4
bool census_relations_hold(const Census4& c, const CountSummary& s);

struct ZagrebRelation {
    long long degree;     // enumerated 2-switch-degree
    long long lhs;        // degree + zagreb2
    long long rhs;        // m^2 + 2 c4 + 3 k3
    bool holds = false;
};

/// deg(G) + zagreb2(G) = m^2 + 2 c4 + 3 k3, with degree taken from direct
/// enumeration; for girth >= 5 the right side collapses to m^2.
ZagrebRelation degree_zagreb_relation(const Graph& g);

/// x*(x-1)/2 with overflow detection.
long long binom2_checked(long long x);

} // namespace twoswitch
