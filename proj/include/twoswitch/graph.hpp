#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twoswitch/bitkernels.hpp"
#include "twoswitch/errors.hpp"

namespace twoswitch {

/// Labeled simple graph on vertices 0..n-1. Adjacency is kept as one bit-row
/// per vertex (ceil(n/64) words); rows stay symmetric and loop-free, and the
/// edge count is cached. Values are cheap to copy; all operations on them are
/// pure functions, so sharing across threads needs no locking.
class Graph {
public:
    static constexpr int kMaxOrder = 16384;

    Graph() : Graph(0) {}
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    /// Parses "n; u-v,u-v,..." (whitespace-insensitive, edge part optional).
    static Graph from_edge_list(std::string_view text);
    /// Parses a graph6 string (short or 4-byte order form, ">>graph6<<" header ok).
    static Graph from_graph6(std::string_view text);

    int order() const { return n_; }
    long long size() const { return m_; }
    int words_per_row() const { return words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(kernels::popcount(row(v), static_cast<std::size_t>(words_)));
    }
    long long common_neighbors(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return static_cast<long long>(
            kernels::popcount_and(row(u), row(v), static_cast<std::size_t>(words_)));
    }
    long long common_neighbors3(int u, int v, int w) const {
        check_vertex(u);
        check_vertex(v);
        check_vertex(w);
        return static_cast<long long>(kernels::popcount_and3(
            row(u), row(v), row(w), static_cast<std::size_t>(words_)));
    }

    const uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
    std::vector<int> neighbors(int v) const;
    /// Edges as (u,v) with u<v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degrees() const;

    /// Construction-phase mutation. Throws on loops, range errors, duplicates.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    /// Flips edge uv without the duplicate check (still no loops).
    void toggle_edge(int u, int v);

    /// Upper-triangle adjacency bits, row-major, packed; equal iff same labeled graph.
    std::vector<uint64_t> edge_key() const;
    std::string to_graph6() const;
    std::string to_edge_list() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
    }
    void set_bit(int u, int v, bool on);

    int n_;
    int words_;
    long long m_;
    std::vector<uint64_t> rows_;
};

struct EdgeKeyHash {
    std::size_t operator()(const std::vector<uint64_t>& key) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (uint64_t w : key) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

/// Vertex degrees as a per-vertex tuple; construction validates 0 <= d_i <= n-1
/// and an even sum. The compact form groups equal degrees in descending order.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> degrees);
    static DegreeSequence of(const Graph& g);
    /// Parses a comma list like "2,2,2,1,1".
    static DegreeSequence parse(std::string_view text);

    int order() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    long long sum() const;
    long long sum_squares() const;

    DegreeSequence dual() const;
    DegreeSequence sorted_desc() const;
    bool is_graphical() const; // Erdős–Gallai
    /// (degree, multiplicity) pairs, degrees descending.
    std::vector<std::pair<int, int>> compact() const;
    std::string compact_string() const; // e.g. "2^3 1^2"

    bool operator==(const DegreeSequence& o) const { return degrees_ == o.degrees_; }

private:
    std::vector<int> degrees_;
};

Graph complement(const Graph& g);
/// Induced subgraph on w, relabeled 0..|w|-1 preserving the order of w.
Graph induced_subgraph(const Graph& g, const std::vector<int>& w);
DegreeSequence degree_sequence(const Graph& g);
DegreeSequence dual_sequence(const DegreeSequence& s);
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);

/// BFS distances from src; disconnected pairs come back as nullopt.
std::vector<std::optional<int>> distances(const Graph& g, int src);
std::optional<int> eccentricity(const Graph& g, int v);
std::optional<int> diameter(const Graph& g); // 0 for order <= 1
std::optional<int> girth(const Graph& g);    // nullopt for forests

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

// small builders used all over the tests and the CLI
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves); // hub is vertex 0

} // namespace twoswitch
