#include "twoswitch/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

namespace twoswitch {

Graph::Graph(int n) : n_(n), words_(n > 0 ? (n + 63) / 64 : 1), m_(0) {
    if (n < 0 || n > kMaxOrder)
        throw ArgumentError("graph order " + std::to_string(n) + " out of range");
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::set_bit(int u, int v, bool on) {
    uint64_t* r = rows_.data() + static_cast<std::size_t>(u) * words_;
    uint64_t mask = 1ull << (v & 63);
    if (on)
        r[static_cast<std::size_t>(v) >> 6] |= mask;
    else
        r[static_cast<std::size_t>(v) >> 6] &= ~mask;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("loop edge at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw ArgumentError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    set_bit(u, v, true);
    set_bit(v, u, true);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v))
        throw ArgumentError("missing edge " + std::to_string(u) + "-" + std::to_string(v));
    set_bit(u, v, false);
    set_bit(v, u, false);
    --m_;
}

void Graph::toggle_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("loop edge at vertex " + std::to_string(u));
    bool present = has_edge(u, v);
    set_bit(u, v, !present);
    set_bit(v, u, !present);
    m_ += present ? -1 : 1;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        uint64_t bits = r[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
}

std::vector<uint64_t> Graph::edge_key() const {
    long long pairs = static_cast<long long>(n_) * (n_ - 1) / 2;
    std::vector<uint64_t> key(static_cast<std::size_t>((pairs + 63) / 64) + 1, 0);
    key[0] = static_cast<uint64_t>(n_); // distinguish orders with equal bit bodies
    long long pos = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v, ++pos)
            if (has_edge(u, v)) key[static_cast<std::size_t>(1 + (pos >> 6))] |= 1ull << (pos & 63);
    return key;
}

// ---- edge-list text format -------------------------------------------------

namespace {

std::string strip_ws(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

int parse_int(std::string_view tok, const char* what) {
    if (tok.empty()) throw FormatError(std::string("empty ") + what);
    long long v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9')
            throw FormatError(std::string("bad ") + what + " token '" + std::string(tok) + "'");
        v = v * 10 + (c - '0');
        if (v > Graph::kMaxOrder) throw FormatError(std::string(what) + " too large: " + std::string(tok));
    }
    return static_cast<int>(v);
}

} // namespace

Graph Graph::from_edge_list(std::string_view text) {
    std::string s = strip_ws(text);
    auto semi = s.find(';');
    if (semi == std::string::npos) throw FormatError("edge list needs 'n; ...' with a semicolon");
    int n = parse_int(std::string_view(s).substr(0, semi), "vertex count");
    Graph g(n);
    std::string_view body = std::string_view(s).substr(semi + 1);
    if (body.empty()) return g;
    std::size_t start = 0;
    while (start <= body.size()) {
        auto comma = body.find(',', start);
        std::string_view tok = body.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start);
        auto dash = tok.find('-');
        if (dash == std::string_view::npos)
            throw FormatError("bad edge token '" + std::string(tok) + "'");
        int u = parse_int(tok.substr(0, dash), "vertex");
        int v = parse_int(tok.substr(dash + 1), "vertex");
        if (u >= n || v >= n)
            throw FormatError("vertex out of range in edge token '" + std::string(tok) + "'");
        if (u == v) throw FormatError("loop edge token '" + std::string(tok) + "'");
        if (g.has_edge(u, v)) throw FormatError("duplicate edge token '" + std::string(tok) + "'");
        g.add_edge(u, v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return g;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << n_ << ';';
    bool first = true;
    for (auto [u, v] : edges()) {
        out << (first ? " " : ",") << u << '-' << v;
        first = false;
    }
    return out.str();
}

// ---- graph6 ----------------------------------------------------------------

Graph Graph::from_graph6(std::string_view text) {
    std::string_view s = text;
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw FormatError("empty graph6 string");

    auto need = [&](std::size_t k) {
        if (s.size() < k) throw FormatError("truncated graph6 string");
    };
    auto val = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw FormatError("graph6 byte out of range at position " + std::to_string(i));
        return c - 63;
    };

    long long n = 0;
    std::size_t at = 0;
    if (s[0] == '~') {
        need(2);
        if (s[1] == '~') throw FormatError("graph6 orders beyond 258047 unsupported");
        need(4);
        n = (static_cast<long long>(val(1)) << 12) | (val(2) << 6) | val(3);
        at = 4;
    } else {
        n = val(0);
        at = 1;
    }
    if (n > Graph::kMaxOrder) throw FormatError("graph6 order too large");

    long long bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() != at + body) throw FormatError("graph6 length mismatch");

    Graph g(static_cast<int>(n));
    long long pos = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++pos) {
            int chunk = val(at + static_cast<std::size_t>(pos / 6));
            int bit = (chunk >> (5 - pos % 6)) & 1;
            if (bit) g.add_edge(i, j);
        }
    }
    // padding bits must be zero for a bit-exact round trip
    for (long long p = bits; p < static_cast<long long>(body) * 6; ++p) {
        int chunk = val(at + static_cast<std::size_t>(p / 6));
        if ((chunk >> (5 - p % 6)) & 1) throw FormatError("nonzero graph6 padding");
    }
    return g;
}

std::string Graph::to_graph6() const {
    std::string out;
    if (n_ <= 62) {
        out.push_back(static_cast<char>(n_ + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n_ >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n_ >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n_ & 63) + 63));
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

// ---- degree sequences --------------------------------------------------------

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    int n = order();
    long long total = 0;
    for (int d : degrees_) {
        if (d < 0 || d > n - 1)
            throw DomainError("degree " + std::to_string(d) + " out of range for order " +
                              std::to_string(n));
        total += d;
    }
    if (total % 2 != 0) throw DomainError("degree sum is odd");
}

DegreeSequence DegreeSequence::of(const Graph& g) { return DegreeSequence(g.degrees()); }

DegreeSequence DegreeSequence::parse(std::string_view text) {
    std::string s = strip_ws(text);
    if (s.empty()) return DegreeSequence(std::vector<int>{});
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        std::string_view tok = std::string_view(s).substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_int(tok, "degree"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return DegreeSequence(std::move(out));
}

long long DegreeSequence::sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0ll);
}

long long DegreeSequence::sum_squares() const {
    long long s = 0;
    for (int d : degrees_) s += static_cast<long long>(d) * d;
    return s;
}

DegreeSequence DegreeSequence::dual() const {
    int n = order();
    std::vector<int> out(degrees_.size());
    for (std::size_t i = 0; i < degrees_.size(); ++i) out[i] = n - 1 - degrees_[i];
    return DegreeSequence(std::move(out));
}

DegreeSequence DegreeSequence::sorted_desc() const {
    std::vector<int> out = degrees_;
    std::sort(out.begin(), out.end(), std::greater<int>());
    return DegreeSequence(std::move(out));
}

bool DegreeSequence::is_graphical() const {
    std::vector<int> d = degrees_;
    std::sort(d.begin(), d.end(), std::greater<int>());
    int n = order();
    long long total = sum();
    if (total % 2 != 0) return false;
    std::vector<long long> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + d[static_cast<std::size_t>(i)];
    for (int k = 1; k <= n; ++k) {
        long long lhs = prefix[static_cast<std::size_t>(k)];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(d[static_cast<std::size_t>(i)], k);
        if (lhs > rhs) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> DegreeSequence::compact() const {
    std::vector<int> d = degrees_;
    std::sort(d.begin(), d.end(), std::greater<int>());
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < d.size();) {
        std::size_t j = i;
        while (j < d.size() && d[j] == d[i]) ++j;
        out.emplace_back(d[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

std::string DegreeSequence::compact_string() const {
    std::ostringstream out;
    bool first = true;
    for (auto [deg, mult] : compact()) {
        if (!first) out << ' ';
        out << deg << '^' << mult;
        first = false;
    }
    return out.str();
}

// ---- elementary operations ---------------------------------------------------

Graph complement(const Graph& g) {
    int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& w) {
    Graph h(static_cast<int>(w.size()));
    for (int v : w)
        if (v < 0 || v >= g.order())
            throw ArgumentError("vertex " + std::to_string(v) + " out of range");
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (g.has_edge(w[i], w[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence::of(g); }

DegreeSequence dual_sequence(const DegreeSequence& s) { return s.dual(); }

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out.back().push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    q.push(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<std::optional<int>> distances(const Graph& g, int src) {
    if (src < 0 || src >= g.order()) throw ArgumentError("source vertex out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    std::vector<std::optional<int>> out(dist.size());
    for (std::size_t i = 0; i < dist.size(); ++i)
        out[i] = dist[i] < 0 ? std::nullopt : std::optional<int>(dist[i]);
    return out;
}

std::optional<int> eccentricity(const Graph& g, int v) {
    auto d = distances(g, v);
    int ecc = 0;
    for (const auto& x : d) {
        if (!x) return std::nullopt;
        ecc = std::max(ecc, *x);
    }
    return ecc;
}

std::optional<int> diameter(const Graph& g) {
    if (g.order() <= 1) return 0;
    int diam = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto e = eccentricity(g, v);
        if (!e) return std::nullopt;
        diam = std::max(diam, *e);
    }
    return diam;
}

std::optional<int> girth(const Graph& g) {
    // shortest cycle through uv = 1 + dist(u,v) in g - uv; min over edges
    std::optional<int> best;
    for (auto [u, v] : g.edges()) {
        Graph h = g;
        h.remove_edge(u, v);
        auto d = distances(h, u)[static_cast<std::size_t>(v)];
        if (d && (!best || *d + 1 < *best)) best = *d + 1;
    }
    return best;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

} // namespace twoswitch
