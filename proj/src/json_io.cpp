#include "twoswitch/json_io.hpp"

#include <sstream>

namespace twoswitch {

ordered_json to_json(const Census4& c) {
    return ordered_json{{"K4bar", c.k4bar}, {"D4bar", c.d4bar}, {"2K2", c.two_k2},
                        {"U4bar", c.u4bar}, {"P4", c.p4},       {"S4", c.s4},
                        {"S4bar", c.s4bar}, {"U4", c.u4},       {"C4", c.c4},
                        {"D4", c.d4},       {"K4", c.k4}};
}

ordered_json to_json(const CountSummary& s) {
    return ordered_json{{"dpe", s.dpe}, {"p4", s.p4},           {"c4", s.c4},
                        {"k3", s.k3},   {"k4", s.k4},           {"zagreb1", s.zagreb1},
                        {"zagreb2", s.zagreb2}};
}

ordered_json to_json(const ActivityReport& r) {
    return ordered_json{{"active", r.active_vertices}, {"inactive", r.inactive_vertices}};
}

ordered_json to_json(const SplitAnalysis& a) {
    ordered_json bips = ordered_json::array();
    for (const auto& b : a.bipartitions)
        bips.push_back(ordered_json::array({b.clique, b.independent}));
    return ordered_json{{"bipartitions", bips},
                        {"balanced", a.balanced},
                        {"swing", a.swing},
                        {"universal", a.universal}};
}

ordered_json to_json(const std::vector<TwoSwitch>& seq) {
    ordered_json out = ordered_json::array();
    for (const TwoSwitch& t : seq) out.push_back(ordered_json::array({t.a, t.b, t.c, t.d}));
    return out;
}

std::vector<TwoSwitch> switches_from_json(const ordered_json& j) {
    std::vector<TwoSwitch> out;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 4)
            throw FormatError("switch entry must be a 4-tuple");
        out.emplace_back(item[0].get<int>(), item[1].get<int>(), item[2].get<int>(),
                         item[3].get<int>());
    }
    return out;
}

ordered_json to_json(const UnicyclicDecomposition& d) {
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : d.forest.edges())
        edges.push_back(ordered_json::array(
            {d.forest_vertices[static_cast<std::size_t>(u)],
             d.forest_vertices[static_cast<std::size_t>(v)]}));
    return ordered_json{{"cycle", d.cycle}, {"forest_edges", edges}};
}

ordered_json to_json(const RealizationGraph& rg) {
    ordered_json verts = ordered_json::array();
    for (const Graph& g : rg.vertices) verts.push_back(g.to_graph6());
    ordered_json edges = ordered_json::array();
    for (auto [i, j] : rg.edges) edges.push_back(ordered_json::array({i, j}));
    return ordered_json{{"sequence", rg.sequence.degrees()},
                        {"filter", to_string(rg.filter)},
                        {"vertices", verts},
                        {"edges", edges}};
}

std::string to_dot(const RealizationGraph& rg) {
    std::ostringstream out;
    out << "graph realization_space {\n";
    for (std::size_t i = 0; i < rg.vertices.size(); ++i)
        out << "  v" << i << " [label=\"" << rg.vertices[i].to_graph6() << "\"];\n";
    for (auto [i, j] : rg.edges) out << "  v" << i << " -- v" << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace twoswitch
