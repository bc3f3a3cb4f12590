#include "twoswitch/suites.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "twoswitch/census.hpp"
#include "twoswitch/forests.hpp"
#include "twoswitch/generate.hpp"
#include "twoswitch/realization.hpp"
#include "twoswitch/split.hpp"
#include "twoswitch/two_switch.hpp"

namespace twoswitch {

namespace {

class Checker {
public:
    explicit Checker(std::string id) : result_{std::move(id), true, 0, ""} {}
    void expect(bool ok, const Graph& g) {
        ++result_.cases;
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.detail = g.to_graph6();
        }
    }
    void expect(bool ok, const std::string& detail) {
        ++result_.cases;
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.detail = detail;
        }
    }
    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

long long distinct_neighbors(const Graph& g) {
    std::set<std::vector<uint64_t>> seen;
    for (const TwoSwitch& t : enumerate_active_switches(g)) seen.insert(apply(t, g).edge_key());
    return static_cast<long long>(seen.size());
}

void identity_battery(const Graph& g, Checker& formula, Checker& relations, Checker& parity,
                      Checker& bounds, Checker& compl_deg, Checker& zagreb_rel, Checker& traces,
                      Checker& comps, Checker& duality) {
    CountSummary s = count_summary(g);
    Census4 c = census4(g);
    long long enumerated = two_switch_degree(g);
    long long closed = 2 * s.dpe + 2 * s.c4 - s.p4;
    long long census_deg = 2 * c.two_k2 + 2 * c.c4 + c.p4;

    formula.expect(closed == enumerated && census_deg == enumerated &&
                       distinct_neighbors(g) == enumerated,
                   g);
    relations.expect(census_relations_hold(c, s), g);
    parity.expect(((enumerated - c.p4) % 2) == 0, g);
    bounds.expect(enumerated <= 2 * s.dpe && 2 * s.dpe <= g.size() * (g.size() - 1), g);

    Graph gc = complement(g);
    compl_deg.expect(two_switch_degree(gc) == enumerated, g);
    Census4 cc = census4(gc);
    duality.expect(cc.p4 == c.p4 && cc.c4 == c.two_k2 && cc.two_k2 == c.c4, g);

    ZagrebRelation zr = degree_zagreb_relation(g);
    zagreb_rel.expect(zr.holds, g);

    traces.expect(k3_trace(g) == s.k3 && c4_trace(g) == s.c4 &&
                      trace_a4(g) == 8 * s.c4 - 2 * g.size() + 2 * s.zagreb1,
                  g);

    auto parts = components(g);
    if (parts.size() >= 2) {
        long long deg_sum = 0, dpe_sum = 0, cross = 0, cross2 = 0;
        std::vector<long long> sizes;
        for (const auto& p : parts) {
            Graph h = induced_subgraph(g, p);
            deg_sum += two_switch_degree(h);
            dpe_sum += dpe(degree_sequence(h));
            sizes.push_back(h.size());
        }
        for (std::size_t i = 0; i < sizes.size(); ++i)
            for (std::size_t j = i + 1; j < sizes.size(); ++j) {
                cross += sizes[i] * sizes[j];
                cross2 += 2 * sizes[i] * sizes[j];
            }
        comps.expect(enumerated == deg_sum + cross2 && s.dpe == dpe_sum + cross, g);
    }
}

} // namespace

std::vector<CheckResult> run_identity_suite(const SuiteOptions& opt) {
    Checker formula("degree_formula_vs_enumeration");
    Checker relations("census_linear_relations");
    Checker parity("degree_parity_matches_induced_p4");
    Checker bounds("degree_bounded_by_2dpe");
    Checker compl_deg("degree_equals_complement_degree");
    Checker zagreb_rel("zagreb_degree_relation");
    Checker traces("trace_counts_match_direct");
    Checker comps("component_additivity");
    Checker duality("complement_census_duality");
    Checker census_total("census_totals");
    Checker join_law("join_with_clique_keeps_degree");
    Checker girth5("girth5_degree_plus_zagreb2_is_m_squared");
    Checker dpe_agree("dpe_direct_matches_formula");

    for (int n = 0; n <= opt.max_n; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            identity_battery(g, formula, relations, parity, bounds, compl_deg, zagreb_rel,
                             traces, comps, duality);
            long long quads = (n >= 4)
                                  ? static_cast<long long>(n) * (n - 1) * (n - 2) * (n - 3) / 24
                                  : 0;
            census_total.expect(census4(g).total() == quads, g);
            dpe_agree.expect(dpe(g) == dpe(degree_sequence(g)), g);
        });
    }

    // join with K_1..K_3 keeps the degree
    for (int n = 0; n <= std::min(opt.max_n, 5); ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            long long d = two_switch_degree(g);
            for (int k = 1; k <= 3; ++k)
                join_law.expect(two_switch_degree(join(g, complete_graph(k))) == d, g);
        });
    }

    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> order(8, 32);
    std::uniform_real_distribution<double> prob(0.05, 0.95);
    for (int i = 0; i < opt.samples; ++i) {
        Graph g = random_graph(rng, order(rng), prob(rng));
        CountSummary s = count_summary(g);
        Census4 c = census4(g);
        long long enumerated = two_switch_degree(g);
        formula.expect(2 * s.dpe + 2 * s.c4 - s.p4 == enumerated &&
                           2 * c.two_k2 + 2 * c.c4 + c.p4 == enumerated,
                       g);
        relations.expect(census_relations_hold(c, s), g);
        zagreb_rel.expect(degree_zagreb_relation(g).holds, g);
        traces.expect(k3_trace(g) == s.k3 && c4_trace(g) == s.c4, g);
    }

    // girth >= 5 family: paths, long cycles, random trees, Petersen
    std::vector<Graph> sparse;
    for (int n = 5; n <= 12; ++n) {
        sparse.push_back(path_graph(n));
        sparse.push_back(cycle_graph(n));
    }
    for (int i = 0; i < 40; ++i) sparse.push_back(random_tree(rng, 4 + i % 12));
    sparse.push_back(petersen_graph());
    for (const Graph& g : sparse) {
        auto gi = girth(g);
        if (gi && *gi < 5) continue;
        ZagrebRelation zr = degree_zagreb_relation(g);
        girth5.expect(zr.holds && zr.rhs == g.size() * g.size(), g);
    }

    std::vector<CheckResult> out;
    for (Checker* c : {&formula, &relations, &parity, &bounds, &compl_deg, &zagreb_rel, &traces,
                       &comps, &duality, &census_total, &join_law, &girth5, &dpe_agree})
        out.push_back(c->take());
    return out;
}

std::vector<CheckResult> run_activity_suite(const SuiteOptions& opt) {
    Checker invariance("activity_invariant_across_realizations");
    Checker same_degree("equal_degree_vertices_share_activity");
    Checker ecc("inactive_vertex_eccentricity_at_most_2");
    Checker diam("non_active_graph_diameter_at_most_3");
    Checker compl_act("activity_equals_complement_activity");
    Checker regular_act("connected_regular_non_complete_is_active");
    Checker threshold_inactive("threshold_graphs_have_degree_0");
    Checker sharp("diameter_3_sharp_example");

    for (int n = 1; n <= opt.max_n; ++n) {
        for (const DegreeSequence& s : graphical_sequences_sorted(n)) {
            auto realizations = enumerate_realizations(s);
            auto first_act = active_vertices(realizations.front()).active_vertices;
            for (const Graph& g : realizations) {
                ActivityReport rep = active_vertices(g);
                invariance.expect(rep.active_vertices == first_act, g);
                compl_act.expect(active_vertices(complement(g)).active_vertices ==
                                     rep.active_vertices,
                                 g);

                std::vector<char> act(static_cast<std::size_t>(n), 0);
                for (int v : rep.active_vertices) act[static_cast<std::size_t>(v)] = 1;
                bool same_deg_ok = true;
                for (int u = 0; u < n && same_deg_ok; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (g.degree(u) == g.degree(v) &&
                            act[static_cast<std::size_t>(u)] != act[static_cast<std::size_t>(v)]) {
                            same_deg_ok = false;
                            break;
                        }
                same_degree.expect(same_deg_ok, g);

                bool no_isolated = true;
                for (int v = 0; v < n; ++v)
                    if (g.degree(v) == 0) no_isolated = false;
                if (no_isolated) {
                    for (int v : rep.inactive_vertices) {
                        auto e = eccentricity(g, v);
                        ecc.expect(e.has_value() && *e <= 2, g);
                    }
                    if (!rep.inactive_vertices.empty()) {
                        auto d = diameter(g);
                        diam.expect(d.has_value() && *d <= 3, g);
                    }
                }

                auto deg = g.degrees();
                bool regular = std::adjacent_find(deg.begin(), deg.end(),
                                                  std::not_equal_to<int>()) == deg.end();
                if (regular && is_connected(g) && n >= 2 && deg[0] < n - 1)
                    regular_act.expect(rep.inactive_vertices.empty(), g);
            }
        }
        for (const Graph& g : threshold_graphs(n))
            threshold_inactive.expect(two_switch_degree(g) == 0 &&
                                          active_vertices(g).active_vertices.empty(),
                                      g);
    }

    // triangle with two pendant leaves: no isolated vertices, not active,
    // diameter exactly 3
    Graph bull = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    auto d = diameter(bull);
    sharp.expect(d && *d == 3 && !is_active_graph(bull) &&
                     !active_vertices(bull).inactive_vertices.empty(),
                 bull);

    std::vector<CheckResult> out;
    for (Checker* c : {&invariance, &same_degree, &ecc, &diam, &compl_act, &regular_act,
                       &threshold_inactive, &sharp})
        out.push_back(c->take());
    return out;
}

std::vector<CheckResult> run_space_suite(const SuiteOptions& opt) {
    Checker connected("realization_space_connected");
    Checker degrees("metagraph_degree_matches_enumeration");
    Checker nonactive("non_active_member_forces_connected_realizations");
    Checker diam4("diameter_4_member_forces_active_realizations");
    Checker forests("tree_space_regular_of_degree_dpe");
    Checker dual("dual_space_isomorphic_by_complement");
    Checker act_space("active_space_isomorphic");
    Checker split_hered("split_heredity_across_space");

    for (int n = 1; n <= opt.max_n; ++n) {
        for (const DegreeSequence& s : graphical_sequences_sorted(n)) {
            RealizationGraph rg = build_realization_graph(s);
            std::string tag = s.compact_string();
            connected.expect(rg.connected(), tag);

            auto mdeg = rg.metagraph_degrees();
            bool deg_ok = true;
            for (std::size_t i = 0; i < rg.vertices.size(); ++i)
                if (mdeg[i] != two_switch_degree(rg.vertices[i]) ||
                    mdeg[i] != degree_formula(rg.vertices[i]))
                    deg_ok = false;
            degrees.expect(deg_ok, tag);

            bool positive = true;
            for (int dv : s.degrees())
                if (dv <= 0) positive = false;
            bool some_nonactive = false, some_diam4 = false, all_connected = true,
                 all_active = true, some_split = false, all_split = true;
            for (const Graph& g : rg.vertices) {
                if (!is_active_graph(g)) some_nonactive = true;
                auto dm = diameter(g);
                if (dm && *dm >= 4) some_diam4 = true;
                if (!is_connected(g)) all_connected = false;
                if (!active_vertices(g).inactive_vertices.empty()) all_active = false;
                if (is_split(g).split) some_split = true;
                else all_split = false;
            }
            if (positive && some_nonactive) nonactive.expect(all_connected, tag);
            if (some_diam4) diam4.expect(all_active, tag);
            if (some_split) split_hered.expect(all_split, tag);

            if (n <= std::min(opt.max_n, 6)) {
                act_space.expect(active_space(rg).isomorphic, tag);
                dual.expect(verify_dual_isomorphism(s).isomorphic, tag);
            }
        }

        for (const DegreeSequence& s : tree_sequences_sorted(n)) {
            RealizationGraph fs = build_realization_graph(s, SpaceFilter::Forests);
            long long k = dpe(s);
            bool ok = fs.connected() && !fs.vertices.empty();
            for (int dv : fs.metagraph_degrees())
                if (dv != k) ok = false;
            forests.expect(ok, s.compact_string());
        }
    }

    std::vector<CheckResult> out;
    for (Checker* c : {&connected, &degrees, &nonactive, &diam4, &forests, &dual, &act_space,
                       &split_hered})
        out.push_back(c->take());
    return out;
}

} // namespace twoswitch
