#pragma once

// JSON views of every result type. nlohmann::json keeps keys sorted, which
// makes every emission byte-deterministic; payloads carry enough to re-parse
// (graphs round-trip standalone, cuts against their graph).

#include <json.hpp>

#include "tightcut/laminar.hpp"
#include "tightcut/oracle.hpp"

namespace tightcut {

using json = nlohmann::json;

inline json to_json(const VertexSet& s) { return json(s.ids()); }

inline json to_json(const Multigraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"edges", edges}, {"n", g.vertex_count()}};
}

inline Multigraph multigraph_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return Multigraph(j.at("n").get<int>(), std::move(edges));
}

inline json to_json(const Multigraph& g, const Cut& c) {
    json edges = json::array();
    for (int e : c.edge_ids()) {
        auto [u, v] = g.endpoints(e);
        edges.push_back({u, v});
    }
    return json{{"edge_ids", c.edge_ids()},
                {"edges", edges},
                {"shore", to_json(c.shore())},
                {"trivial", c.trivial()}};
}

inline Cut cut_from_json(const Multigraph& g, const json& j) {
    std::vector<int> shore = j.at("shore").get<std::vector<int>>();
    return boundary(g, VertexSet(std::move(shore)));
}

inline json to_json(const Matching& m, const Multigraph& g) {
    json edges = json::array();
    for (int e : m.edge_ids()) {
        auto [u, v] = g.endpoints(e);
        edges.push_back({u, v});
    }
    return json{{"edge_ids", m.edge_ids()}, {"edges", edges}};
}

inline json to_json(const Barrier& b) {
    json comps = json::array();
    for (const VertexSet& c : b.odd_components) comps.push_back(to_json(c));
    return json{{"members", to_json(b.members)}, {"odd_components", comps}};
}

inline json to_json(const TwoSeparation& s) {
    json comps = json::array();
    for (const VertexSet& c : s.even_components) comps.push_back(to_json(c));
    return json{{"even_components", comps}, {"pair", {s.u, s.v}}};
}

inline json to_json(const Multigraph& g, const ElpCut& c) {
    json out{{"kind", c.kind == ElpCut::Kind::barrier_cut ? "barrier_cut" : "separation_cut"},
             {"cut", to_json(g, c.cut)},
             {"nontrivial", c.nontrivial}};
    if (c.barrier) {
        out["barrier"] = to_json(*c.barrier);
        out["component_index"] = c.component_index;
    }
    if (c.sep) out["separation"] = to_json(*c.sep);
    return out;
}

inline json to_json(const Multigraph& g, const DeficiencyWitness& w) {
    (void)g;
    return json{{"a_set", to_json(w.a_set)}, {"d_set", to_json(w.d_set)},
                {"deficiency", w.deficiency}};
}

inline json to_json(const LaminarCertificate& c) {
    return json{{"detail", c.detail},
                {"nontrivial", c.nontrivial},
                {"ok", c.ok()},
                {"placement_valid", c.placement_valid},
                {"structure_valid", c.structure_valid}};
}

inline json to_json(const Multigraph& g, const LaminarResult& r) {
    json out;
    if (r.holds_barrier()) {
        const ShelteredBarrierResult& sb = r.barrier();
        out["type"] = "sheltered_barrier";
        out["barrier"] = to_json(sb.barrier);
        out["shore_side"] = sb.side == ShoreSide::shore ? "shore" : "complement";
        out["shore_set"] = to_json(sb.shore_set);
    } else {
        const LaminarSeparationResult& ls = r.separation();
        out["type"] = "laminar_separation";
        out["separation"] = to_json(ls.sep);
        out["cut"] = to_json(g, ls.cut);
    }
    out["certificate"] = to_json(r.certificate);
    if (r.divergence) out["divergence"] = *r.divergence;
    return out;
}

inline json tree_node_to_json(const DecompositionTree& t, int index) {
    const DecompositionNode& node = t.nodes[static_cast<std::size_t>(index)];
    json out{{"graph", to_json(node.graph)}};
    if (node.is_leaf()) {
        out["kind"] = *node.kind == LeafKind::brick ? "brick" : "brace";
    } else {
        out["cut"] = to_json(node.graph, *node.cut);
        out["children"] = {tree_node_to_json(t, node.children[0]),
                           tree_node_to_json(t, node.children[1])};
    }
    return out;
}

inline json to_json(const DecompositionTree& t) {
    return json{{"brick_number", t.brick_number},
                {"root", tree_node_to_json(t, t.root)},
                {"strategy", t.strategy_label}};
}

// Re-parse of a serialized tree; node graphs are embedded so the result is
// standalone.
struct ParsedTreeNode {
    Multigraph graph;
    std::optional<Cut> cut;
    std::vector<ParsedTreeNode> children;
    std::optional<LeafKind> kind;
};

inline ParsedTreeNode tree_node_from_json(const json& j) {
    ParsedTreeNode node{multigraph_from_json(j.at("graph")), std::nullopt, {}, std::nullopt};
    if (j.contains("kind")) {
        node.kind = j.at("kind") == "brick" ? LeafKind::brick : LeafKind::brace;
    } else {
        node.cut = cut_from_json(node.graph, j.at("cut"));
        for (const auto& child : j.at("children")) node.children.push_back(tree_node_from_json(child));
    }
    return node;
}

inline json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        json jc{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) jc["witness"] = c.witness;
        checks.push_back(jc);
    }
    return json{{"checks", checks},
                {"elapsed_seconds", r.elapsed_seconds},
                {"graph", r.graph_id},
                {"matching_covered", r.matching_covered},
                {"nontrivial_tight_cuts", r.nontrivial_tight_cuts},
                {"pass", r.all_pass()}};
}

}  // namespace tightcut
