#pragma once

// Tight cut decomposition into bricks and braces, driven by ELP-cut
// discovery, plus the brick/brace/decomposable classification.

#include <array>

#include "tightcut/canonical.hpp"
#include "tightcut/elp.hpp"

namespace tightcut {

enum class LeafKind { brick, brace };

struct DecompositionNode {
    Multigraph graph;
    std::optional<Cut> cut;           // internal nodes: the tight cut used
    std::array<int, 2> children{-1, -1};
    std::optional<LeafKind> kind;     // leaves

    DecompositionNode(Multigraph g) : graph(std::move(g)) {}
    bool is_leaf() const { return kind.has_value(); }
};

// Signature used for the invariance comparison; the theorem holds only up
// to multiple edges, so the support is compared by canonical form.
struct LeafSignature {
    LeafKind kind;
    int order;
    std::string canonical_support;

    friend bool operator==(const LeafSignature& a, const LeafSignature& b) {
        return a.kind == b.kind && a.order == b.order &&
               a.canonical_support == b.canonical_support;
    }
    friend bool operator<(const LeafSignature& a, const LeafSignature& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.order != b.order) return a.order < b.order;
        return a.canonical_support < b.canonical_support;
    }
};

struct DecompositionTree {
    std::vector<DecompositionNode> nodes;
    int root = 0;
    int brick_number = 0;
    std::string strategy_label;

    std::vector<int> leaf_indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].is_leaf()) out.push_back(static_cast<int>(i));
        return out;
    }
    // Sorted, so equal multisets compare equal.
    std::vector<LeafSignature> leaf_signatures() const {
        std::vector<LeafSignature> out;
        for (int i : leaf_indices())
            out.push_back({*nodes[static_cast<std::size_t>(i)].kind,
                           nodes[static_cast<std::size_t>(i)].graph.vertex_count(),
                           canonical_simple_form(nodes[static_cast<std::size_t>(i)].graph)});
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

inline const char* strategy_label(CutStrategy s) {
    switch (s) {
        case CutStrategy::lex_first: return "lex-first-elp";
        case CutStrategy::max_min_shore: return "max-min-shore-elp";
        case CutStrategy::reversed_order: return "reversed-order-elp";
    }
    return "unknown";
}

inline int decompose_rec(Multigraph g, CutStrategy strategy, DecompositionTree& tree, int depth) {
    if (depth > g.vertex_count() + 1)
        throw internal_invariant_error("decomposition recursion exceeded the depth bound");
    std::optional<ElpCut> cut = find_nontrivial_elp_cut(g, strategy);
    int index = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back(g);
    if (!cut) {
        tree.nodes[static_cast<std::size_t>(index)].kind =
            is_bipartite(g) ? LeafKind::brace : LeafKind::brick;
        if (*tree.nodes[static_cast<std::size_t>(index)].kind == LeafKind::brick)
            ++tree.brick_number;
        return index;
    }
    auto [a, b] = tight_contractions(g, cut->cut);
    tree.nodes[static_cast<std::size_t>(index)].cut = cut->cut;
    int left = decompose_rec(std::move(a.result), strategy, tree, depth + 1);
    int right = decompose_rec(std::move(b.result), strategy, tree, depth + 1);
    tree.nodes[static_cast<std::size_t>(index)].children = {left, right};
    return index;
}

}  // namespace detail

inline DecompositionTree decompose(const Multigraph& g, CutStrategy strategy = CutStrategy::lex_first) {
    detail::require_matching_covered(g, "decompose");
    DecompositionTree tree;
    tree.strategy_label = detail::strategy_label(strategy);
    tree.root = detail::decompose_rec(g, strategy, tree, 0);
    return tree;
}

enum class GraphClass { brick, brace, decomposable };

// Decomposable iff a nontrivial ELP cut exists; a nontrivial barrier alone is
// not enough (the 4-cycle has one yet is a brace).
inline GraphClass classify(const Multigraph& g) {
    detail::require_matching_covered(g, "classify");
    if (find_nontrivial_elp_cut(g)) return GraphClass::decomposable;
    return is_bipartite(g) ? GraphClass::brace : GraphClass::brick;
}

}  // namespace tightcut
