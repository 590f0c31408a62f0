#pragma once

// Barriers, 2-separations, their associated cuts (ELP cuts), discovery of a
// nontrivial ELP cut, and the sheltered/avoiding placement of a structure
// relative to a tight cut.

#include "tightcut/tightcuts.hpp"

namespace tightcut {

// Vertex set B with o(G-B) = |B|. For a matching covered graph B is then
// independent and every component of G-B is odd; both are enforced here.
struct Barrier {
    VertexSet members;
    std::vector<VertexSet> odd_components;

    bool nontrivial() const { return members.size() >= 2; }
};

struct TwoSeparation {
    int u = 0;
    int v = 0;
    std::vector<VertexSet> even_components;

    VertexSet pair() const { return VertexSet{u, v}; }
};

inline std::optional<Barrier> is_barrier(const Multigraph& g, const VertexSet& s) {
    g.check_set(s);
    if (s.empty()) throw domain_error("a barrier is a nonempty vertex set");
    ComponentSplit split = components(g, s);
    if (split.odd_count != s.size()) return std::nullopt;
    if (split.odd_count != static_cast<int>(split.parts.size())) return std::nullopt;
    for (int a : s)
        for (int b : g.neighbors(a))
            if (b > a && s.contains(b)) return std::nullopt;  // not independent
    return Barrier{s, std::move(split.parts)};
}

inline std::optional<TwoSeparation> is_two_separation(const Multigraph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw domain_error("a 2-separation needs two distinct vertices");
    if (u > v) std::swap(u, v);
    ComponentSplit split = components(g, VertexSet{u, v});
    if (split.parts.size() < 2 || split.odd_count != 0) return std::nullopt;
    return TwoSeparation{u, v, std::move(split.parts)};
}

inline std::vector<TwoSeparation> find_two_separations(const Multigraph& g) {
    std::vector<TwoSeparation> out;
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v)
            if (auto sep = is_two_separation(g, u, v)) out.push_back(std::move(*sep));
    return out;
}

// Pair-scan discovery: the first pair {u,v} without a perfect matching in
// g-{u,v} yields the barrier a_set(g-{u,v}) + {u,v}. Absent iff bicritical.
inline std::optional<Barrier> find_nontrivial_barrier(const Multigraph& g) {
    detail::require_matching_covered(g, "find_nontrivial_barrier");
    if (g.vertex_count() < 4) return std::nullopt;
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v) {
            InducedSubgraph rest = delete_vertices(g, VertexSet{u, v});
            if (has_perfect_matching(rest.graph)) continue;
            DeficiencyWitness w = deficiency_witness(rest.graph);
            std::vector<int> members{u, v};
            for (int a : w.a_set)
                members.push_back(rest.to_original_vertex[static_cast<std::size_t>(a)]);
            auto barrier = is_barrier(g, VertexSet(std::move(members)));
            if (!barrier || !barrier->nontrivial())
                throw internal_invariant_error("witness set is not a nontrivial barrier");
            return barrier;
        }
    return std::nullopt;
}

// One cut per odd component of g-B, each verified tight.
inline std::vector<Cut> barrier_cuts(const Multigraph& g, const Barrier& b) {
    std::vector<Cut> out;
    for (const VertexSet& comp : b.odd_components) {
        Cut c = boundary(g, comp);
        if (!is_tight(g, c)) throw internal_invariant_error("barrier-cut is not tight");
        out.push_back(std::move(c));
    }
    return out;
}

// The pair (boundary(side+u), boundary(side+v)); side must be a nonempty
// proper union of components of g - {u,v}.
inline std::pair<Cut, Cut> separation_cut_pair(const Multigraph& g, const TwoSeparation& sep,
                                               const VertexSet& side) {
    VertexSet rest = side;
    int used = 0;
    for (const VertexSet& comp : sep.even_components) {
        if (set_intersection(comp, side).empty()) continue;
        if (!comp.subset_of(side)) throw domain_error("side must be a union of components");
        ++used;
        rest = set_difference(rest, comp);
    }
    if (!rest.empty()) throw domain_error("side contains vertices outside the components");
    if (used == 0 || used == static_cast<int>(sep.even_components.size()))
        throw domain_error("side must be a nonempty proper union of components");
    Cut a = boundary(g, side.with(sep.u));
    Cut b = boundary(g, side.with(sep.v));
    if (!is_tight(g, a) || !is_tight(g, b))
        throw internal_invariant_error("2-separation cut is not tight");
    return {std::move(a), std::move(b)};
}

// ------------------------------------------------------------------ ElpCut

struct ElpCut {
    enum class Kind { barrier_cut, separation_cut };
    Kind kind;
    std::optional<Barrier> barrier;
    int component_index = -1;  // barrier-cut: which odd component
    std::optional<TwoSeparation> sep;
    Cut cut;
    bool nontrivial = false;
};

enum class CutStrategy {
    lex_first,       // first cut in the canonical scan order
    max_min_shore,   // cut maximizing the smaller shore, ties by canonical shore
    reversed_order,  // canonical scan under the reversed vertex labeling
};

namespace detail {

inline ElpCut make_separation_elp_cut(const TwoSeparation& sep, Cut cut) {
    ElpCut out;
    out.kind = ElpCut::Kind::separation_cut;
    out.sep = sep;
    out.nontrivial = !cut.trivial();
    out.cut = std::move(cut);
    return out;
}

inline ElpCut make_barrier_elp_cut(const Multigraph& g, const Barrier& b, int comp_index) {
    Cut cut = boundary(g, b.odd_components[static_cast<std::size_t>(comp_index)]);
    if (!is_tight(g, cut)) throw internal_invariant_error("barrier-cut is not tight");
    ElpCut out;
    out.kind = ElpCut::Kind::barrier_cut;
    out.barrier = b;
    out.component_index = comp_index;
    out.nontrivial = !cut.trivial();
    out.cut = std::move(cut);
    return out;
}

inline bool scan_bipartite_barrier_cuts(const Multigraph& g, std::vector<ElpCut>& found,
                                        bool exhaustive);

// Canonical scan: 2-separations in lexicographic pair order with the first
// component as side, then barriers from failing pairs with their nonsingleton
// components, then the bipartite quadruple completion. Yields every candidate
// when exhaustive, else stops at the first.
inline std::vector<ElpCut> scan_nontrivial_elp_cuts(const Multigraph& g, bool exhaustive) {
    std::vector<ElpCut> found;
    for (const TwoSeparation& sep : find_two_separations(g)) {
        if (exhaustive) {
            for (const VertexSet& comp : sep.even_components) {
                auto cuts = separation_cut_pair(g, sep, comp);
                found.push_back(make_separation_elp_cut(sep, std::move(cuts.first)));
                found.push_back(make_separation_elp_cut(sep, std::move(cuts.second)));
            }
        } else {
            auto cuts = separation_cut_pair(g, sep, sep.even_components.front());
            found.push_back(make_separation_elp_cut(sep, std::move(cuts.first)));
            return found;
        }
    }
    if (g.vertex_count() < 4) return found;  // no room for a nontrivial odd shore
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v) {
            InducedSubgraph rest = delete_vertices(g, VertexSet{u, v});
            if (has_perfect_matching(rest.graph)) continue;
            DeficiencyWitness w = deficiency_witness(rest.graph);
            std::vector<int> members{u, v};
            for (int a : w.a_set)
                members.push_back(rest.to_original_vertex[static_cast<std::size_t>(a)]);
            auto barrier = is_barrier(g, VertexSet(std::move(members)));
            if (!barrier) throw internal_invariant_error("witness set is not a barrier");
            for (std::size_t i = 0; i < barrier->odd_components.size(); ++i) {
                if (barrier->odd_components[i].size() < 2) continue;
                found.push_back(make_barrier_elp_cut(g, *barrier, static_cast<int>(i)));
                if (!exhaustive) return found;
            }
        }
    if (exhaustive || found.empty()) scan_bipartite_barrier_cuts(g, found, exhaustive);
    return found;
}

inline Multigraph reverse_labels(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.push_back({n + 1 - u, n + 1 - v});
    return Multigraph(n, std::move(edges));
}

// Hall violator of a bipartite graph without a perfect matching: the side-a
// vertices reachable by alternating paths from exposed side-a vertices. Then
// |N(S)| = |S| - (number of exposed side-a vertices) < |S|.
inline VertexSet hall_violator(const Multigraph& g, const VertexSet& side_a) {
    std::vector<int> mate = blossom_mates(g);
    std::vector<bool> reached(static_cast<std::size_t>(g.vertex_count()) + 1, false);
    std::vector<int> queue;
    for (int v : side_a)
        if (!mate[static_cast<std::size_t>(v)]) {
            reached[static_cast<std::size_t>(v)] = true;
            queue.push_back(v);
        }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int a = queue[i];
        for (int b : g.neighbors(a)) {
            if (reached[static_cast<std::size_t>(b)]) continue;
            reached[static_cast<std::size_t>(b)] = true;
            int back = mate[static_cast<std::size_t>(b)];
            if (back && !reached[static_cast<std::size_t>(back)]) {
                reached[static_cast<std::size_t>(back)] = true;
                queue.push_back(back);
            }
        }
    }
    std::vector<int> out;
    for (int v : side_a)
        if (reached[static_cast<std::size_t>(v)]) out.push_back(v);
    return VertexSet(std::move(out));
}

// Bipartite completion of the barrier scan. Failing pairs find every
// nontrivial barrier-cut of a nonbipartite graph (a barrier whose components
// are all singletons forces a bipartition), but in bipartite graphs they can
// all land on the two parts. A non-brace always has a failing quadruple
// {a1,a2,b1,b2}; the Hall violator S of the remainder has |N(S)| = |S|+1 in
// g, and N(S) is then a barrier with a nonsingleton component.
inline bool scan_bipartite_barrier_cuts(const Multigraph& g, std::vector<ElpCut>& found,
                                        bool exhaustive) {
    if (g.vertex_count() < 6 || !is_bipartite(g)) return false;
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    color[1] = 1;
    std::vector<int> queue{1};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int w : g.neighbors(queue[i]))
            if (!color[static_cast<std::size_t>(w)]) {
                color[static_cast<std::size_t>(w)] = -color[static_cast<std::size_t>(queue[i])];
                queue.push_back(w);
            }
    std::vector<int> part_a, part_b;
    for (int v = 1; v <= g.vertex_count(); ++v)
        (color[static_cast<std::size_t>(v)] == 1 ? part_a : part_b).push_back(v);

    for (std::size_t i = 0; i < part_a.size(); ++i)
        for (std::size_t j = i + 1; j < part_a.size(); ++j)
            for (std::size_t k = 0; k < part_b.size(); ++k)
                for (std::size_t l = k + 1; l < part_b.size(); ++l) {
                    VertexSet removed{part_a[i], part_a[j], part_b[k], part_b[l]};
                    InducedSubgraph rest = delete_vertices(g, removed);
                    if (has_perfect_matching(rest.graph)) continue;
                    for (const std::vector<int>& side : {part_a, part_b}) {
                        std::vector<int> sub_side;
                        for (int v : side)
                            if (!removed.contains(v))
                                sub_side.push_back(rest.to_sub_vertex[static_cast<std::size_t>(v)]);
                        VertexSet violator = hall_violator(rest.graph, VertexSet(sub_side));
                        if (violator.empty()) continue;
                        std::vector<int> members;
                        for (int v : violator)
                            members.push_back(rest.to_original_vertex[static_cast<std::size_t>(v)]);
                        VertexSet s0(std::move(members));
                        std::vector<int> nbrs;
                        for (int v : s0)
                            for (int w : g.neighbors(v))
                                if (!s0.contains(w)) nbrs.push_back(w);
                        auto barrier = is_barrier(g, VertexSet(std::move(nbrs)));
                        if (!barrier)
                            throw internal_invariant_error(
                                "surplus-one neighbourhood is not a barrier");
                        bool emitted = false;
                        for (std::size_t ci = 0; ci < barrier->odd_components.size(); ++ci) {
                            if (barrier->odd_components[ci].size() < 2) continue;
                            found.push_back(
                                make_barrier_elp_cut(g, *barrier, static_cast<int>(ci)));
                            emitted = true;
                            if (!exhaustive) return true;
                        }
                        if (!emitted)
                            throw internal_invariant_error(
                                "surplus-one barrier has only singleton components");
                    }
                }
    return false;
}

}  // namespace detail

// A nontrivial ELP cut of g, or absent when none exists. The scan order is
// fixed by the strategy so decompositions are reproducible.
inline std::optional<ElpCut> find_nontrivial_elp_cut(const Multigraph& g,
                                                     CutStrategy strategy = CutStrategy::lex_first) {
    detail::require_matching_covered(g, "find_nontrivial_elp_cut");
    switch (strategy) {
        case CutStrategy::lex_first: {
            auto found = detail::scan_nontrivial_elp_cuts(g, false);
            if (found.empty()) return std::nullopt;
            return found.front();
        }
        case CutStrategy::max_min_shore: {
            auto found = detail::scan_nontrivial_elp_cuts(g, true);
            if (found.empty()) return std::nullopt;
            auto min_shore = [&](const ElpCut& c) {
                return std::min(c.cut.shore().size(), g.vertex_count() - c.cut.shore().size());
            };
            std::size_t best = 0;
            for (std::size_t i = 1; i < found.size(); ++i) {
                if (min_shore(found[i]) > min_shore(found[best]) ||
                    (min_shore(found[i]) == min_shore(found[best]) &&
                     found[i].cut.shore() < found[best].cut.shore()))
                    best = i;
            }
            return found[best];
        }
        case CutStrategy::reversed_order: {
            Multigraph rg = detail::reverse_labels(g);
            auto found = detail::scan_nontrivial_elp_cuts(rg, false);
            if (found.empty()) return std::nullopt;
            // Map the shore back; the cut and any witness structures are
            // rebuilt on g so edge ids stay consistent.
            int n = g.vertex_count();
            std::vector<int> shore;
            for (int v : found.front().cut.shore()) shore.push_back(n + 1 - v);
            Cut cut = boundary(g, VertexSet(std::move(shore)));
            if (!is_tight(g, cut)) throw internal_invariant_error("mapped ELP cut is not tight");
            ElpCut out;
            out.kind = found.front().kind;
            if (found.front().sep) {
                int u = n + 1 - found.front().sep->u;
                int v = n + 1 - found.front().sep->v;
                auto sep = is_two_separation(g, u, v);
                if (!sep) throw internal_invariant_error("mapped 2-separation is invalid");
                out.sep = std::move(*sep);
            }
            if (found.front().barrier) {
                std::vector<int> members;
                for (int v : found.front().barrier->members) members.push_back(n + 1 - v);
                auto b = is_barrier(g, VertexSet(std::move(members)));
                if (!b) throw internal_invariant_error("mapped barrier is invalid");
                // locate which odd component carries the cut
                out.component_index = -1;
                for (std::size_t i = 0; i < b->odd_components.size(); ++i) {
                    Cut cand = boundary(g, b->odd_components[i]);
                    if (cand == cut) out.component_index = static_cast<int>(i);
                }
                if (out.component_index < 0)
                    throw internal_invariant_error("mapped barrier-cut lost its component");
                out.barrier = std::move(*b);
            }
            out.nontrivial = !cut.trivial();
            out.cut = std::move(cut);
            return out;
        }
    }
    return std::nullopt;
}

// ----------------------------------------------------------- shelter status

enum class StructureKind { barrier, two_separation };
enum class ShelterStatus { sheltered, avoiding_only, crossing };

struct ShelterReport {
    ShelterStatus status;
    std::optional<Cut> witness;  // a crossing associated cut, when crossing
};

// Associated ELP cuts of s: barrier-cuts per odd component, or for a
// 2-separation all cuts (component side + pair vertex).
inline std::vector<Cut> associated_cuts(const Multigraph& g, const VertexSet& s,
                                        StructureKind kind) {
    std::vector<Cut> out;
    if (kind == StructureKind::barrier) {
        auto b = is_barrier(g, s);
        if (!b) throw domain_error("set is not a barrier");
        for (const VertexSet& comp : b->odd_components) out.push_back(boundary(g, comp));
    } else {
        if (s.size() != 2) throw domain_error("a 2-separation has exactly two vertices");
        auto sep = is_two_separation(g, s.ids()[0], s.ids()[1]);
        if (!sep) throw domain_error("pair is not a 2-separation");
        for (const VertexSet& comp : sep->even_components) {
            out.push_back(boundary(g, comp.with(sep->u)));
            out.push_back(boundary(g, comp.with(sep->v)));
        }
    }
    return out;
}

inline ShelterReport shelter_status(const Multigraph& g, const Cut& c, const VertexSet& s,
                                    StructureKind kind) {
    std::vector<Cut> cuts = associated_cuts(g, s, kind);  // validates s
    if (s.subset_of(c.shore()) || s.subset_of(complement(g, c.shore())))
        return {ShelterStatus::sheltered, std::nullopt};
    for (Cut& cand : cuts)
        if (!laminar(cand, c)) return {ShelterStatus::crossing, std::move(cand)};
    return {ShelterStatus::avoiding_only, std::nullopt};
}

}  // namespace tightcut
