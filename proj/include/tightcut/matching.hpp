#pragma once

// Matching engine: maximum matching in general graphs (blossom), perfect
// matching queries through prescribed edges, matching-covered and bicritical
// tests, a Tutte/Gallai-Edmonds deficiency witness, and bounded perfect
// matching enumeration. All searches iterate in ascending id order so every
// answer is deterministic for a fixed input.

#include <optional>

#include "tightcut/graph_core.hpp"

namespace tightcut {

class Matching {
public:
    Matching() = default;
    Matching(const Multigraph& g, std::vector<int> edge_ids) : edge_ids_(std::move(edge_ids)) {
        std::sort(edge_ids_.begin(), edge_ids_.end());
        std::vector<int> cov;
        for (int e : edge_ids_) {
            auto [u, v] = g.endpoints(e);
            cov.push_back(u);
            cov.push_back(v);
        }
        std::size_t before = cov.size();
        covered_ = VertexSet(std::move(cov));
        if (covered_.ids().size() != before)
            throw domain_error("edges of a matching must be pairwise disjoint");
    }

    const std::vector<int>& edge_ids() const { return edge_ids_; }
    const VertexSet& covered() const { return covered_; }
    int size() const { return static_cast<int>(edge_ids_.size()); }
    bool covers(int v) const { return covered_.contains(v); }
    bool perfect(const Multigraph& g) const { return covered_.size() == g.vertex_count(); }

    friend bool operator==(const Matching& a, const Matching& b) {
        return a.edge_ids_ == b.edge_ids_;
    }

private:
    std::vector<int> edge_ids_;
    VertexSet covered_;
};

namespace detail {

// Edmonds' blossom algorithm on the simple support of g; parallel edges
// collapse to one candidate since only existence matters here.
// Returns mate[v], 0 when unmatched.
inline std::vector<int> blossom_mates(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> match(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> base(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> bloss(static_cast<std::size_t>(n) + 1, false);

    auto lca = [&](int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (;;) {
            a = base[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = true;
            if (!match[static_cast<std::size_t>(a)]) break;
            a = p[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = p[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[static_cast<std::size_t>(v)] != b) {
            bloss[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = true;
            bloss[static_cast<std::size_t>(base[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])])] = true;
            p[static_cast<std::size_t>(v)] = child;
            child = match[static_cast<std::size_t>(v)];
            v = p[static_cast<std::size_t>(child)];
        }
    };
    auto try_augment = [&](int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(p.begin(), p.end(), 0);
        for (int i = 1; i <= n; ++i) base[static_cast<std::size_t>(i)] = i;
        used[static_cast<std::size_t>(root)] = true;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : g.neighbors(v)) {
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
                    match[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<std::size_t>(to)] &&
                     p[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])])) {
                    int curbase = lca(v, to);
                    std::fill(bloss.begin(), bloss.end(), false);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 1; i <= n; ++i)
                        if (bloss[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                            base[static_cast<std::size_t>(i)] = curbase;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = true;
                                queue.push_back(i);
                            }
                        }
                } else if (!p[static_cast<std::size_t>(to)]) {
                    p[static_cast<std::size_t>(to)] = v;
                    if (!match[static_cast<std::size_t>(to)]) {
                        int u = to;
                        while (u) {
                            int pv = p[static_cast<std::size_t>(u)];
                            int ppv = match[static_cast<std::size_t>(pv)];
                            match[static_cast<std::size_t>(u)] = pv;
                            match[static_cast<std::size_t>(pv)] = u;
                            u = ppv;
                        }
                        return;
                    }
                    used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = true;
                    queue.push_back(match[static_cast<std::size_t>(to)]);
                }
            }
        }
    };

    for (int v = 1; v <= n; ++v)
        if (!match[static_cast<std::size_t>(v)])
            for (int u : g.neighbors(v))
                if (!match[static_cast<std::size_t>(u)]) {
                    match[static_cast<std::size_t>(v)] = u;
                    match[static_cast<std::size_t>(u)] = v;
                    break;
                }
    for (int v = 1; v <= n; ++v)
        if (!match[static_cast<std::size_t>(v)]) try_augment(v);
    return match;
}

// Lowest edge id joining u and v.
inline int first_edge_between(const Multigraph& g, int u, int v) {
    for (int e : g.incident(u))
        if (g.other_end(e, u) == v) return e;
    throw domain_error("no edge between the given vertices");
}

}  // namespace detail

inline Matching maximum_matching(const Multigraph& g) {
    auto mate = detail::blossom_mates(g);
    std::vector<int> ids;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        int u = mate[static_cast<std::size_t>(v)];
        if (u > v) ids.push_back(detail::first_edge_between(g, v, u));
    }
    return Matching(g, std::move(ids));
}

inline bool has_perfect_matching(const Multigraph& g) {
    if (g.vertex_count() % 2 != 0) return false;
    return maximum_matching(g).size() * 2 == g.vertex_count();
}

// A perfect matching containing all forced edges, found by deleting the
// forced endpoints and solving the remainder.
inline std::optional<Matching> perfect_matching_with(const Multigraph& g,
                                                     const std::vector<int>& forced) {
    std::vector<int> endpoints;
    for (int e : forced) {
        auto [u, v] = g.endpoints(e);
        endpoints.push_back(u);
        endpoints.push_back(v);
    }
    std::size_t before = endpoints.size();
    VertexSet used(std::move(endpoints));
    if (used.ids().size() != before) throw domain_error("forced edges share an endpoint");
    if (used.size() == g.vertex_count()) return Matching(g, forced);

    InducedSubgraph rest = delete_vertices(g, used);
    if (!has_perfect_matching(rest.graph)) return std::nullopt;
    std::vector<int> ids = forced;
    Matching inner = maximum_matching(rest.graph);
    for (int e : inner.edge_ids())
        ids.push_back(rest.to_original_edge[static_cast<std::size_t>(e)]);
    return Matching(g, std::move(ids));
}

inline bool is_matching_covered(const Multigraph& g) {
    if (g.edge_count() == 0 || !is_connected(g)) return false;
    if (!has_perfect_matching(g)) return false;
    // One representative per parallel class; parallels are covered together.
    for (int e : g.parallel_class_representatives())
        if (!perfect_matching_with(g, {e})) return false;
    return true;
}

struct MatchingEnumeration {
    std::vector<Matching> matchings;  // deterministic order
    bool overflow = false;            // true when truncated at the cap
};

inline MatchingEnumeration enumerate_perfect_matchings(const Multigraph& g,
                                                       long cap = 1000000) {
    if (cap < 1) throw domain_error("enumeration cap must be at least 1");
    MatchingEnumeration out;
    if (g.vertex_count() % 2 != 0) return out;
    std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()) + 1, false);
    std::vector<int> chosen;

    auto rec = [&](auto&& self) -> bool {  // false once capped
        int v = 0;
        for (int i = 1; i <= g.vertex_count(); ++i)
            if (!covered[static_cast<std::size_t>(i)]) {
                v = i;
                break;
            }
        if (v == 0) {
            if (static_cast<long>(out.matchings.size()) == cap) {
                out.overflow = true;
                return false;
            }
            out.matchings.emplace_back(g, chosen);
            return true;
        }
        for (int e : g.incident(v)) {
            int w = g.other_end(e, v);
            if (covered[static_cast<std::size_t>(w)]) continue;
            covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(w)] = true;
            chosen.push_back(e);
            bool keep_going = self(self);
            chosen.pop_back();
            covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(w)] = false;
            if (!keep_going) return false;
        }
        return true;
    };
    rec(rec);
    return out;
}

// Gallai-Edmonds style witness: d_set = vertices missed by some maximum
// matching, a_set = their outside neighbours. The identity
// o(G - a_set) - |a_set| = n - 2 nu(G) certifies the deficiency.
struct DeficiencyWitness {
    VertexSet d_set;
    VertexSet a_set;
    int deficiency = 0;
};

inline DeficiencyWitness deficiency_witness(const Multigraph& g) {
    int nu = maximum_matching(g).size();
    int deficiency = g.vertex_count() - 2 * nu;
    std::vector<int> d;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.vertex_count() == 1) {
            d.push_back(v);
            break;
        }
        InducedSubgraph rest = delete_vertices(g, VertexSet{v});
        if (maximum_matching(rest.graph).size() == nu) d.push_back(v);
    }
    VertexSet d_set(std::move(d));
    std::vector<int> a;
    for (int v : d_set)
        for (int w : g.neighbors(v))
            if (!d_set.contains(w)) a.push_back(w);
    VertexSet a_set(std::move(a));
    int odd = components(g, a_set).odd_count;
    if (odd - a_set.size() != deficiency)
        throw internal_invariant_error("Gallai-Edmonds identity failed");
    return {std::move(d_set), std::move(a_set), deficiency};
}

inline bool is_bicritical(const Multigraph& g) {
    if (g.vertex_count() % 2 != 0) return false;
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v) {
            if (g.vertex_count() == 2) return true;
            InducedSubgraph rest = delete_vertices(g, VertexSet{u, v});
            if (!has_perfect_matching(rest.graph)) return false;
        }
    return true;
}

}  // namespace tightcut
