#pragma once

// Tight-cut predicate and tight-cut algebra: the pairwise tightness test,
// tight contractions, and the meet/join of odd-intersecting tight cuts.

#include "tightcut/matching.hpp"

namespace tightcut {

namespace detail {
inline void require_matching_covered(const Multigraph& g, const char* who) {
    if (!is_matching_covered(g))
        throw domain_error(std::string(who) + ": graph is not matching covered");
}
}  // namespace detail

// A perfect matching meeting c in two or more edges, if one exists. With an
// odd shore every perfect matching meets c at least once, so tightness fails
// exactly when some pair of disjoint cut edges extends to a perfect matching.
inline std::optional<Matching> tightness_violation(const Multigraph& g, const Cut& c) {
    detail::require_matching_covered(g, "tightness_violation");
    if (!c.shore().odd()) throw domain_error("tightness is defined for odd shores");
    const auto& ids = c.edge_ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            auto [a, b] = g.endpoints(ids[i]);
            auto [x, y] = g.endpoints(ids[j]);
            if (a == x || a == y || b == x || b == y) continue;  // cannot co-occur
            if (auto m = perfect_matching_with(g, {ids[i], ids[j]})) return m;
        }
    return std::nullopt;
}

inline bool is_tight(const Multigraph& g, const Cut& c) {
    return !tightness_violation(g, c).has_value();
}

// Both contractions of a tight cut: first the shore, then its complement.
// Both results are matching covered; a failure here is an internal invariant
// violation, not an input error.
inline std::pair<Contraction, Contraction> tight_contractions(const Multigraph& g, const Cut& c) {
    if (!is_tight(g, c)) throw domain_error("cut is not tight");
    Contraction a = contract(g, c.shore());
    Contraction b = contract(g, complement(g, c.shore()));
    if (!is_matching_covered(a.result) || !is_matching_covered(b.result))
        throw internal_invariant_error("tight contraction is not matching covered");
    return {std::move(a), std::move(b)};
}

// For tight cuts with oriented shores x, y and |x n y| odd, returns
// (boundary(x n y), boundary(x u y)); both are tight and no edge joins
// x - y to y - x.
inline std::pair<Cut, Cut> cut_meet_join(const Multigraph& g, const VertexSet& x,
                                         const VertexSet& y) {
    VertexSet meet_shore = set_intersection(x, y);
    if (!meet_shore.odd()) throw domain_error("cut_meet_join needs odd shore intersection");
    if (!is_tight(g, boundary(g, x)) || !is_tight(g, boundary(g, y)))
        throw domain_error("cut_meet_join needs tight cuts");

    Cut meet = boundary(g, meet_shore);
    Cut join = boundary(g, set_union(x, y));
    if (!is_tight(g, meet) || !is_tight(g, join))
        throw internal_invariant_error("meet/join of tight cuts is not tight");
    VertexSet x_only = set_difference(x, y);
    VertexSet y_only = set_difference(y, x);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if ((x_only.contains(u) && y_only.contains(v)) ||
            (x_only.contains(v) && y_only.contains(u)))
            throw internal_invariant_error("edge joins x-y to y-x across tight cuts");
    }
    return {std::move(meet), std::move(join)};
}

}  // namespace tightcut
