#pragma once

// Constructive form of the main result: given a nontrivial tight cut C of a
// matching covered graph, produce either a C-sheltered nontrivial barrier or
// a 2-separation cut laminar with C, with machine-checkable certificates.
//
// The control flow mirrors the underlying proof. Branches the proof refutes
// by contradiction become runtime verifications that must fail; if one
// "succeeds" we raise internal_invariant_error rather than return, keeping
// soundness over liveness. An optional exhaustive fallback turns any such
// divergence into a reproducible report instead of a crash.

#include <variant>

#include "tightcut/elp.hpp"

namespace tightcut {

// ------------------------------------------------------------ small helpers

namespace detail {

inline bool adjacent_to(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a)
        for (int w : g.neighbors(v))
            if (b.contains(w)) return true;
    return false;
}

inline int count_neighbors_in(const Multigraph& g, int v, const VertexSet& s) {
    int count = 0;
    for (int w : g.neighbors(v))
        if (s.contains(w)) ++count;
    return count;
}

inline int unique_neighbor_in(const Multigraph& g, int v, const VertexSet& s) {
    int found = 0;
    for (int w : g.neighbors(v))
        if (s.contains(w)) {
            if (found) throw internal_invariant_error("neighbour in set is not unique");
            found = w;
        }
    if (!found) throw internal_invariant_error("no neighbour in set");
    return found;
}

// The component of g - removed containing all of want.
inline VertexSet component_containing(const Multigraph& g, const VertexSet& removed,
                                      const VertexSet& want) {
    ComponentSplit split = components(g, removed);
    for (const VertexSet& part : split.parts)
        if (part.contains(want.min_id())) {
            if (!want.subset_of(part))
                throw internal_invariant_error("set straddles components");
            return part;
        }
    throw internal_invariant_error("set vanished from the graph");
}

inline bool is_union_of_components(const std::vector<VertexSet>& parts, const VertexSet& side) {
    VertexSet rest = side;
    for (const VertexSet& comp : parts) {
        if (set_intersection(comp, side).empty()) continue;
        if (!comp.subset_of(side)) return false;
        rest = set_difference(rest, comp);
    }
    return rest.empty();
}

}  // namespace detail

// ------------------------------------------------------- component profiles

struct ComponentProfile {
    VertexSet component;
    bool balanced = false;  // |X n component| even
    bool good = false;      // balanced, or both pair vertices see >= 2 vertices
};

// Profiles of the components of g - sep relative to the tight cut c, whose
// pair must meet both shores. When any component is unbalanced this verifies
// the forced shape: exactly two components, both unbalanced, and every edge
// of c internal to one component.
inline std::vector<ComponentProfile> classify_components(const Multigraph& g, const Cut& c,
                                                         const TwoSeparation& sep) {
    const VertexSet& xs = c.shore();
    VertexSet pairset = sep.pair();
    if (set_intersection(pairset, xs).empty() || pairset.subset_of(xs))
        throw domain_error("classify_components expects the pair to meet both shores");
    std::vector<ComponentProfile> out;
    bool any_unbalanced = false;
    for (const VertexSet& comp : sep.even_components) {
        bool balanced = !set_intersection(comp, xs).odd();
        bool good = balanced || (detail::count_neighbors_in(g, sep.u, comp) >= 2 &&
                                 detail::count_neighbors_in(g, sep.v, comp) >= 2);
        any_unbalanced = any_unbalanced || !balanced;
        out.push_back({comp, balanced, good});
    }
    if (any_unbalanced) {
        if (out.size() != 2 || out[0].balanced || out[1].balanced)
            throw internal_invariant_error(
                "an unbalanced component forces exactly two components, both unbalanced");
        for (int e : c.edge_ids()) {
            auto [u, v] = g.endpoints(e);
            bool internal = false;
            for (const auto& p : out)
                if (p.component.contains(u) && p.component.contains(v)) internal = true;
            if (!internal)
                throw internal_invariant_error("cut edge not internal to a single component");
        }
    }
    return out;
}

struct GoodEntry {
    TwoSeparation sep;
    ComponentProfile profile;
};

struct GoodCollection {
    std::vector<GoodEntry> entries;  // by (component size, min vertex, pair)
};

inline GoodCollection build_good_collection(const Multigraph& g, const Cut& c) {
    GoodCollection out;
    for (TwoSeparation& sep : find_two_separations(g)) {
        VertexSet pairset = sep.pair();
        if (set_intersection(pairset, c.shore()).empty() || pairset.subset_of(c.shore()))
            throw domain_error("build_good_collection expects no sheltered 2-separation");
        for (ComponentProfile& prof : classify_components(g, c, sep))
            if (prof.good) out.entries.push_back({sep, std::move(prof)});
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const GoodEntry& a, const GoodEntry& b) {
        const VertexSet& ca = a.profile.component;
        const VertexSet& cb = b.profile.component;
        if (ca.size() != cb.size()) return ca.size() < cb.size();
        if (ca != cb) return ca < cb;
        return std::pair{a.sep.u, a.sep.v} < std::pair{b.sep.u, b.sep.v};
    });
    return out;
}

// ----------------------------------------------------------- inheritance

struct LiftedStructure {
    VertexSet members;
    StructureKind kind;
};

// Inheritance lemma: the contraction ctr collapses the shore containing u2 of
// a 2-separation cut with pair {u1, u2}. A barrier or 2-separation s_h of the
// contracted graph lifts to S := s_h, or (s_h - contracted) + u2 when the
// contracted vertex belongs to it. The lift and the verbatim transfer of
// untouched components are both verified.
inline LiftedStructure lift_structure(const Multigraph& g, const Contraction& ctr, int u1, int u2,
                                      const VertexSet& s_h, StructureKind kind) {
    const VertexSet& contracted =
        ctr.origin_of[static_cast<std::size_t>(ctr.contracted_label)];
    if (!contracted.contains(u2) || contracted.contains(u1))
        throw domain_error("lift_structure: u2 must be contracted and u1 kept");
    auto sep = is_two_separation(g, u1, u2);
    if (!sep) throw domain_error("lift_structure: {u1,u2} is not a 2-separation");
    if (!detail::is_union_of_components(sep->even_components, contracted.without(u2)))
        throw domain_error("lift_structure: contracted set is not a 2-separation cut shore");

    const Multigraph& h = ctr.result;
    if (kind == StructureKind::barrier) {
        if (!is_barrier(h, s_h)) throw domain_error("lift_structure: s_h is not a barrier");
    } else {
        if (s_h.size() != 2 || !is_two_separation(h, s_h.ids()[0], s_h.ids()[1]))
            throw domain_error("lift_structure: s_h is not a 2-separation");
    }

    VertexSet lifted = s_h.contains(ctr.contracted_label)
                           ? ctr.to_original(s_h.without(ctr.contracted_label)).with(u2)
                           : ctr.to_original(s_h);

    if (kind == StructureKind::barrier) {
        if (!is_barrier(g, lifted))
            throw internal_invariant_error("lifted set is not a barrier of g");
    } else {
        if (!is_two_separation(g, lifted.ids()[0], lifted.ids()[1]))
            throw internal_invariant_error("lifted set is not a 2-separation of g");
    }

    // components of h - s_h not touching {u1, contracted} transfer verbatim
    int u1h = ctr.image_of[static_cast<std::size_t>(u1)];
    ComponentSplit hsplit = components(h, s_h);
    ComponentSplit gsplit = components(g, lifted);
    int touched = 0;
    for (const VertexSet& part : hsplit.parts) {
        if (part.contains(u1h) || part.contains(ctr.contracted_label)) {
            ++touched;
            continue;
        }
        VertexSet orig = ctr.to_original(part);
        bool found = false;
        for (const VertexSet& gp : gsplit.parts)
            if (gp == orig) {
                found = true;
                break;
            }
        if (!found) throw internal_invariant_error("untouched component did not transfer");
    }
    if (touched > 1)
        throw internal_invariant_error("more than one component touches {u1, contracted}");
    return {std::move(lifted), kind};
}

// --------------------------------------------------- barrier restriction

struct BarrierRestriction {
    std::vector<VertexSet> hx;      // components with odd intersection with x
    std::vector<VertexSet> hx_bar;  // components with odd intersection with its complement
    Barrier sheltered;              // b n complement(x), a verified barrier
    bool nontrivial = false;
};

// Barrier-sheltered lemma: for a tight cut with shore x, a barrier b meeting
// both shores, and a component k (odd x-intersection, neighbour in b beyond
// x), the counts |b n x| = |hx|-1 and |b n x~| = |hx_bar|+1 hold and
// b n x~ is a C-sheltered, possibly trivial, barrier.
inline BarrierRestriction restrict_barrier(const Multigraph& g, const VertexSet& x_shore,
                                           const Barrier& b, const VertexSet& k) {
    Cut c = boundary(g, x_shore);
    if (!is_tight(g, c)) throw domain_error("restrict_barrier needs a tight cut");
    auto vb = is_barrier(g, b.members);
    if (!vb) throw domain_error("restrict_barrier needs a valid barrier");
    VertexSet xbar = complement(g, x_shore);
    VertexSet b_in_x = set_intersection(b.members, x_shore);
    VertexSet b_in_xbar = set_intersection(b.members, xbar);

    bool k_is_component = false;
    for (const VertexSet& comp : vb->odd_components)
        if (comp == k) k_is_component = true;
    if (!k_is_component) throw domain_error("k is not a component of g minus the barrier");
    if (!set_intersection(k, x_shore).odd())
        throw domain_error("k needs an odd intersection with the shore");
    if (!detail::adjacent_to(g, k, b_in_xbar))
        throw domain_error("k needs a neighbour in the barrier beyond the shore");

    BarrierRestriction out;
    for (const VertexSet& comp : vb->odd_components)
        (set_intersection(comp, x_shore).odd() ? out.hx : out.hx_bar).push_back(comp);
    if (static_cast<int>(out.hx.size()) - 1 != b_in_x.size() ||
        static_cast<int>(out.hx_bar.size()) + 1 != b_in_xbar.size())
        throw internal_invariant_error("barrier restriction counts violated");
    auto sheltered = is_barrier(g, b_in_xbar);
    if (!sheltered) throw internal_invariant_error("restricted set is not a barrier");
    out.sheltered = std::move(*sheltered);
    out.nontrivial = out.sheltered.members.size() >= 2;

    if (!c.trivial() && b.members.size() >= 2) {
        ShelterReport rep = shelter_status(g, c, b.members, StructureKind::barrier);
        if (rep.status != ShelterStatus::crossing && !out.nontrivial)
            throw internal_invariant_error(
                "avoiding nontrivial barrier must restrict to a nontrivial barrier");
    }
    return out;
}

// -------------------------------------------------------------- result type

enum class ShoreSide { shore, complement };

struct ShelteredBarrierResult {
    Barrier barrier;
    ShoreSide side = ShoreSide::shore;
    VertexSet shore_set;  // the shore of c the barrier lives in
};

struct LaminarSeparationResult {
    TwoSeparation sep;
    Cut cut;  // an associated cut, laminar with c
};

struct LaminarCertificate {
    bool structure_valid = false;
    bool placement_valid = false;
    bool nontrivial = false;
    std::string detail;
    bool ok() const { return structure_valid && placement_valid && nontrivial; }
};

struct LaminarResult {
    std::variant<ShelteredBarrierResult, LaminarSeparationResult> value;
    LaminarCertificate certificate;
    std::optional<std::string> divergence;  // set when the fallback produced the result

    bool holds_barrier() const { return std::holds_alternative<ShelteredBarrierResult>(value); }
    const ShelteredBarrierResult& barrier() const {
        return std::get<ShelteredBarrierResult>(value);
    }
    const LaminarSeparationResult& separation() const {
        return std::get<LaminarSeparationResult>(value);
    }
};

// Re-verification from scratch; used on every produced result and available
// to callers that want an independent check.
inline LaminarCertificate certify(const Multigraph& g, const Cut& c, const LaminarResult& r) {
    LaminarCertificate cert;
    if (r.holds_barrier()) {
        const ShelteredBarrierResult& sb = r.barrier();
        auto vb = is_barrier(g, sb.barrier.members);
        cert.structure_valid = vb.has_value();
        VertexSet expected =
            sb.side == ShoreSide::shore ? c.shore() : complement(g, c.shore());
        cert.placement_valid = sb.shore_set == expected &&
                               sb.barrier.members.subset_of(sb.shore_set);
        cert.nontrivial = sb.barrier.members.size() >= 2;
        if (!cert.ok()) cert.detail = "sheltered barrier certificate failed";
    } else {
        const LaminarSeparationResult& ls = r.separation();
        auto sep = is_two_separation(g, ls.sep.u, ls.sep.v);
        cert.structure_valid = sep.has_value();
        bool assoc = false;
        if (sep) {
            for (const VertexSet& shore :
                 {ls.cut.shore(), complement(g, ls.cut.shore())}) {
                for (int w : {sep->u, sep->v}) {
                    if (!shore.contains(w) || shore.contains(w == sep->u ? sep->v : sep->u))
                        continue;
                    if (detail::is_union_of_components(sep->even_components, shore.without(w)))
                        assoc = true;
                }
            }
        }
        cert.placement_valid = assoc && laminar(ls.cut, c) && is_tight(g, ls.cut);
        cert.nontrivial = !ls.cut.trivial();
        if (!cert.ok()) cert.detail = "laminar separation certificate failed";
    }
    return cert;
}

namespace detail {

inline LaminarResult make_barrier_result(const Multigraph& g, const Cut& c,
                                         const VertexSet& members) {
    auto vb = is_barrier(g, members);
    if (!vb) throw internal_invariant_error("result barrier fails verification");
    ShelteredBarrierResult sb;
    sb.barrier = std::move(*vb);
    if (members.subset_of(c.shore())) {
        sb.side = ShoreSide::shore;
        sb.shore_set = c.shore();
    } else if (members.subset_of(complement(g, c.shore()))) {
        sb.side = ShoreSide::complement;
        sb.shore_set = complement(g, c.shore());
    } else {
        throw internal_invariant_error("result barrier is not inside a shore");
    }
    LaminarResult r;
    r.value = std::move(sb);
    r.certificate = certify(g, c, r);
    if (!r.certificate.ok())
        throw internal_invariant_error("sheltered barrier result failed certification: " +
                                       r.certificate.detail);
    return r;
}

inline LaminarResult make_separation_result(const Multigraph& g, const Cut& c,
                                            const TwoSeparation& sep, Cut cut) {
    LaminarResult r;
    r.value = LaminarSeparationResult{sep, std::move(cut)};
    r.certificate = certify(g, c, r);
    if (!r.certificate.ok())
        throw internal_invariant_error("laminar separation result failed certification: " +
                                       r.certificate.detail);
    return r;
}

// First associated cut of sep laminar with c, scanning shores of c and the
// components grouped inside them.
inline std::optional<Cut> laminar_associated_cut(const Multigraph& g, const Cut& c,
                                                 const TwoSeparation& sep) {
    for (const VertexSet& z : {c.shore(), complement(g, c.shore())}) {
        VertexSet side;
        int used = 0;
        for (const VertexSet& comp : sep.even_components)
            if (comp.subset_of(z)) {
                side = set_union(side, comp);
                ++used;
            }
        if (used == 0 || used == static_cast<int>(sep.even_components.size())) continue;
        for (int w : {sep.u, sep.v}) {
            if (!z.contains(w)) continue;
            Cut cut = boundary(g, side.with(w));
            if (laminar(cut, c)) return cut;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// ------------------------------------------------------- avoided-vertex op

struct AvoidOutcome {
    enum class Kind { sep_avoiding_t, sep_through_t, sheltered_barrier };
    Kind kind;
    std::optional<TwoSeparation> sep;        // (i) and (ii)
    std::optional<Cut> cut;                  // (ii): associated cut
    std::optional<VertexSet> through_shore;  // (ii): its shore inside the t-side shore
    std::optional<Barrier> barrier;          // (iii)
    std::optional<VertexSet> barrier_shore;  // (iii): shore of c containing it
};

// Diagnostic counters: which proof paths ran. Useful to confirm a corpus
// exercises the interesting branches.
struct LaminarBranchStats {
    long sheltered_separation = 0;
    long case1_sheltered = 0;
    long case1_avoiding = 0;
    long case1_crossing_restrict = 0;
    long case1_recurse = 0;
    long case2 = 0;
    long case3_guard = 0;
    long case3_recurse_barrier = 0;
    long case3_recurse_separation = 0;
    long avoid_recurse = 0;
};

inline LaminarBranchStats& laminar_branch_stats() {
    thread_local LaminarBranchStats stats;
    return stats;
}

namespace detail {
inline LaminarResult find_laminar_elp_impl(const Multigraph& g, const Cut& c);

// Avoided-vertex lemma: with X the shore of c not containing t, returns a
// 2-separation missing t, or a 2-separation through t whose associated cut
// has a shore inside the t-side shore, or a C-sheltered nontrivial barrier.
inline AvoidOutcome find_structure_avoiding_impl(const Multigraph& g, const Cut& c, int t) {
    const VertexSet xs = c.shore().contains(t) ? complement(g, c.shore()) : c.shore();
    const VertexSet xbar = complement(g, xs);

    LaminarResult res = find_laminar_elp_impl(g, c);
    if (res.holds_barrier()) {
        AvoidOutcome out;
        out.kind = AvoidOutcome::Kind::sheltered_barrier;
        out.barrier = res.barrier().barrier;
        out.barrier_shore = res.barrier().shore_set;
        return out;
    }
    const TwoSeparation& sep = res.separation().sep;
    const Cut& f = res.separation().cut;
    if (sep.u != t && sep.v != t) {
        AvoidOutcome out;
        out.kind = AvoidOutcome::Kind::sep_avoiding_t;
        out.sep = sep;
        return out;
    }
    // t is on the separation; normalize the laminar cut's contained shore
    VertexSet fs = f.shore();
    VertexSet fsc = complement(g, f.shore());
    for (const VertexSet& z : {fs, fsc}) {
        if (!z.subset_of(xbar)) continue;
        AvoidOutcome out;
        out.kind = AvoidOutcome::Kind::sep_through_t;
        out.sep = sep;
        out.cut = f;
        out.through_shore = z;
        return out;
    }
    VertexSet z;
    if (fs.subset_of(xs))
        z = fs;
    else if (fsc.subset_of(xs))
        z = fsc;
    else
        throw internal_invariant_error("laminar cut has no shore inside a shore of c");
    int u = sep.u == t ? sep.v : sep.u;
    if (!z.contains(u) || z.contains(t))
        throw internal_invariant_error("separation vertices misplaced on the contained shore");

    // partner cut shore z' = (z - u) + t; contract it and recurse
    ++laminar_branch_stats().avoid_recurse;
    separation_cut_pair(g, sep, z.without(u));  // validates the pair shape, both cuts tight
    VertexSet zp = z.without(u).with(t);
    Contraction ctr = contract(g, zp);
    VertexSet xh = set_difference(xs, z).with(u);
    Cut ch = boundary(ctr.result, ctr.to_result(xh));
    if (ch.trivial())
        throw internal_invariant_error("contracted cut became trivial");
    if (!is_tight(ctr.result, ch))
        throw internal_invariant_error("contracted cut is not tight");
    AvoidOutcome sub = find_structure_avoiding_impl(ctr.result, ch, ctr.contracted_label);

    switch (sub.kind) {
        case AvoidOutcome::Kind::sep_avoiding_t: {
            LiftedStructure lift =
                lift_structure(g, ctr, u, t, sub.sep->pair(), StructureKind::two_separation);
            auto s2 = is_two_separation(g, lift.members.ids()[0], lift.members.ids()[1]);
            if (!s2) throw internal_invariant_error("lifted separation fails verification");
            if (s2->u == t || s2->v == t)
                throw internal_invariant_error("lifted separation contains t");
            AvoidOutcome out;
            out.kind = AvoidOutcome::Kind::sep_avoiding_t;
            out.sep = std::move(*s2);
            return out;
        }
        case AvoidOutcome::Kind::sep_through_t: {
            VertexSet wh = set_difference(*sub.through_shore, sub.sep->pair());
            LiftedStructure lift =
                lift_structure(g, ctr, u, t, sub.sep->pair(), StructureKind::two_separation);
            auto s2 = is_two_separation(g, lift.members.ids()[0], lift.members.ids()[1]);
            if (!s2 || !lift.members.contains(t))
                throw internal_invariant_error("lifted separation should contain t");
            VertexSet w = ctr.to_original(wh);
            if (!detail::is_union_of_components(s2->even_components, w))
                throw internal_invariant_error("carried side is not a union of components");
            VertexSet y = w.with(t);
            if (!y.subset_of(xbar))
                throw internal_invariant_error("carried shore is not inside the t-side shore");
            Cut d = boundary(g, y);
            if (!is_tight(g, d)) throw internal_invariant_error("carried cut is not tight");
            AvoidOutcome out;
            out.kind = AvoidOutcome::Kind::sep_through_t;
            out.sep = std::move(*s2);
            out.cut = std::move(d);
            out.through_shore = std::move(y);
            return out;
        }
        case AvoidOutcome::Kind::sheltered_barrier: {
            LiftedStructure lift =
                lift_structure(g, ctr, u, t, sub.barrier->members, StructureKind::barrier);
            auto vb = is_barrier(g, lift.members);
            if (!vb || !vb->nontrivial())
                throw internal_invariant_error("lifted barrier fails verification");
            AvoidOutcome out;
            out.kind = AvoidOutcome::Kind::sheltered_barrier;
            if (lift.members.subset_of(xs))
                out.barrier_shore = xs;
            else if (lift.members.subset_of(xbar))
                out.barrier_shore = xbar;
            else
                throw internal_invariant_error("lifted barrier is not inside a shore");
            out.barrier = std::move(*vb);
            return out;
        }
    }
    throw internal_invariant_error("unreachable avoid outcome");
}

// --------------------------------------------------------------- the cases

// No 2-separations: work from a nontrivial barrier.
inline LaminarResult case_no_separations(const Multigraph& g, const Cut& c) {
    auto found = find_nontrivial_barrier(g);
    if (!found)
        throw internal_invariant_error(
            "separation-free graph with a nontrivial tight cut has no nontrivial barrier");
    const Barrier& b = *found;
    const VertexSet x0 = c.shore();
    const VertexSet x1 = complement(g, c.shore());
    if (b.members.subset_of(x0) || b.members.subset_of(x1)) {
        ++laminar_branch_stats().case1_sheltered;
        return make_barrier_result(g, c, b.members);
    }

    std::vector<VertexSet> crossing;
    for (const VertexSet& comp : b.odd_components)
        if (!laminar(boundary(g, comp), c)) crossing.push_back(comp);

    if (crossing.empty()) {
        // b is C-avoiding; apply the restriction lemma in the orientation
        // admitting a witness component
        for (int orient = 0; orient < 2; ++orient) {
            const VertexSet& xside = orient == 0 ? x0 : x1;
            const VertexSet& other = orient == 0 ? x1 : x0;
            VertexSet b_other = set_intersection(b.members, other);
            for (const VertexSet& comp : b.odd_components) {
                if (!set_intersection(comp, xside).odd()) continue;
                if (!adjacent_to(g, comp, b_other)) continue;
                BarrierRestriction r = restrict_barrier(g, xside, b, comp);
                ++laminar_branch_stats().case1_avoiding;
                return make_barrier_result(g, c, r.sheltered.members);
            }
        }
        throw internal_invariant_error("no component admits the barrier restriction");
    }

    const VertexSet& y = crossing.front();
    const VertexSet& xs = set_intersection(x0, y).odd() ? x0 : x1;
    const VertexSet& xb = set_intersection(x0, y).odd() ? x1 : x0;
    if (!adjacent_to(g, y, set_intersection(b.members, xb)))
        throw internal_invariant_error("crossing component misses the far barrier vertices");
    BarrierRestriction r = restrict_barrier(g, xs, b, y);
    if (r.nontrivial) {
        ++laminar_branch_stats().case1_crossing_restrict;
        return make_barrier_result(g, c, r.sheltered.members);
    }
    ++laminar_branch_stats().case1_recurse;

    VertexSet xy = set_intersection(xs, y);
    if (xy.size() == 1)
        throw internal_invariant_error(
            "trivial meet cut would yield a 2-separation of a separation-free graph");
    cut_meet_join(g, xs, y);  // tightness of the meet plus the no-crossing-edge check
    if (!is_tight(g, boundary(g, y)))
        throw internal_invariant_error("barrier component cut is not tight");

    Contraction ctr = contract(g, complement(g, y));
    Cut meet_h = boundary(ctr.result, ctr.to_result(xy));
    if (meet_h.trivial() || !is_tight(ctr.result, meet_h))
        throw internal_invariant_error("meet cut is not a nontrivial tight cut of the contraction");
    AvoidOutcome out = find_structure_avoiding_impl(ctr.result, meet_h, ctr.contracted_label);

    switch (out.kind) {
        case AvoidOutcome::Kind::sep_avoiding_t:
        case AvoidOutcome::Kind::sep_through_t:
            // either alternative lifts to a 2-separation of g, which has none
            throw internal_invariant_error(
                "contraction produced a 2-separation that would lift to a separation-free graph");
        case AvoidOutcome::Kind::sheltered_barrier: {
            const VertexSet& bh = out.barrier->members;
            if (!bh.contains(ctr.contracted_label)) {
                VertexSet bg = ctr.to_original(bh);
                auto vb = is_barrier(g, bg);
                if (!vb || !vb->nontrivial())
                    throw internal_invariant_error("contraction barrier does not transfer");
                return make_barrier_result(g, c, bg);
            }
            VertexSet bg = set_union(ctr.to_original(bh.without(ctr.contracted_label)), b.members);
            auto vb = is_barrier(g, bg);
            if (!vb) throw internal_invariant_error("combined barrier fails verification");
            VertexSet k = component_containing(g, bg, xy);
            if (!set_intersection(k, xs).odd())
                throw internal_invariant_error("witness component lost odd intersection");
            if (!adjacent_to(g, k, set_intersection(bg, xb)))
                throw internal_invariant_error("witness component misses the far barrier vertices");
            BarrierRestriction r2 = restrict_barrier(g, xs, *vb, k);
            if (!r2.nontrivial)
                throw internal_invariant_error("combined barrier restricts to a singleton");
            return make_barrier_result(g, c, r2.sheltered.members);
        }
    }
    throw internal_invariant_error("unreachable");
}

// 2-separations exist, none sheltered, and no good component anywhere: the
// lex-first separation has exactly two unbalanced components and the pair
// vertex with a unique neighbour in one has one in the other as well.
inline LaminarResult case_all_unbalanced(const Multigraph& g, const Cut& c,
                                         const std::vector<TwoSeparation>& seps) {
    ++laminar_branch_stats().case2;
    const TwoSeparation& sep = seps.front();
    std::vector<ComponentProfile> profiles = classify_components(g, c, sep);
    if (profiles.size() != 2)
        throw internal_invariant_error("empty good collection forces two components");
    for (const ComponentProfile& p : profiles)
        if (p.balanced || p.good)
            throw internal_invariant_error("empty good collection yet a good component exists");
    const VertexSet& l1 = profiles[0].component;
    const VertexSet& l2 = profiles[1].component;
    int u1 = 0;
    for (int w : {sep.u, sep.v})
        if (count_neighbors_in(g, w, l1) == 1) {
            u1 = w;
            break;
        }
    if (!u1)
        throw internal_invariant_error("no pair vertex has a unique neighbour in the component");
    if (count_neighbors_in(g, u1, l2) != 1)
        throw internal_invariant_error(
            "pair vertex with two neighbours across would produce a good component");
    int v1 = unique_neighbor_in(g, u1, l1);
    int v2 = unique_neighbor_in(g, u1, l2);
    return make_barrier_result(g, c, VertexSet{v1, v2});
}

// Good components exist: take the minimal one and either return a guarded
// laminar cut or contract past it and recurse.
inline LaminarResult case_minimal_good(const Multigraph& g, const Cut& c,
                                       const GoodCollection& collection) {
    const GoodEntry& entry = collection.entries.front();
    const TwoSeparation& sep = entry.sep;
    const VertexSet& l1 = entry.profile.component;
    const bool balanced = entry.profile.balanced;
    const VertexSet xs = c.shore();
    const VertexSet xb = complement(g, c.shore());

    int u1 = balanced ? (xs.contains(sep.u) ? sep.u : sep.v)
                      : (xb.contains(sep.u) ? sep.u : sep.v);
    int u2 = u1 == sep.u ? sep.v : sep.u;
    VertexSet y = l1.with(u1);
    Cut d = boundary(g, y);
    // laminarity guard: when the chosen shore coincides with or nests into a
    // shore of c the cut itself is the answer
    if (laminar(d, c)) {
        ++laminar_branch_stats().case3_guard;
        return make_separation_result(g, c, sep, d);
    }
    Cut dp = boundary(g, l1.with(u2));
    if (laminar(dp, c)) {
        ++laminar_branch_stats().case3_guard;
        return make_separation_result(g, c, sep, dp);
    }

    VertexSet xy = set_intersection(xs, y);
    if (!xy.odd()) throw internal_invariant_error("chosen shore lost odd intersection");
    if (xy.size() == 1)
        throw internal_invariant_error("trivial meet cut survived the laminarity guard");
    cut_meet_join(g, xs, y);  // meet tight + no crossing edge
    Contraction ctr = contract(g, complement(g, y));
    Cut meet_h = boundary(ctr.result, ctr.to_result(xy));
    if (meet_h.trivial() || !is_tight(ctr.result, meet_h))
        throw internal_invariant_error("meet cut is not a nontrivial tight cut of the contraction");

    LaminarResult sub = find_laminar_elp_impl(ctr.result, meet_h);

    if (sub.holds_barrier()) {
        ++laminar_branch_stats().case3_recurse_barrier;
        const VertexSet& bh = sub.barrier().barrier.members;
        if (!bh.contains(ctr.contracted_label)) {
            VertexSet bg = ctr.to_original(bh);
            auto vb = is_barrier(g, bg);
            if (!vb || !vb->nontrivial())
                throw internal_invariant_error("contraction barrier does not transfer");
            return make_barrier_result(g, c, bg);
        }
        LiftedStructure lift = lift_structure(g, ctr, u1, u2, bh, StructureKind::barrier);
        const VertexSet& s = lift.members;
        if (balanced) return make_barrier_result(g, c, s);  // u2 beyond the shore, s follows
        VertexSet s_xbar = set_intersection(s, xb);
        if (s_xbar.size() >= 2) {
            auto vs = is_barrier(g, s);
            if (!vs) throw internal_invariant_error("lifted barrier fails verification");
            VertexSet k = component_containing(g, s, xy);
            if (!set_intersection(k, xs).odd())
                throw internal_invariant_error("witness component lost odd intersection");
            if (!adjacent_to(g, k, s_xbar))
                throw internal_invariant_error("witness component misses the far barrier vertices");
            BarrierRestriction r = restrict_barrier(g, xs, *vs, k);
            if (r.sheltered.members != s_xbar)
                throw internal_invariant_error("restriction disagrees with the lifted barrier");
            return make_barrier_result(g, c, s_xbar);
        }
        // the {u1, v} fallback: barrier or 2-separation by a components check
        int v = s_xbar.ids().front();
        ComponentSplit split = components(g, VertexSet{u1, v});
        if (split.parts.size() < 2)
            throw internal_invariant_error("{u1,v} does not disconnect the graph");
        if (split.odd_count == 0) {
            auto sep2 = is_two_separation(g, u1, v);
            if (!sep2) throw internal_invariant_error("{u1,v} separation fails verification");
            auto cut2 = laminar_associated_cut(g, c, *sep2);
            if (!cut2)
                throw internal_invariant_error("sheltered separation admits no laminar cut");
            return make_separation_result(g, c, *sep2, std::move(*cut2));
        }
        return make_barrier_result(g, c, VertexSet{u1, v});
    }

    ++laminar_branch_stats().case3_recurse_separation;
    const TwoSeparation& sh = sub.separation().sep;
    LiftedStructure lift = lift_structure(g, ctr, u1, u2, sh.pair(), StructureKind::two_separation);
    auto sep2 = is_two_separation(g, lift.members.ids()[0], lift.members.ids()[1]);
    if (!sep2) throw internal_invariant_error("lifted separation fails verification");
    auto cut2 = laminar_associated_cut(g, c, *sep2);
    if (!cut2)
        throw internal_invariant_error(
            "lifted separation admits no laminar cut; contradicts minimality of the component");
    return make_separation_result(g, c, *sep2, std::move(*cut2));
}

inline LaminarResult find_laminar_elp_impl(const Multigraph& g, const Cut& c) {
    std::vector<TwoSeparation> seps = find_two_separations(g);

    // a C-sheltered 2-separation settles the question outright
    for (const TwoSeparation& sep : seps) {
        VertexSet p = sep.pair();
        if (p.subset_of(c.shore()) || p.subset_of(complement(g, c.shore()))) {
            auto cut = laminar_associated_cut(g, c, sep);
            if (!cut)
                throw internal_invariant_error("sheltered separation admits no laminar cut");
            ++laminar_branch_stats().sheltered_separation;
            return make_separation_result(g, c, sep, std::move(*cut));
        }
    }

    if (seps.empty()) return case_no_separations(g, c);

    GoodCollection collection = build_good_collection(g, c);
    if (collection.entries.empty()) return case_all_unbalanced(g, c, seps);
    return case_minimal_good(g, c, collection);
}

// Exhaustive search used only as a fallback on small graphs: sheltered
// nontrivial barriers by subset enumeration, then laminar separation cuts.
inline std::optional<LaminarResult> exhaustive_laminar_search(const Multigraph& g, const Cut& c) {
    for (const VertexSet& z : {c.shore(), complement(g, c.shore())}) {
        const std::vector<int>& ids = z.ids();
        int k = static_cast<int>(ids.size());
        for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
            if (__builtin_popcountl(mask) < 2) continue;
            std::vector<int> members;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) members.push_back(ids[static_cast<std::size_t>(i)]);
            if (is_barrier(g, VertexSet(members)))
                return make_barrier_result(g, c, VertexSet(members));
        }
    }
    for (const TwoSeparation& sep : find_two_separations(g))
        if (auto cut = laminar_associated_cut(g, c, sep))
            return make_separation_result(g, c, sep, std::move(*cut));
    return std::nullopt;
}

}  // namespace detail

// --------------------------------------------------------------- public API

struct LaminarOptions {
    bool oracle_fallback = true;  // exhaustive rescue on internal divergence
    int fallback_max_n = 14;
};

inline LaminarResult find_laminar_elp(const Multigraph& g, const Cut& c,
                                      const LaminarOptions& opt = {}) {
    if (c.graph_n() != g.vertex_count() || c.graph_m() != g.edge_count())
        throw domain_error("cut does not belong to the graph");
    if (c.trivial()) throw domain_error("the cut must be nontrivial");
    if (tightness_violation(g, c)) throw domain_error("cut is not tight");
    try {
        return detail::find_laminar_elp_impl(g, c);
    } catch (const internal_invariant_error& e) {
        if (opt.oracle_fallback && g.vertex_count() <= opt.fallback_max_n) {
            if (auto rescued = detail::exhaustive_laminar_search(g, c)) {
                rescued->divergence = e.what();
                return *rescued;
            }
        }
        throw;
    }
}

inline AvoidOutcome find_structure_avoiding(const Multigraph& g, const Cut& c, int t) {
    g.check_vertex(t);
    if (c.graph_n() != g.vertex_count() || c.graph_m() != g.edge_count())
        throw domain_error("cut does not belong to the graph");
    if (c.trivial()) throw domain_error("the cut must be nontrivial");
    if (tightness_violation(g, c)) throw domain_error("cut is not tight");
    return detail::find_structure_avoiding_impl(g, c, t);
}

// The nontrivial ELP cut laminar with c that every result induces: the
// separation's own cut, or the barrier-cut of the component swallowing the
// opposite shore.
inline ElpCut derived_laminar_elp_cut(const Multigraph& g, const Cut& c,
                                      const LaminarResult& r) {
    if (!r.holds_barrier()) {
        ElpCut out;
        out.kind = ElpCut::Kind::separation_cut;
        out.sep = r.separation().sep;
        out.cut = r.separation().cut;
        out.nontrivial = !out.cut.trivial();
        if (!out.nontrivial || !laminar(out.cut, c) || !is_tight(g, out.cut))
            throw internal_invariant_error("separation result does not induce a laminar ELP cut");
        return out;
    }
    const ShelteredBarrierResult& sb = r.barrier();
    VertexSet opposite = complement(g, sb.shore_set);
    auto vb = is_barrier(g, sb.barrier.members);
    if (!vb) throw internal_invariant_error("result barrier fails verification");
    int index = -1;
    for (std::size_t i = 0; i < vb->odd_components.size(); ++i)
        if (opposite.subset_of(vb->odd_components[i])) index = static_cast<int>(i);
    if (index < 0)
        throw internal_invariant_error("no component swallows the opposite shore");
    Cut cut = boundary(g, vb->odd_components[static_cast<std::size_t>(index)]);
    if (cut.trivial() || !laminar(cut, c) || !is_tight(g, cut))
        throw internal_invariant_error("barrier result does not induce a laminar ELP cut");
    ElpCut out;
    out.kind = ElpCut::Kind::barrier_cut;
    out.barrier = std::move(*vb);
    out.component_index = index;
    out.nontrivial = true;
    out.cut = std::move(cut);
    return out;
}

}  // namespace tightcut
