#pragma once

// Exponential-time ground truth on small graphs: exhaustive tight cuts,
// barriers and 2-separations, plus whole-graph verification of the theorems
// the library implements. Everything here is the independent side of a
// dual-route check; it must not call the pairwise tightness test when acting
// as its oracle.

#include <chrono>

#include "tightcut/decompose.hpp"
#include "tightcut/laminar.hpp"

namespace tightcut {

struct OracleOptions {
    int max_n = 14;
    long enumeration_cap = 1000000;
};

namespace detail {
inline void check_bound(const Multigraph& g, const OracleOptions& opt, const char* who) {
    if (g.vertex_count() > opt.max_n)
        throw domain_error(std::string(who) + ": graph exceeds the oracle size bound");
}
}  // namespace detail

// Tightness by the definition: every perfect matching meets the cut once.
inline bool tight_by_enumeration(const Multigraph& g, const Cut& c,
                                 const std::vector<Matching>& perfect_matchings) {
    (void)g;
    for (const Matching& m : perfect_matchings) {
        int hits = 0;
        for (int e : m.edge_ids())
            if (std::binary_search(c.edge_ids().begin(), c.edge_ids().end(), e)) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

// Every tight cut, trivial and nontrivial, deduplicated by canonical shore.
inline std::vector<Cut> all_tight_cuts(const Multigraph& g, const OracleOptions& opt = {}) {
    detail::require_matching_covered(g, "all_tight_cuts");
    detail::check_bound(g, opt, "all_tight_cuts");
    MatchingEnumeration pm = enumerate_perfect_matchings(g, opt.enumeration_cap);
    if (pm.overflow) throw domain_error("all_tight_cuts: matching enumeration overflowed");

    std::vector<Cut> out;
    int n = g.vertex_count();
    // canonical shores contain vertex 1: enumerate subsets of {2..n} plus 1
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
        if (__builtin_popcountl(mask) % 2 != 0) continue;  // shore size odd with vertex 1
        std::vector<int> shore{1};
        for (int i = 0; i < n - 1; ++i)
            if (mask >> i & 1) shore.push_back(i + 2);
        if (static_cast<int>(shore.size()) == n) continue;
        Cut c = boundary(g, VertexSet(std::move(shore)));
        if (tight_by_enumeration(g, c, pm.matchings)) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Every barrier of size at most max_size, by exhaustive subset scan.
inline std::vector<Barrier> all_barriers(const Multigraph& g, int max_size,
                                         const OracleOptions& opt = {}) {
    detail::check_bound(g, opt, "all_barriers");
    int n = g.vertex_count();
    std::vector<Barrier> out;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        if (__builtin_popcountl(mask) > max_size) continue;
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) members.push_back(i + 1);
        if (auto b = is_barrier(g, VertexSet(std::move(members)))) out.push_back(std::move(*b));
    }
    std::sort(out.begin(), out.end(),
              [](const Barrier& a, const Barrier& b) {
                  if (a.members.size() != b.members.size())
                      return a.members.size() < b.members.size();
                  return a.members < b.members;
              });
    return out;
}

inline std::vector<TwoSeparation> all_two_separations(const Multigraph& g) {
    return find_two_separations(g);  // the pair scan is already exhaustive
}

// Brute-force route: some nontrivial ELP cut laminar with c, if one exists.
inline std::optional<ElpCut> brute_force_laminar_elp_cut(const Multigraph& g, const Cut& c,
                                                         const OracleOptions& opt = {}) {
    detail::check_bound(g, opt, "brute_force_laminar_elp_cut");
    for (const TwoSeparation& sep : all_two_separations(g))
        for (const VertexSet& comp : sep.even_components)
            for (int w : {sep.u, sep.v}) {
                Cut cut = boundary(g, comp.with(w));
                if (!cut.trivial() && laminar(cut, c)) {
                    ElpCut out;
                    out.kind = ElpCut::Kind::separation_cut;
                    out.sep = sep;
                    out.nontrivial = true;
                    out.cut = std::move(cut);
                    return out;
                }
            }
    for (const Barrier& b : all_barriers(g, g.vertex_count(), opt)) {
        if (!b.nontrivial()) continue;
        for (std::size_t i = 0; i < b.odd_components.size(); ++i) {
            Cut cut = boundary(g, b.odd_components[i]);
            if (!cut.trivial() && laminar(cut, c)) {
                ElpCut out;
                out.kind = ElpCut::Kind::barrier_cut;
                out.barrier = b;
                out.component_index = static_cast<int>(i);
                out.nontrivial = true;
                out.cut = std::move(cut);
                return out;
            }
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------ verification

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;  // serialized context for a failure, replayable
};

struct VerificationReport {
    std::string graph_id;
    bool matching_covered = false;
    int nontrivial_tight_cuts = 0;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::string shore_string(const VertexSet& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

inline void add_check(VerificationReport& report, const std::string& name, bool pass,
                      const std::string& witness = "") {
    report.checks.push_back({name, pass, pass ? "" : witness});
}

}  // namespace detail

// Runs every structural check against g, with witnesses on failure: the
// laminar search succeeds and certifies on every nontrivial tight cut, each
// result induces a nontrivial ELP cut laminar with it (confirmed by brute
// force), the ELP existence facts hold, decomposition is invariant across
// the three strategies, and the supporting facts hold (independence of
// barriers, meet/join tightness, connected shores, 2-connectivity).
inline VerificationReport verify_graph(const Multigraph& g, const std::string& graph_id = "",
                                       const OracleOptions& opt = {}) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.graph_id = graph_id;
    detail::check_bound(g, opt, "verify_graph");
    report.matching_covered = is_matching_covered(g);
    if (!report.matching_covered) {
        report.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    std::vector<Cut> tight = all_tight_cuts(g, opt);
    std::vector<Cut> nontrivial;
    for (const Cut& c : tight)
        if (!c.trivial()) nontrivial.push_back(c);
    report.nontrivial_tight_cuts = static_cast<int>(nontrivial.size());

    // (a) laminar search per nontrivial tight cut, plus the induced cuts
    for (const Cut& c : nontrivial) {
        std::string at = "shore " + detail::shore_string(c.shore());
        try {
            LaminarResult r = find_laminar_elp(g, c);
            LaminarCertificate cert = certify(g, c, r);
            detail::add_check(report, "laminar-certificate", cert.ok(), at + ": " + cert.detail);
            detail::add_check(report, "laminar-constructive", !r.divergence.has_value(),
                              at + ": " + r.divergence.value_or(""));
            ElpCut derived = derived_laminar_elp_cut(g, c, r);
            bool conj = derived.nontrivial && laminar(derived.cut, c) && is_tight(g, derived.cut);
            detail::add_check(report, "laminar-elp-cut-derived", conj, at);
        } catch (const std::exception& e) {
            detail::add_check(report, "laminar-totality", false, at + ": " + e.what());
            continue;
        }
        bool brute = brute_force_laminar_elp_cut(g, c, opt).has_value();
        detail::add_check(report, "laminar-elp-cut-exists", brute, at);
    }

    // (b) ELP theorem: a nontrivial tight cut forces a nontrivial barrier or
    // a 2-separation, and the scan realizes a nontrivial ELP cut
    if (!nontrivial.empty()) {
        bool has_structure =
            find_nontrivial_barrier(g).has_value() || !find_two_separations(g).empty();
        detail::add_check(report, "elp-theorem-structure", has_structure);
        detail::add_check(report, "elp-cut-found", find_nontrivial_elp_cut(g).has_value());
    }
    // scan completeness both ways: no nontrivial tight cut, no ELP cut claimed
    {
        bool scan = find_nontrivial_elp_cut(g).has_value();
        detail::add_check(report, "elp-scan-matches-oracle", scan == !nontrivial.empty(),
                          scan ? "scan found a cut on a brick/brace" : "scan missed every cut");
    }

    // (c) decomposition invariance across the three strategies
    {
        DecompositionTree a = decompose(g, CutStrategy::lex_first);
        DecompositionTree b = decompose(g, CutStrategy::max_min_shore);
        DecompositionTree c3 = decompose(g, CutStrategy::reversed_order);
        bool same_leaves = a.leaf_signatures() == b.leaf_signatures() &&
                           b.leaf_signatures() == c3.leaf_signatures();
        bool same_bricks =
            a.brick_number == b.brick_number && b.brick_number == c3.brick_number;
        detail::add_check(report, "decomposition-invariance", same_leaves && same_bricks);
        for (const DecompositionNode& node : a.nodes)
            if (node.cut)
                detail::add_check(report, "decomposition-cuts-tight",
                                  is_tight(node.graph, *node.cut));
    }

    // (d) supporting facts
    {
        int n = g.vertex_count();
        bool barrier_shape = true;
        std::string witness;
        for (unsigned long mask = 1; mask < (1UL << n) && barrier_shape; ++mask) {
            std::vector<int> members;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) members.push_back(i + 1);
            VertexSet s(std::move(members));
            ComponentSplit split = components(g, s);
            if (split.odd_count > s.size()) {
                barrier_shape = false;
                witness = "tutte violated at " + detail::shore_string(s);
            } else if (split.odd_count == s.size()) {
                for (int a : s)
                    for (int b : g.neighbors(a))
                        if (b > a && s.contains(b)) barrier_shape = false;
                if (split.odd_count != static_cast<int>(split.parts.size())) barrier_shape = false;
                if (!barrier_shape)
                    witness = "barrier not independent or with an even component at " +
                              detail::shore_string(s);
            }
        }
        detail::add_check(report, "barriers-independent-odd-only", barrier_shape, witness);

        bool prop3 = true;
        for (const Cut& c : tight)
            for (const Cut& d : tight) {
                for (const VertexSet& x : {c.shore(), complement(g, c.shore())}) {
                    VertexSet y = d.shore();
                    if (!set_intersection(x, y).odd()) continue;
                    try {
                        cut_meet_join(g, x, y);
                    } catch (const internal_invariant_error&) {
                        prop3 = false;
                    }
                }
            }
        detail::add_check(report, "meet-join-tight", prop3);

        bool shores_connected = true;
        for (const Cut& c : tight) {
            if (components(g, complement(g, c.shore())).parts.size() != 1) shores_connected = false;
            if (components(g, c.shore()).parts.size() != 1) shores_connected = false;
        }
        detail::add_check(report, "tight-shores-connected", shores_connected);

        if (g.vertex_count() >= 4)
            detail::add_check(report, "two-connected", is_two_connected(g));
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace tightcut
