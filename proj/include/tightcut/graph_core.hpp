#pragma once

// Loop-free undirected multigraph with the set/cut algebra everything else
// builds on: coboundaries, components, contraction, crossing/laminarity.

#include <algorithm>
#include <initializer_list>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tightcut {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated precondition or semantically invalid input (e.g. graph not
// matching covered, improper shore).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verification the theory guarantees has failed; reaching one of these
// means a bug or a refuted proof branch, never bad input.
struct internal_invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------- VertexSet

// Sorted set of 1-based vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
        if (!ids_.empty() && ids_.front() < 1)
            throw domain_error("vertex ids are 1-based");
    }
    VertexSet(std::initializer_list<int> ids) : VertexSet(std::vector<int>(ids)) {}

    static VertexSet full(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        VertexSet s;
        s.ids_ = std::move(v);
        return s;
    }

    const std::vector<int>& ids() const { return ids_; }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    bool odd() const { return ids_.size() % 2 == 1; }
    int min_id() const {
        if (ids_.empty()) throw domain_error("min_id of empty set");
        return ids_.front();
    }
    bool contains(int v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }
    bool subset_of(const VertexSet& other) const {
        return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
    }
    VertexSet with(int v) const {
        VertexSet s = *this;
        auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
        if (it == s.ids_.end() || *it != v) s.ids_.insert(it, v);
        return s;
    }
    VertexSet without(int v) const {
        VertexSet s = *this;
        auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
        if (it != s.ids_.end() && *it == v) s.ids_.erase(it);
        return s;
    }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.ids_ == b.ids_; }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.ids_ < b.ids_; }

private:
    std::vector<int> ids_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

// --------------------------------------------------------------- Multigraph

// Immutable loop-free multigraph. Vertices are 1..n; edge ids are 0..m-1 and
// stable: every operation that derives a graph reports how edge ids map back.
class Multigraph {
public:
    Multigraph(int vertex_count, std::vector<std::pair<int, int>> edges)
        : n_(vertex_count), edges_(std::move(edges)) {
        if (n_ < 1) throw domain_error("vertex count must be positive");
        incident_.assign(static_cast<std::size_t>(n_) + 1, {});
        neighbors_.assign(static_cast<std::size_t>(n_) + 1, {});
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            auto [u, v] = edges_[e];
            if (u < 1 || u > n_ || v < 1 || v > n_)
                throw domain_error("edge endpoint out of range");
            if (u == v) throw domain_error("loops are not allowed");
            incident_[static_cast<std::size_t>(u)].push_back(static_cast<int>(e));
            incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
        }
        for (int v = 1; v <= n_; ++v) {
            auto& nb = neighbors_[static_cast<std::size_t>(v)];
            for (int e : incident_[static_cast<std::size_t>(v)]) nb.push_back(other_end(e, v));
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& endpoints(int e) const {
        return edges_.at(static_cast<std::size_t>(e));
    }
    int other_end(int e, int v) const {
        auto [a, b] = endpoints(e);
        if (a == v) return b;
        if (b == v) return a;
        throw domain_error("vertex not an endpoint of edge");
    }
    // Edge ids incident to v, ascending.
    const std::vector<int>& incident(int v) const {
        check_vertex(v);
        return incident_[static_cast<std::size_t>(v)];
    }
    // Distinct neighbours of v, ascending.
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return neighbors_[static_cast<std::size_t>(v)];
    }
    bool adjacent(int u, int v) const {
        const auto& nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }
    int degree(int v) const { return static_cast<int>(incident(v).size()); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    // Representative edge id per parallel class, keyed by normalized endpoints.
    std::vector<int> parallel_class_representatives() const {
        std::vector<std::pair<std::pair<int, int>, int>> seen;
        std::vector<int> reps;
        for (int e = 0; e < edge_count(); ++e) {
            auto [u, v] = endpoints(e);
            std::pair<int, int> key{std::min(u, v), std::max(u, v)};
            bool found = false;
            for (auto& s : seen)
                if (s.first == key) { found = true; break; }
            if (!found) {
                seen.push_back({key, e});
                reps.push_back(e);
            }
        }
        return reps;
    }

    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw domain_error("vertex id out of range");
    }
    void check_set(const VertexSet& s) const {
        if (!s.empty() && (s.min_id() < 1 || s.ids().back() > n_))
            throw domain_error("vertex set out of range");
    }

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::vector<int>> neighbors_;
};

inline VertexSet complement(const Multigraph& g, const VertexSet& s) {
    return set_difference(g.vertices(), s);
}

// ---------------------------------------------------------------------- Cut

// Coboundary of a shore, canonicalized: the stored shore is the one
// containing vertex 1, which gives Cut a total equality.
class Cut {
public:
    Cut() = default;

    const VertexSet& shore() const { return shore_; }
    const std::vector<int>& edge_ids() const { return edge_ids_; }
    bool trivial() const { return trivial_; }
    int graph_n() const { return n_; }
    int graph_m() const { return m_; }

    friend bool operator==(const Cut& a, const Cut& b) {
        return a.n_ == b.n_ && a.shore_ == b.shore_;
    }
    friend bool operator!=(const Cut& a, const Cut& b) { return !(a == b); }
    friend bool operator<(const Cut& a, const Cut& b) { return a.shore_ < b.shore_; }

    friend Cut boundary(const Multigraph& g, const VertexSet& s);

private:
    VertexSet shore_;
    std::vector<int> edge_ids_;
    bool trivial_ = false;
    int n_ = 0;
    int m_ = 0;
};

inline Cut boundary(const Multigraph& g, const VertexSet& s) {
    g.check_set(s);
    if (s.empty() || s.size() == g.vertex_count())
        throw domain_error("shore must be a nonempty proper subset");
    Cut c;
    c.shore_ = s.contains(1) ? s : complement(g, s);
    c.n_ = g.vertex_count();
    c.m_ = g.edge_count();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (s.contains(u) != s.contains(v)) c.edge_ids_.push_back(e);
    }
    c.trivial_ = s.size() == 1 || s.size() == g.vertex_count() - 1;
    return c;
}

// Two cuts are laminar iff some shore of one is contained in a shore of the
// other, i.e. not all four quadrants are nonempty.
inline bool laminar(const Cut& c, const Cut& d) {
    if (c.graph_n() != d.graph_n() || c.graph_m() != d.graph_m())
        throw domain_error("cuts over different graphs");
    const VertexSet& x = c.shore();
    const VertexSet& y = d.shore();
    int n = c.graph_n();
    int xy = set_intersection(x, y).size();
    int x_only = x.size() - xy;
    int y_only = y.size() - xy;
    int rest = n - xy - x_only - y_only;
    return xy == 0 || x_only == 0 || y_only == 0 || rest == 0;
}

// --------------------------------------------------------------- Components

struct ComponentSplit {
    std::vector<VertexSet> parts;  // ordered by smallest contained vertex
    int odd_count = 0;
};

inline ComponentSplit components(const Multigraph& g, const VertexSet& removed = {}) {
    g.check_set(removed);
    ComponentSplit out;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()) + 1, false);
    for (int v : removed) seen[static_cast<std::size_t>(v)] = true;
    for (int start = 1; start <= g.vertex_count(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> part{start};
        seen[static_cast<std::size_t>(start)] = true;
        for (std::size_t i = 0; i < part.size(); ++i)
            for (int w : g.neighbors(part[i]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    part.push_back(w);
                }
        out.parts.emplace_back(std::move(part));
        if (out.parts.back().odd()) ++out.odd_count;
    }
    return out;
}

inline bool is_connected(const Multigraph& g) {
    return components(g).parts.size() == 1;
}

inline bool is_bipartite(const Multigraph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int start = 1; start <= g.vertex_count(); ++start) {
        if (color[static_cast<std::size_t>(start)] != 0) continue;
        color[static_cast<std::size_t>(start)] = 1;
        std::vector<int> queue{start};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] == 0) {
                    color[static_cast<std::size_t>(w)] = -color[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_two_connected(const Multigraph& g) {
    if (g.vertex_count() < 3) return is_connected(g);
    if (!is_connected(g)) return false;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (components(g, VertexSet{v}).parts.size() > 1) return false;
    return true;
}

// -------------------------------------------------------- Induced subgraphs

struct InducedSubgraph {
    Multigraph graph;
    std::vector<int> to_original_vertex;  // sub id -> original id ([0] unused)
    std::vector<int> to_sub_vertex;       // original id -> sub id, 0 if dropped
    std::vector<int> to_original_edge;    // sub edge id -> original edge id
};

inline InducedSubgraph induced(const Multigraph& g, const VertexSet& keep) {
    g.check_set(keep);
    if (keep.empty()) throw domain_error("induced subgraph on empty set");
    std::vector<int> to_orig(static_cast<std::size_t>(keep.size()) + 1, 0);
    std::vector<int> to_sub(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    int next = 1;
    for (int v : keep) {
        to_orig[static_cast<std::size_t>(next)] = v;
        to_sub[static_cast<std::size_t>(v)] = next;
        ++next;
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_map;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (keep.contains(u) && keep.contains(v)) {
            edges.push_back({to_sub[static_cast<std::size_t>(u)], to_sub[static_cast<std::size_t>(v)]});
            edge_map.push_back(e);
        }
    }
    return {Multigraph(keep.size(), std::move(edges)), std::move(to_orig), std::move(to_sub),
            std::move(edge_map)};
}

inline InducedSubgraph delete_vertices(const Multigraph& g, const VertexSet& removed) {
    return induced(g, complement(g, removed));
}

// -------------------------------------------------------------- Contraction

// Result of contracting a vertex set to a single vertex. Surviving vertices
// are densely relabeled to 1..n'-1 in ascending order; the contracted vertex
// receives the largest id, which keeps recursion traces deterministic.
struct Contraction {
    Multigraph result;
    int contracted_label;
    std::vector<VertexSet> origin_of;   // result vertex -> original set ([0] unused)
    std::vector<int> image_of;          // original vertex -> result vertex ([0] unused)
    std::vector<int> retained_edge_map; // result edge id -> original edge id

    // Map a set of original vertices into the result.
    VertexSet to_result(const VertexSet& orig) const {
        std::vector<int> out;
        for (int v : orig) out.push_back(image_of[static_cast<std::size_t>(v)]);
        return VertexSet(std::move(out));
    }
    // Expand a set of result vertices back to original ids.
    VertexSet to_original(const VertexSet& res) const {
        VertexSet out;
        for (int v : res) out = set_union(out, origin_of[static_cast<std::size_t>(v)]);
        return out;
    }
};

inline Contraction contract(const Multigraph& g, const VertexSet& s) {
    g.check_set(s);
    if (s.empty() || s.size() == g.vertex_count())
        throw domain_error("contracted set must be a nonempty proper subset");
    VertexSet kept = complement(g, s);
    int np = kept.size() + 1;
    std::vector<int> image(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<VertexSet> origin(static_cast<std::size_t>(np) + 1);
    int next = 1;
    for (int v : kept) {
        image[static_cast<std::size_t>(v)] = next;
        origin[static_cast<std::size_t>(next)] = VertexSet{v};
        ++next;
    }
    int label = np;
    for (int v : s) image[static_cast<std::size_t>(v)] = label;
    origin[static_cast<std::size_t>(label)] = s;

    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_map;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        int iu = image[static_cast<std::size_t>(u)];
        int iv = image[static_cast<std::size_t>(v)];
        if (iu == iv) continue;  // internal edge of s, would be a loop
        edges.push_back({iu, iv});
        edge_map.push_back(e);
    }
    return {Multigraph(np, std::move(edges)), label, std::move(origin), std::move(image),
            std::move(edge_map)};
}

// ------------------------------------------------------------------ Parsing

// Edge-list format: optional '#' comment lines, a header "p mcg <n> <m>",
// then exactly m lines "e <u> <v>" with 1-based ids.
inline Multigraph parse_edge_list(std::istream& in) {
    std::string line;
    auto next_content_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw parse_error("missing header line");
    std::istringstream hs(header);
    std::string p, fmt;
    long n = 0, m = 0;
    if (!(hs >> p >> fmt >> n >> m) || p != "p" || fmt != "mcg" || n < 1 || m < 0)
        throw parse_error("malformed header, expected \"p mcg <n> <m>\"");
    std::string rest;
    if (hs >> rest) throw parse_error("trailing tokens after header");

    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i < m; ++i) {
        std::string el;
        if (!next_content_line(el)) throw parse_error("fewer edge lines than declared");
        std::istringstream es(el);
        std::string tag;
        long u = 0, v = 0;
        if (!(es >> tag >> u >> v) || tag != "e")
            throw parse_error("malformed edge line, expected \"e <u> <v>\"");
        if (es >> rest) throw parse_error("trailing tokens on edge line");
        if (u < 1 || u > n || v < 1 || v > n) throw parse_error("endpoint out of range");
        if (u == v) throw parse_error("loop edge rejected");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    std::string extra;
    if (next_content_line(extra)) throw parse_error("more edge lines than declared");
    return Multigraph(static_cast<int>(n), std::move(edges));
}

inline Multigraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string format_edge_list(const Multigraph& g) {
    std::ostringstream out;
    out << "p mcg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        out << "e " << u << ' ' << v << '\n';
    }
    return out.str();
}

// graph6 for simple graphs on at most 62 vertices (the corpus scale).
// Edge ids follow the format's column-major bit order.
inline Multigraph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw parse_error("empty graph6 line");
    if (s[0] == 126) throw parse_error("graph6 long form (n > 62) not supported");
    int n = s[0] - 63;
    if (n < 1) throw parse_error("invalid graph6 order byte");
    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long>(s.size()) - 1 != bytes_needed)
        throw parse_error("graph6 line has wrong length");
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            char c = s[static_cast<std::size_t>(1 + bit / 6)];
            if (c < 63 || c > 126) throw parse_error("invalid graph6 byte");
            int b = (c - 63) >> (5 - bit % 6) & 1;
            if (b) edges.push_back({i, j});
            ++bit;
        }
    return Multigraph(n, std::move(edges));
}

inline std::string format_graph6(const Multigraph& g) {
    int n = g.vertex_count();
    if (n > 62) throw domain_error("graph6 writer supports at most 62 vertices");
    for (int e = 0; e < g.edge_count(); ++e)
        for (int f = e + 1; f < g.edge_count(); ++f) {
            auto a = g.endpoints(e);
            auto b = g.endpoints(f);
            if (std::minmax(a.first, a.second) == std::minmax(b.first, b.second))
                throw domain_error("graph6 cannot encode parallel edges");
        }
    std::string s(1, static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                s.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) s.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return s;
}

// Autodetect edge-list vs graph6 by the leading byte.
inline Multigraph parse_graph_auto(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == 'p' || c == '#') return parse_edge_list(text);
        break;
    }
    std::istringstream in(text);
    std::string first;
    while (std::getline(in, first)) {
        if (first.find_first_not_of(" \t\r") != std::string::npos) return parse_graph6(first);
    }
    throw parse_error("empty input");
}

}  // namespace tightcut
