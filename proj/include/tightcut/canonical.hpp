#pragma once

// Canonical form of the simple support of a small graph: the
// lexicographically smallest upper-triangle adjacency bitstring over all
// vertex orderings, found by branch and bound. Intended for desk-scale
// graphs (n <= 16); decomposition leaves easily qualify. Repeated queries
// hit a per-thread cache.

#include <map>

#include "tightcut/graph_core.hpp"

namespace tightcut {

namespace detail {

inline std::string canonical_simple_form_uncached(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n) + 1,
                                       std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
    for (int v = 1; v <= n; ++v)
        for (int w : g.neighbors(v))
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = true;

    const int total_bits = n * (n - 1) / 2;
    std::vector<char> best;
    std::vector<char> cur(static_cast<std::size_t>(total_bits), 0);
    std::vector<int> perm;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        const int offset = depth * (depth - 1) / 2;
        // try low row bits first so the bound tightens early
        std::vector<std::pair<unsigned long, int>> candidates;
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            unsigned long bits = 0;
            for (int i = 0; i < depth; ++i)
                bits = bits << 1 |
                       (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] ? 1UL : 0UL);
            candidates.push_back({bits, v});
        }
        std::sort(candidates.begin(), candidates.end());
        for (auto [bits, v] : candidates) {
            for (int i = depth - 1; i >= 0; --i) {
                cur[static_cast<std::size_t>(offset + i)] = static_cast<char>(bits & 1);
                bits >>= 1;
            }
            if (!best.empty()) {
                int cmp = 0;
                for (int k = 0; k < offset + depth; ++k) {
                    if (cur[static_cast<std::size_t>(k)] != best[static_cast<std::size_t>(k)]) {
                        cmp = cur[static_cast<std::size_t>(k)] < best[static_cast<std::size_t>(k)] ? -1 : 1;
                        break;
                    }
                }
                if (cmp > 0) continue;
            }
            used[static_cast<std::size_t>(v)] = true;
            perm.push_back(v);
            self(self, depth + 1);
            perm.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    if (n > 1) rec(rec, 0);

    std::string out = "n" + std::to_string(n) + ":";
    for (char b : best) out.push_back(b ? '1' : '0');
    return out;
}

}  // namespace detail

inline std::string canonical_simple_form(const Multigraph& g) {
    if (g.vertex_count() > 16) throw domain_error("canonical form supports at most 16 vertices");
    thread_local std::map<std::pair<int, std::vector<std::pair<int, int>>>, std::string> cache;
    std::vector<std::pair<int, int>> key_edges;
    for (auto [u, v] : g.edges()) key_edges.push_back(std::minmax(u, v));
    std::sort(key_edges.begin(), key_edges.end());
    key_edges.erase(std::unique(key_edges.begin(), key_edges.end()), key_edges.end());
    auto key = std::pair{g.vertex_count(), std::move(key_edges)};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::string form = detail::canonical_simple_form_uncached(g);
    cache.emplace(std::move(key), form);
    return form;
}

inline bool isomorphic_simple(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    return canonical_simple_form(a) == canonical_simple_form(b);
}

}  // namespace tightcut
