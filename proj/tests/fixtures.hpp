#pragma once

// Shared test fixtures: the named graphs, brute-force oracles independent of
// the library's algorithms, and seeded random generators.

#include <random>

#include "tightcut/graph_core.hpp"

namespace fixtures {

using tightcut::Multigraph;
using tightcut::VertexSet;

inline Multigraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({n, 1});
    return Multigraph(n, std::move(edges));
}

inline Multigraph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Multigraph(n, std::move(edges));
}

inline Multigraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
    return Multigraph(n, std::move(edges));
}

// parts {1,2,3} and {4,5,6}
inline Multigraph k33() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j) edges.push_back({i, j});
    return Multigraph(6, std::move(edges));
}

// triangles 123 and 456 joined by 14, 25, 36
inline Multigraph prism() {
    return Multigraph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {1, 4}, {2, 5}, {3, 6}});
}

// binary 3-cube on 1..8 (vertex v-1 in binary, edges differ in one bit)
inline Multigraph cube() {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            if (__builtin_popcount(a ^ b) == 1) edges.push_back({a + 1, b + 1});
    return Multigraph(8, std::move(edges));
}

// outer 5-cycle 1..5, inner pentagram 6..10, spokes i -> i+5
inline Multigraph petersen() {
    std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                                           {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},
                                           {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}};
    return Multigraph(10, std::move(edges));
}

// triangle {1,2,3} fully joined to 4 and partially to 5, vertex 6 on {4,5};
// matching covered with no 2-separations, boundary({1,2,3}) is a nontrivial
// tight cut and {4,5} the barrier realizing it
inline Multigraph triangle_barrier() {
    return Multigraph(
        6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {2, 5}, {1, 5}, {4, 6}, {5, 6}});
}

// two triangle lobes hanging off the degree-2 pair {1,2}; the only
// 2-separation is {1,2} and both of its components are unbalanced and not
// good for the tight cut over shore {2,3,4,5,7,8,9}
inline Multigraph unbalanced_pair() {
    return Multigraph(10, {{3, 6}, {4, 6}, {5, 6}, {7, 10}, {8, 10}, {9, 10}, {1, 6}, {1, 10},
                           {3, 4}, {4, 5}, {3, 5}, {7, 8}, {8, 9}, {7, 9}, {2, 5}, {2, 9},
                           {2, 4}, {2, 8}});
}

// ------------------------------------------------------------------ oracles

// Maximum matching size by edge backtracking; independent of the blossom
// engine.
inline int brute_max_matching(const Multigraph& g) {
    int m = g.edge_count();
    int best = 0;
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()) + 1, false);
    auto rec = [&](auto&& self, int from, int size) -> void {
        best = std::max(best, size);
        for (int e = from; e < m; ++e) {
            auto [u, v] = g.endpoints(e);
            if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
            self(self, e + 1, size + 1);
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(rec, 0, 0);
    return best;
}

// Count of perfect matchings by the same backtracking.
inline long brute_count_perfect_matchings(const Multigraph& g) {
    if (g.vertex_count() % 2 != 0) return 0;
    long count = 0;
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()) + 1, false);
    auto rec = [&](auto&& self) -> void {
        int v = 0;
        for (int i = 1; i <= g.vertex_count(); ++i)
            if (!used[static_cast<std::size_t>(i)]) {
                v = i;
                break;
            }
        if (v == 0) {
            ++count;
            return;
        }
        for (int e : g.incident(v)) {
            int w = g.other_end(e, v);
            if (w == v || used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(w)] = true;
            self(self);
            used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(w)] = false;
        }
    };
    rec(rec);
    return count;
}

// Random connected graph on n vertices, about density*C(n,2) edges.
inline Multigraph random_connected(std::mt19937& rng, int n, double density) {
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (coin(rng) < density) edges.push_back({i, j});
        Multigraph g(n, edges);
        if (tightcut::is_connected(g)) return g;
    }
}

inline VertexSet random_proper_subset(std::mt19937& rng, int n) {
    for (;;) {
        std::vector<int> ids;
        std::uniform_int_distribution<int> coin(0, 1);
        for (int v = 1; v <= n; ++v)
            if (coin(rng)) ids.push_back(v);
        if (!ids.empty() && static_cast<int>(ids.size()) < n) return VertexSet(std::move(ids));
    }
}

}  // namespace fixtures
