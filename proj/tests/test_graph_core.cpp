#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tightcut/graph_core.hpp"

using namespace tightcut;
using fixtures::cycle;

TEST_SUITE("parse") {
    TEST_CASE("k4 edge list") {
        Multigraph g = parse_edge_list(
            "p mcg 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 6);
        CHECK((g.endpoints(0) == std::pair{1, 2}));
        CHECK((g.endpoints(5) == std::pair{3, 4}));
    }

    TEST_CASE("loops rejected") {
        CHECK_THROWS_AS(parse_edge_list("p mcg 2 1\ne 1 1\n"), parse_error);
    }

    TEST_CASE("cycle with comments and degrees") {
        Multigraph g = parse_edge_list(
            "# six cycle\np mcg 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n");
        for (int v = 1; v <= 6; ++v) CHECK(g.degree(v) == 2);
    }

    TEST_CASE("malformed inputs") {
        CHECK_THROWS_AS(parse_edge_list("q mcg 2 1\ne 1 2\n"), parse_error);
        CHECK_THROWS_AS(parse_edge_list("p mcg 2 1\ne 1 3\n"), parse_error);
        CHECK_THROWS_AS(parse_edge_list("p mcg 2 2\ne 1 2\n"), parse_error);
        CHECK_THROWS_AS(parse_edge_list("p mcg 2 1\ne 1 2\ne 2 1\n"), parse_error);
    }

    TEST_CASE("graph6 round trip") {
        std::mt19937 rng(7);
        for (int iter = 0; iter < 40; ++iter) {
            Multigraph g = fixtures::random_connected(rng, 3 + iter % 8, 0.5);
            Multigraph back = parse_graph6(format_graph6(g));
            CHECK(back.vertex_count() == g.vertex_count());
            for (int u = 1; u <= g.vertex_count(); ++u)
                CHECK(back.neighbors(u) == g.neighbors(u));
        }
    }

    TEST_CASE("autodetect") {
        Multigraph a = parse_graph_auto("p mcg 2 1\ne 1 2\n");
        CHECK(a.edge_count() == 1);
        Multigraph b = parse_graph_auto(format_graph6(cycle(6)) + "\n");
        CHECK(b.vertex_count() == 6);
        CHECK(b.edge_count() == 6);
    }
}

TEST_SUITE("boundary") {
    TEST_CASE("c6 shore 123") {
        Multigraph g = cycle(6);
        Cut c = boundary(g, VertexSet{1, 2, 3});
        CHECK(c.edge_ids() == std::vector<int>{2, 5});  // 34 and 61
        CHECK(!c.trivial());
        CHECK(c.shore() == VertexSet{1, 2, 3});
    }

    TEST_CASE("star of a vertex") {
        Multigraph g = fixtures::complete(4);
        Cut c = boundary(g, VertexSet{1});
        CHECK(c.edge_ids().size() == 3);
        CHECK(c.trivial());
    }

    TEST_CASE("improper shore") {
        Multigraph g = cycle(6);
        CHECK_THROWS_AS(boundary(g, VertexSet{1, 2, 3, 4, 5, 6}), domain_error);
        CHECK_THROWS_AS(boundary(g, VertexSet{}), domain_error);
    }

    TEST_CASE("canonical shore contains vertex 1") {
        Multigraph g = cycle(6);
        Cut c = boundary(g, VertexSet{4, 5, 6});
        CHECK(c.shore() == VertexSet{1, 2, 3});
        CHECK(c == boundary(g, VertexSet{1, 2, 3}));
    }

    TEST_CASE("membership property: cut edge xor 0-or-2 ends inside") {
        std::mt19937 rng(11);
        for (int iter = 0; iter < 60; ++iter) {
            Multigraph g = fixtures::random_connected(rng, 4 + iter % 7, 0.45);
            VertexSet s = fixtures::random_proper_subset(rng, g.vertex_count());
            Cut c = boundary(g, s);
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [u, v] = g.endpoints(e);
                int inside = (s.contains(u) ? 1 : 0) + (s.contains(v) ? 1 : 0);
                bool in_cut =
                    std::binary_search(c.edge_ids().begin(), c.edge_ids().end(), e);
                CHECK(in_cut == (inside == 1));
            }
        }
    }
}

TEST_SUITE("components") {
    TEST_CASE("c6 deletions") {
        Multigraph g = cycle(6);
        ComponentSplit s = components(g, VertexSet{2, 6});
        REQUIRE(s.parts.size() == 2);
        CHECK(s.parts[0] == VertexSet{1});
        CHECK(s.parts[1] == VertexSet{3, 4, 5});
        CHECK(s.odd_count == 2);

        ComponentSplit t = components(g, VertexSet{1, 4});
        REQUIRE(t.parts.size() == 2);
        CHECK(t.parts[0] == VertexSet{2, 3});
        CHECK(t.parts[1] == VertexSet{5, 6});
        CHECK(t.odd_count == 0);

        ComponentSplit whole = components(g);
        CHECK(whole.parts.size() == 1);
        CHECK(whole.parts[0] == VertexSet::full(6));
        CHECK(whole.odd_count == 0);
    }

    TEST_CASE("parts partition and induce connected subgraphs") {
        std::mt19937 rng(13);
        for (int iter = 0; iter < 50; ++iter) {
            Multigraph g = fixtures::random_connected(rng, 5 + iter % 6, 0.35);
            VertexSet removed = fixtures::random_proper_subset(rng, g.vertex_count());
            ComponentSplit s = components(g, removed);
            VertexSet all;
            for (const VertexSet& part : s.parts) {
                CHECK(set_intersection(part, removed).empty());
                CHECK(set_intersection(part, all).empty());
                all = set_union(all, part);
                InducedSubgraph sub = induced(g, part);
                CHECK(is_connected(sub.graph));
            }
            CHECK(all == complement(g, removed));
        }
    }
}

TEST_SUITE("contract") {
    TEST_CASE("c6 contract back half") {
        Multigraph g = cycle(6);
        Contraction c = contract(g, VertexSet{4, 5, 6});
        CHECK(c.result.vertex_count() == 4);
        CHECK(c.contracted_label == 4);
        CHECK((c.result.edges() ==
               std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
        CHECK(c.retained_edge_map == std::vector<int>{0, 1, 2, 5});
        CHECK(c.origin_of[4] == VertexSet{4, 5, 6});
        CHECK(c.image_of[5] == 4);
    }

    TEST_CASE("singleton contraction of the last vertex is the identity") {
        Multigraph g = cycle(6);
        Contraction c = contract(g, VertexSet{6});
        CHECK(c.result.vertex_count() == 6);
        for (int v = 1; v <= 6; ++v) CHECK(c.image_of[v] == v);
        CHECK(c.result.edge_count() == 6);
    }

    TEST_CASE("k4 contraction keeps parallel edges") {
        Multigraph g = fixtures::complete(4);
        Contraction c = contract(g, VertexSet{1, 2, 3});
        CHECK(c.result.vertex_count() == 2);
        CHECK(c.result.edge_count() == 3);  // three parallel edges survive
        for (auto [u, v] : c.result.edges()) {
            CHECK(std::min(u, v) == 1);
            CHECK(std::max(u, v) == 2);
        }
    }

    TEST_CASE("retained edges map to matching endpoints") {
        std::mt19937 rng(17);
        for (int iter = 0; iter < 50; ++iter) {
            Multigraph g = fixtures::random_connected(rng, 5 + iter % 6, 0.4);
            VertexSet s = fixtures::random_proper_subset(rng, g.vertex_count());
            Contraction c = contract(g, s);
            for (int e = 0; e < c.result.edge_count(); ++e) {
                auto [u, v] = c.result.endpoints(e);
                auto [ou, ov] = g.endpoints(c.retained_edge_map[e]);
                VertexSet ends = set_union(c.origin_of[u], c.origin_of[v]);
                CHECK(ends.contains(ou));
                CHECK(ends.contains(ov));
            }
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (!s.contains(v)) CHECK(c.origin_of[c.image_of[v]] == VertexSet{v});
        }
    }
}

TEST_SUITE("laminar") {
    TEST_CASE("c6 crossing and nested shores") {
        Multigraph g = cycle(6);
        Cut a = boundary(g, VertexSet{1, 2, 3});
        Cut b = boundary(g, VertexSet{2, 3, 4});
        CHECK(!laminar(a, b));
        CHECK(laminar(a, a));
        CHECK(laminar(a, boundary(g, VertexSet{1})));
    }

    TEST_CASE("symmetric and complement-invariant") {
        std::mt19937 rng(19);
        for (int iter = 0; iter < 80; ++iter) {
            Multigraph g = fixtures::random_connected(rng, 5 + iter % 5, 0.45);
            VertexSet x = fixtures::random_proper_subset(rng, g.vertex_count());
            VertexSet y = fixtures::random_proper_subset(rng, g.vertex_count());
            Cut c = boundary(g, x);
            Cut d = boundary(g, y);
            CHECK(laminar(c, d) == laminar(d, c));
            CHECK(laminar(c, d) == laminar(boundary(g, complement(g, x)), d));
            CHECK(laminar(c, d) == laminar(c, boundary(g, complement(g, y))));
        }
    }

    TEST_CASE("mismatched graphs") {
        Cut a = boundary(cycle(6), VertexSet{1, 2, 3});
        Cut b = boundary(cycle(8), VertexSet{1, 2, 3});
        CHECK_THROWS_AS(laminar(a, b), domain_error);
    }
}
