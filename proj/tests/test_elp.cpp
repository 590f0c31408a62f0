#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tightcut/oracle.hpp"

using namespace tightcut;
using fixtures::cycle;

namespace {

std::vector<Multigraph> corpus() {
    return {cycle(4), cycle(6),          fixtures::complete(4),        fixtures::k33(),
            cycle(8), fixtures::prism(), fixtures::triangle_barrier(), fixtures::cube()};
}

}  // namespace

TEST_SUITE("is_barrier") {
    TEST_CASE("c6 examples") {
        Multigraph g = cycle(6);
        auto b = is_barrier(g, VertexSet{2, 6});
        REQUIRE(b.has_value());
        CHECK(b->odd_components[0] == VertexSet{1});
        CHECK(b->odd_components[1] == VertexSet{3, 4, 5});
        CHECK(!is_barrier(g, VertexSet{1, 2}).has_value());
        for (int v = 1; v <= 6; ++v) CHECK(is_barrier(g, VertexSet{v}).has_value());
        CHECK_THROWS_AS(is_barrier(g, VertexSet{}), domain_error);
    }
}

TEST_SUITE("is_two_separation") {
    TEST_CASE("c6 examples") {
        Multigraph g = cycle(6);
        auto s = is_two_separation(g, 1, 4);
        REQUIRE(s.has_value());
        CHECK(s->even_components[0] == VertexSet{2, 3});
        CHECK(s->even_components[1] == VertexSet{5, 6});
        CHECK(!is_two_separation(g, 1, 3).has_value());  // component {2} odd
        CHECK_THROWS_AS(is_two_separation(g, 2, 2), domain_error);
    }

    TEST_CASE("3-connected graphs have none") {
        for (const Multigraph& g : {fixtures::complete(4), fixtures::cube(), fixtures::petersen()})
            for (int u = 1; u <= g.vertex_count(); ++u)
                for (int v = u + 1; v <= g.vertex_count(); ++v)
                    CHECK(!is_two_separation(g, u, v).has_value());
    }
}

TEST_SUITE("find_two_separations") {
    TEST_CASE("cycles") {
        auto seps = find_two_separations(cycle(6));
        REQUIRE(seps.size() == 3);
        CHECK(seps[0].pair() == VertexSet{1, 4});
        CHECK(seps[1].pair() == VertexSet{2, 5});
        CHECK(seps[2].pair() == VertexSet{3, 6});
        CHECK(find_two_separations(fixtures::complete(4)).empty());
        // distance-3 and antipodal pairs both qualify: 10 + 5
        CHECK(find_two_separations(cycle(10)).size() == 15);
        CHECK(find_two_separations(fixtures::triangle_barrier()).empty());
    }
}

TEST_SUITE("find_nontrivial_barrier") {
    TEST_CASE("examples") {
        auto b = find_nontrivial_barrier(cycle(6));
        REQUIRE(b.has_value());
        CHECK(b->members == VertexSet{1, 3, 5});  // first failing pair {1,3}, a_set {5}
        CHECK(!find_nontrivial_barrier(fixtures::complete(4)).has_value());
        auto c4 = find_nontrivial_barrier(cycle(4));
        REQUIRE(c4.has_value());
        CHECK(c4->members == VertexSet{1, 3});
    }

    TEST_CASE("absent exactly on bicritical graphs") {
        for (const Multigraph& g : corpus())
            CHECK(find_nontrivial_barrier(g).has_value() == !is_bicritical(g));
        CHECK(!find_nontrivial_barrier(fixtures::petersen()).has_value());
    }
}

TEST_SUITE("barrier_cuts") {
    TEST_CASE("examples") {
        Multigraph g = cycle(6);
        auto cuts = barrier_cuts(g, *is_barrier(g, VertexSet{2, 6}));
        REQUIRE(cuts.size() == 2);
        CHECK(cuts[0] == boundary(g, VertexSet{1}));
        CHECK(cuts[1] == boundary(g, VertexSet{3, 4, 5}));

        Multigraph c4 = cycle(4);
        auto c4cuts = barrier_cuts(c4, *is_barrier(c4, VertexSet{1, 3}));
        REQUIRE(c4cuts.size() == 2);
        for (const Cut& c : c4cuts) CHECK(c.trivial());

        auto trivial = barrier_cuts(g, *is_barrier(g, VertexSet{3}));
        REQUIRE(trivial.size() == 1);
        CHECK(trivial[0].trivial());
    }

    TEST_CASE("always tight") {
        for (const Multigraph& g : corpus())
            for (const Barrier& b : all_barriers(g, g.vertex_count()))
                for (const Cut& c : barrier_cuts(g, b)) CHECK(is_tight(g, c));
    }
}

TEST_SUITE("separation_cut_pair") {
    TEST_CASE("c6 sides") {
        Multigraph g = cycle(6);
        auto sep14 = *is_two_separation(g, 1, 4);
        auto [a, b] = separation_cut_pair(g, sep14, VertexSet{2, 3});
        CHECK(a == boundary(g, VertexSet{1, 2, 3}));
        CHECK(b == boundary(g, VertexSet{2, 3, 4}));

        auto sep25 = *is_two_separation(g, 2, 5);
        auto [c, d] = separation_cut_pair(g, sep25, VertexSet{3, 4});
        CHECK(c == boundary(g, VertexSet{2, 3, 4}));
        CHECK(d == boundary(g, VertexSet{3, 4, 5}));

        CHECK_THROWS_AS(separation_cut_pair(g, sep14, VertexSet{2, 3, 5, 6}), domain_error);
        CHECK_THROWS_AS(separation_cut_pair(g, sep14, VertexSet{2}), domain_error);
    }
}

TEST_SUITE("find_nontrivial_elp_cut") {
    TEST_CASE("examples") {
        auto c6 = find_nontrivial_elp_cut(cycle(6));
        REQUIRE(c6.has_value());
        CHECK(c6->kind == ElpCut::Kind::separation_cut);
        CHECK(c6->sep->pair() == VertexSet{1, 4});
        CHECK(c6->cut == boundary(cycle(6), VertexSet{1, 2, 3}));
        CHECK(c6->nontrivial);

        CHECK(!find_nontrivial_elp_cut(fixtures::complete(4)).has_value());
        // the 4-cycle has the nontrivial barrier {1,3} yet no nontrivial ELP cut
        CHECK(!find_nontrivial_elp_cut(cycle(4)).has_value());
        CHECK(!find_nontrivial_elp_cut(fixtures::petersen()).has_value());

        auto tb = find_nontrivial_elp_cut(fixtures::triangle_barrier());
        REQUIRE(tb.has_value());
        CHECK(tb->kind == ElpCut::Kind::barrier_cut);
        CHECK(tb->nontrivial);
    }

    TEST_CASE("existence matches the tight-cut oracle") {
        for (const Multigraph& g : corpus()) {
            int nontrivial = 0;
            for (const Cut& c : all_tight_cuts(g))
                if (!c.trivial()) ++nontrivial;
            for (CutStrategy s : {CutStrategy::lex_first, CutStrategy::max_min_shore,
                                  CutStrategy::reversed_order}) {
                auto cut = find_nontrivial_elp_cut(g, s);
                CHECK(cut.has_value() == (nontrivial > 0));
                if (cut) {
                    CHECK(cut->nontrivial);
                    CHECK(is_tight(g, cut->cut));
                }
            }
        }
    }
}

TEST_SUITE("shelter_status") {
    TEST_CASE("c6 examples") {
        Multigraph g = cycle(6);
        Cut c = boundary(g, VertexSet{1, 2, 3});
        CHECK(shelter_status(g, c, VertexSet{1, 3}, StructureKind::barrier).status ==
              ShelterStatus::sheltered);
        ShelterReport crossing = shelter_status(g, c, VertexSet{2, 6}, StructureKind::barrier);
        CHECK(crossing.status == ShelterStatus::crossing);
        REQUIRE(crossing.witness.has_value());
        CHECK(*crossing.witness == boundary(g, VertexSet{3, 4, 5}));
    }

    TEST_CASE("sheltered structures never cross") {
        for (const Multigraph& g : corpus()) {
            std::vector<Cut> tights = all_tight_cuts(g);
            for (const Cut& c : tights) {
                for (const Barrier& b : all_barriers(g, g.vertex_count())) {
                    if (!b.members.subset_of(c.shore()) &&
                        !b.members.subset_of(complement(g, c.shore())))
                        continue;
                    CHECK(shelter_status(g, c, b.members, StructureKind::barrier).status ==
                          ShelterStatus::sheltered);
                }
                for (const TwoSeparation& s : find_two_separations(g)) {
                    if (!s.pair().subset_of(c.shore()) &&
                        !s.pair().subset_of(complement(g, c.shore())))
                        continue;
                    ShelterReport rep =
                        shelter_status(g, c, s.pair(), StructureKind::two_separation);
                    CHECK(rep.status == ShelterStatus::sheltered);
                    // sheltered implies every associated cut is laminar with c
                    for (const Cut& cut : associated_cuts(g, s.pair(), StructureKind::two_separation))
                        CHECK(laminar(cut, c));
                }
            }
        }
    }

    TEST_CASE("rejects invalid structures") {
        Multigraph g = cycle(6);
        Cut c = boundary(g, VertexSet{1, 2, 3});
        CHECK_THROWS_AS(shelter_status(g, c, VertexSet{1, 2}, StructureKind::barrier),
                        domain_error);
        CHECK_THROWS_AS(shelter_status(g, c, VertexSet{1, 3}, StructureKind::two_separation),
                        domain_error);
    }
}

TEST_SUITE("elp theorem") {
    TEST_CASE("nontrivial tight cut forces a nontrivial barrier or separation") {
        for (const Multigraph& g : corpus()) {
            bool has_nontrivial_tight = false;
            for (const Cut& c : all_tight_cuts(g))
                if (!c.trivial()) has_nontrivial_tight = true;
            if (has_nontrivial_tight)
                CHECK((find_nontrivial_barrier(g).has_value() ||
                       !find_two_separations(g).empty()));
        }
    }
}
