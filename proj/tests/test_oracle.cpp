#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "fixtures.hpp"
#include "tightcut/oracle.hpp"

using namespace tightcut;
using fixtures::cycle;

TEST_SUITE("all_tight_cuts") {
    TEST_CASE("c6 has six trivial and three nontrivial") {
        Multigraph g = cycle(6);
        std::vector<Cut> cuts = all_tight_cuts(g);
        int trivial = 0;
        std::vector<Cut> nontrivial;
        for (const Cut& c : cuts) {
            if (c.trivial())
                ++trivial;
            else
                nontrivial.push_back(c);
        }
        CHECK(trivial == 6);
        REQUIRE(nontrivial.size() == 3);
        // sorted by canonical shore: {1,2,3}, then {3,4,5} as {1,2,6}, then
        // {2,3,4} as {1,5,6}
        CHECK(nontrivial[0] == boundary(g, VertexSet{1, 2, 3}));
        CHECK(nontrivial[1] == boundary(g, VertexSet{3, 4, 5}));
        CHECK(nontrivial[2] == boundary(g, VertexSet{2, 3, 4}));
    }

    TEST_CASE("small orders admit only trivial cuts") {
        for (const Multigraph& g : {fixtures::complete(4), cycle(4)}) {
            for (const Cut& c : all_tight_cuts(g)) CHECK(c.trivial());
            CHECK(all_tight_cuts(g).size() == 4);
        }
    }

    TEST_CASE("bound and coveredness enforced") {
        OracleOptions small;
        small.max_n = 4;
        CHECK_THROWS_AS(all_tight_cuts(cycle(6), small), domain_error);
        CHECK_THROWS_AS(all_tight_cuts(fixtures::path(4)), domain_error);
    }

    TEST_CASE("agrees with the pairwise predicate cut for cut") {
        for (const Multigraph& g :
             {cycle(6), fixtures::prism(), fixtures::cube(), fixtures::triangle_barrier()}) {
            std::vector<Cut> oracle = all_tight_cuts(g);
            int n = g.vertex_count();
            std::vector<Cut> pairwise;
            for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
                if (__builtin_popcountl(mask) % 2 == 0) continue;
                std::vector<int> ids;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) ids.push_back(i + 1);
                Cut c = boundary(g, VertexSet(std::move(ids)));
                if (c.shore().contains(1) && static_cast<int>(mask) >= 0 && is_tight(g, c))
                    if (std::find(pairwise.begin(), pairwise.end(), c) == pairwise.end())
                        pairwise.push_back(c);
            }
            std::sort(pairwise.begin(), pairwise.end());
            CHECK(pairwise == oracle);
        }
    }
}

TEST_SUITE("all_barriers") {
    TEST_CASE("c6 has fourteen of size at most three") {
        std::vector<Barrier> barriers = all_barriers(cycle(6), 3);
        CHECK(barriers.size() == 14);
        int singletons = 0, pairs = 0, triples = 0;
        for (const Barrier& b : barriers) {
            if (b.members.size() == 1) ++singletons;
            if (b.members.size() == 2) ++pairs;
            if (b.members.size() == 3) ++triples;
        }
        CHECK(singletons == 6);
        CHECK(pairs == 6);
        CHECK(triples == 2);
        CHECK(barriers.back().members == VertexSet{2, 4, 6});
    }

    TEST_CASE("bicritical graphs have only singletons") {
        std::vector<Barrier> barriers = all_barriers(fixtures::complete(4), 4);
        CHECK(barriers.size() == 4);
        for (const Barrier& b : barriers) CHECK(b.members.size() == 1);
    }

    TEST_CASE("every matching covered graph has exactly n singleton barriers") {
        for (const Multigraph& g : {cycle(6), fixtures::prism(), fixtures::k33()})
            CHECK(static_cast<int>(all_barriers(g, 1).size()) == g.vertex_count());
    }

    TEST_CASE("nontrivial barriers exist iff not bicritical") {
        for (const Multigraph& g : {cycle(4), cycle(6), fixtures::complete(4), fixtures::k33(),
                                    fixtures::prism(), fixtures::cube(), fixtures::petersen()}) {
            bool nontrivial = false;
            for (const Barrier& b : all_barriers(g, g.vertex_count()))
                if (b.nontrivial()) nontrivial = true;
            CHECK(nontrivial == !is_bicritical(g));
        }
    }
}

TEST_SUITE("all_two_separations") {
    TEST_CASE("counts") {
        CHECK(all_two_separations(cycle(6)).size() == 3);
        CHECK(all_two_separations(fixtures::complete(4)).empty());
        CHECK(all_two_separations(cycle(10)).size() == 15);
    }
}

TEST_SUITE("verify_graph") {
    TEST_CASE("c6 passes with three nontrivial cuts") {
        VerificationReport r = verify_graph(cycle(6), "c6");
        CHECK(r.matching_covered);
        CHECK(r.nontrivial_tight_cuts == 3);
        CHECK(r.all_pass());
    }

    TEST_CASE("k4 passes vacuously") {
        VerificationReport r = verify_graph(fixtures::complete(4), "k4");
        CHECK(r.matching_covered);
        CHECK(r.nontrivial_tight_cuts == 0);
        CHECK(r.all_pass());
    }

    TEST_CASE("non covered graphs short-circuit") {
        VerificationReport r = verify_graph(fixtures::path(4), "p4");
        CHECK(!r.matching_covered);
        CHECK(r.checks.empty());
    }

    TEST_CASE("failures carry witnesses") {
        // sanity of the reporting shape on a passing run: no stray witnesses
        VerificationReport r = verify_graph(fixtures::prism(), "prism");
        for (const CheckResult& c : r.checks)
            if (c.pass) CHECK(c.witness.empty());
    }
}

TEST_SUITE("verify_graph over the bundled corpus") {
    TEST_CASE("zero failures") {
        const std::string dir = TIGHTCUT_DATA_DIR;
        int verified = 0;
        for (const std::string& list :
             {dir + "/connected_upto6.g6", dir + "/connected_extra.g6",
              dir + "/deep_branches.g6"}) {
            std::ifstream in(list);
            REQUIRE(in.good());
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                Multigraph g = parse_graph6(line);
                if (!is_matching_covered(g)) continue;
                VerificationReport r = verify_graph(g, line);
                if (!r.all_pass())
                    for (const CheckResult& c : r.checks)
                        if (!c.pass) MESSAGE(line << ": " << c.name << " " << c.witness);
                CHECK(r.all_pass());
                ++verified;
            }
        }
        CHECK(verified > 80);
    }
}

TEST_SUITE("brute_force_laminar_elp_cut") {
    TEST_CASE("agrees with the constructive result on c6") {
        Multigraph g = cycle(6);
        for (const Cut& c : all_tight_cuts(g)) {
            if (c.trivial()) continue;
            auto brute = brute_force_laminar_elp_cut(g, c);
            REQUIRE(brute.has_value());
            CHECK(laminar(brute->cut, c));
            CHECK(brute->nontrivial);
        }
    }
}
