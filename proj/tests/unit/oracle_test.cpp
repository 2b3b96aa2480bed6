#include <gtest/gtest.h>

#include "brute.hpp"
#include "pcontract/error.hpp"
#include "pcontract/generators.hpp"
#include "pcontract/oracle.hpp"
#include "pcontract/planarity.hpp"

using namespace pcontract;

TEST(Oracle, PlanarInputNeedsNothing) {
    SolveResult r = solve_exact({generate_grid(4, 4), 0});
    EXPECT_EQ(r.answer, Answer::yes);
    EXPECT_TRUE(r.contraction_edges.empty());
    EXPECT_TRUE(verify_certificate({generate_grid(4, 4), 0}, r));
}

TEST(Oracle, AgreesWithContractionSequenceSearch) {
    int checked_nonplanar = 0;
    for (int seed = 0; seed < 60; ++seed) {
        int n = 6 + seed % 2;
        int m = std::min(n * (n - 1) / 2, 12 + seed % 6);
        Graph g = generate_random(n, m, 500 + seed);
        if (is_planar(g)) continue;
        ++checked_nonplanar;
        auto expected = check::brute_min_contractions(g, 3);
        auto got = min_contractions(g, 3);
        EXPECT_EQ(got, expected) << "seed " << seed;
    }
    EXPECT_GT(checked_nonplanar, 20);
}

TEST(Oracle, CertificatesHaveMinimumSize) {
    Graph g = complete_graph(7);
    SolveResult r = solve_exact({g, 4});
    ASSERT_EQ(r.answer, Answer::yes);
    EXPECT_EQ(contract_edge_set(g, r.contraction_edges).count, 3u);
    EXPECT_TRUE(verify_certificate({g, 4}, r));
}

TEST(Oracle, NoCarriesExhaustionProof) {
    Graph g = generate_k5_subdivision(1);
    SolveResult r = solve_exact({g, 1});
    ASSERT_EQ(r.answer, Answer::no);
    auto* p = std::get_if<ExhaustionProof>(&r.refutation);
    ASSERT_NE(p, nullptr);
    EXPECT_EQ(p->edge_count, g.edge_count());
    EXPECT_EQ(p->subsets_examined, subsets_up_to(g.edge_count(), 1));
    EXPECT_TRUE(verify_certificate({g, 1}, r));
    p->subsets_examined -= 1;
    EXPECT_FALSE(verify_certificate({g, 1}, r));
}

TEST(Oracle, PruningAndThreadsDoNotChangeResults) {
    for (int seed = 0; seed < 25; ++seed) {
        Graph g = generate_random(9, 17, seed);
        int k = seed % 3;
        OracleOptions plain;
        plain.prune = false;
        OracleOptions threaded;
        threaded.jobs = 3;
        SolveResult a = solve_exact({g, k}, plain);
        SolveResult b = solve_exact({g, k});
        SolveResult c = solve_exact({g, k}, threaded);
        EXPECT_EQ(a.answer, b.answer) << seed;
        EXPECT_EQ(to_result_string(b), to_result_string(c)) << seed;
        EXPECT_EQ(a.contraction_edges, b.contraction_edges) << seed;
    }
}

TEST(Oracle, CapIsEnforced) {
    OracleOptions tiny;
    tiny.cap = 10;
    try {
        solve_exact({complete_graph(8), 2}, tiny);
        FAIL() << "no capacity error";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::capacity);
    }
    EXPECT_FALSE(min_contractions(generate_k5_subdivision(2), 2));
    EXPECT_THROW(solve_exact({complete_graph(5), -1}), error);
}

TEST(Oracle, VerifierRejectsTampering) {
    Graph g = generate_g_r(4);
    SolveResult r = solve_exact({g, 1});
    ASSERT_EQ(r.answer, Answer::yes);
    SolveResult wrong = r;
    wrong.contraction_edges = {{3, 4}};
    EXPECT_FALSE(verify_certificate({g, 1}, wrong));
    SolveResult too_many = r;
    too_many.contraction_edges = {{0, 1}, {1, 2}};
    EXPECT_FALSE(verify_certificate({g, 1}, too_many));
    SolveResult budget = r;
    budget.budget = 3;
    EXPECT_FALSE(verify_certificate({g, 1}, budget));
    SolveResult lie;
    lie.answer = Answer::no;
    lie.budget = 1;
    lie.refutation = NoApexProof{1};
    EXPECT_FALSE(verify_certificate({g, 1}, lie));
    SolveResult bare_no;
    bare_no.answer = Answer::no;
    bare_no.budget = 1;
    EXPECT_FALSE(verify_certificate({g, 1}, bare_no));
}

TEST(Oracle, DerivedApexSetPlanarizes) {
    for (int seed = 0; seed < 40; ++seed) {
        Graph g = generate_random(8, 16, 900 + seed);
        SolveResult r = solve_exact({g, 3});
        if (r.answer != Answer::yes) continue;
        auto s = derive_apex_from_contraction(g, r.contraction_edges);
        EXPECT_EQ(s.size(), contract_edge_set(g, r.contraction_edges).count);
        EXPECT_TRUE(is_planar(delete_vertices(g, s)));
        EXPECT_TRUE(check::brute_apex(g, static_cast<int>(s.size())));
    }
}
