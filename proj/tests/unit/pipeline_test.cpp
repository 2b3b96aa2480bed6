#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "brute.hpp"
#include "pcontract/error.hpp"
#include "pcontract/generators.hpp"
#include "pcontract/pipeline.hpp"

using namespace pcontract;

namespace {

/// Apex on one hexagonal face of a height-45 wall plus one vertex next to it.
WallInstance face_apex_instance() {
    return generate_wall_plus_apex(45, {{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}, {2, 1}}});
}

/// One apex reaching into each of the three packed subwalls.
WallInstance type1_instance() { return generate_wall_plus_apex(45, {{{12, 22}, {12, 66}, {34, 22}}}); }

}  // namespace

TEST(Apex, MatchesBruteForce) {
    for (int seed = 0; seed < 60; ++seed) {
        Graph g = generate_random(8, 14 + seed % 8, seed);
        for (int k = 0; k <= 2; ++k) {
            auto got = find_apex_set(g, k);
            auto want = check::brute_apex(g, k);
            ASSERT_EQ(got.has_value(), want.has_value()) << seed << " k=" << k;
            if (got) {
                EXPECT_LE(got->size(), static_cast<std::size_t>(k));
                EXPECT_TRUE(is_planar(delete_vertices(g, *got)));
            }
        }
    }
}

TEST(Pipeline, AgreesWithOracleOnSmallGraphs) {
    for (int seed = 0; seed < 40; ++seed) {
        Graph g = generate_random(9, 17, 300 + seed);
        int k = seed % 3;
        SolveOutcome out = solve({g, k});
        SolveResult ref = solve_exact({g, k});
        EXPECT_EQ(out.result.answer, ref.answer) << seed;
        EXPECT_TRUE(verify_certificate({g, k}, out.result)) << seed;
    }
}

TEST(Pipeline, DisconnectedBudgetsAdd) {
    Graph a = complete_graph(5);
    Graph b = complete_graph(5, 10);
    Graph g = graph_union(a, b);
    SolveOutcome one = solve({g, 1});
    EXPECT_EQ(one.result.answer, Answer::no);
    EXPECT_TRUE(std::holds_alternative<ComponentsProof>(one.result.refutation));
    EXPECT_TRUE(verify_certificate({g, 1}, one.result));
    SolveOutcome two = solve({g, 2});
    EXPECT_EQ(two.result.answer, Answer::yes);
    EXPECT_EQ(two.result.contraction_edges.size(), 2u);
    EXPECT_TRUE(verify_certificate({g, 2}, two.result));
}

TEST(Pipeline, NoApexShortcut) {
    SolveOutcome out = solve({complete_graph(7), 1});
    EXPECT_EQ(out.result.answer, Answer::no);
    EXPECT_TRUE(std::holds_alternative<NoApexProof>(out.result.refutation));
    EXPECT_TRUE(verify_certificate({complete_graph(7), 1}, out.result));
}

TEST(Pipeline, WithoutFallbackSmallInstancesStayUndecided) {
    PipelineOptions opts;
    opts.fallback = false;
    SolveOutcome out = solve({generate_g_r(5), 1}, opts);
    EXPECT_EQ(out.result.answer, Answer::undecided);
    EXPECT_FALSE(verify_certificate({generate_g_r(5), 1}, out.result));
}

TEST(IrrelevantEdge, BelowThresholdNothing) {
    WallInstance wi = generate_wall_plus_apex(10, {});
    std::vector<Vertex> none;
    IrrelevantEdge ie = find_irrelevant_edge(wi.graph, none, 0);
    EXPECT_EQ(ie.kind, IrrelevantEdge::Kind::none);
    EXPECT_EQ(ie.wall_height, 10);
    EXPECT_THROW(find_irrelevant_edge(complete_graph(5), none, 0), error);
}

TEST(IrrelevantEdge, PlainWallGivesCentralEdge) {
    WallInstance wi = generate_wall_plus_apex(11, {});
    std::vector<Vertex> none;
    IrrelevantEdge ie = find_irrelevant_edge(wi.graph, none, 0, &wi.wall);
    ASSERT_EQ(ie.kind, IrrelevantEdge::Kind::edge);
    EXPECT_EQ(make_edge(ie.edge.u, ie.edge.v), make_edge(wi.wall.at({6, 10}), wi.wall.at({6, 11})));
}

TEST(IrrelevantEdge, ClassificationSeesTheApex) {
    WallInstance wi = type1_instance();
    Graph h = delete_vertices(wi.graph, wi.apexes);
    auto emb = normalize_embedding(*embed(h), wi.wall);
    auto packing = pack_subwalls(*find_wall(h, 2, &wi.wall), 1);
    SiClassification cls = classify_si(wi.graph, wi.apexes, packing, emb);
    ASSERT_EQ(cls.sets.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(cls.sets[i], wi.apexes);
    EXPECT_EQ(cls.type1_count(), 3u);

    WallInstance quiet = face_apex_instance();
    Graph hq = delete_vertices(quiet.graph, quiet.apexes);
    auto embq = normalize_embedding(*embed(hq), quiet.wall);
    auto cq = classify_si(quiet.graph, quiet.apexes, pack_subwalls(quiet.wall, 1), embq);
    EXPECT_EQ(cq.type1_count(), 0u);
}

TEST(IrrelevantEdge, TypeOneRefutation) {
    WallInstance wi = type1_instance();
    IrrelevantEdge ie = find_irrelevant_edge(wi.graph, wi.apexes, 1, &wi.wall);
    ASSERT_EQ(ie.kind, IrrelevantEdge::Kind::refuted);
    const Type1Certificate& cert = *ie.certificate;
    EXPECT_GE(cert.structures.size(), 2u);
    EXPECT_TRUE(verify_type1_certificate(wi.graph, cert));

    Type1Certificate short_cert = cert;
    short_cert.structures.resize(1);
    short_cert.edge_sets.resize(1);
    EXPECT_FALSE(verify_type1_certificate(wi.graph, short_cert));

    Type1Certificate doubled = cert;
    doubled.structures[1] = doubled.structures[0];
    doubled.edge_sets[1] = doubled.edge_sets[0];
    EXPECT_FALSE(verify_type1_certificate(wi.graph, doubled));

    Type1Certificate relabelled = cert;
    auto node = relabelled.structures[0].parts.extract(5);
    node.key() = 6;
    relabelled.structures[0].parts.insert(std::move(node));
    EXPECT_FALSE(verify_type1_certificate(wi.graph, relabelled));
}

TEST(IrrelevantEdge, NormalizeMovesOuterFaceOutside) {
    Wall w = elementary_wall(4);
    auto emb = *embed(*w.host);
    auto inner = emb.with_outer_face(emb.face_of(w.at({1, 2}), w.at({1, 3})));
    auto fixed = normalize_embedding(inner, w);
    auto region = cycle_interior(fixed, w.perimeter);
    EXPECT_TRUE(region.exterior.empty());
}

TEST(Reduce, ContractsAndKeepsAnswer) {
    WallInstance wi = face_apex_instance();
    PipelineOptions opts;
    opts.hint = &wi.wall;
    ReductionTrace trace = reduce({wi.graph, 1}, opts);
    ASSERT_FALSE(trace.contracted_edges.empty());
    EXPECT_EQ(trace.apex, wi.apexes);
    EXPECT_EQ(trace.final_instance.graph.vertex_count() + trace.contracted_edges.size(), wi.graph.vertex_count());
    for (const Edge& e : trace.contracted_edges) EXPECT_TRUE(wi.graph.has_edge(e.u, e.v));
    EXPECT_EQ(contract_edge_set(wi.graph, trace.contracted_edges).graph, trace.final_instance.graph);
    EXPECT_EQ(trace.stats.back().event, "none");
}

TEST(Reduce, StatsCsv) {
    std::vector<StatRow> rows{{0, 10, 12, 0, "planar"}, {1, 9, 11, 45, "edge"}};
    std::ostringstream out;
    write_stats_csv(out, rows);
    EXPECT_EQ(out.str(), "iteration,vertices,edges,wall_height,event\n0,10,12,0,planar\n1,9,11,45,edge\n");
}
