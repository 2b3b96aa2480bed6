#include <gtest/gtest.h>

#include "pcontract/error.hpp"
#include "pcontract/generators.hpp"
#include "pcontract/planarity.hpp"

using namespace pcontract;

TEST(Generators, GrShape) {
    for (int r = 3; r <= 8; ++r) {
        Graph g = generate_g_r(r);
        EXPECT_EQ(g.vertex_count(), static_cast<std::size_t>(r + 3));
        EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(3 * r + 3));
        EXPECT_TRUE(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(0, 2));
        EXPECT_FALSE(g.has_edge(3, 4));
    }
    EXPECT_THROW(generate_g_r(2), error);
}

TEST(Generators, GstarAndSubdivision) {
    for (int p = 1; p <= 3; ++p) {
        Graph star = generate_gstar(p);
        Graph sub = generate_k5_subdivision(p);
        EXPECT_EQ(star.vertex_count(), static_cast<std::size_t>(5 + 10 * p));
        EXPECT_EQ(star.edge_count(), static_cast<std::size_t>(10 + 10 * (p + 1)));
        EXPECT_EQ(sub.vertex_count(), star.vertex_count());
        EXPECT_EQ(sub.edge_count(), static_cast<std::size_t>(10 * (p + 1)));
        for (Vertex a = 0; a < 5; ++a) {
            for (Vertex b = a + 1; b < 5; ++b) {
                EXPECT_TRUE(star.has_edge(a, b));
                EXPECT_FALSE(sub.has_edge(a, b));
            }
        }
    }
}

TEST(Generators, WallPlusApex) {
    WallInstance wi = generate_wall_plus_apex(4, {{{1, 1}, {2, 2}, {3, 3}}, {{0, 0}}}, 5, 9);
    const std::size_t wall_n = 2 * 16 + 16;
    EXPECT_EQ(wi.graph.vertex_count(), wall_n + 2 + 5);
    EXPECT_EQ(wi.apexes, (std::vector<Vertex>{Vertex(wall_n), Vertex(wall_n + 1)}));
    EXPECT_EQ(wi.graph.degree(wi.apexes[0]), 3u);
    EXPECT_TRUE(wi.graph.has_edge(wi.apexes[1], wi.wall.at({0, 0})));
    EXPECT_TRUE(validate_wall(wi.wall));
    EXPECT_THROW(generate_wall_plus_apex(4, {{{0, 9}}}), error);
}

TEST(Generators, SeededDeterminism) {
    EXPECT_EQ(generate_random(10, 18, 42), generate_random(10, 18, 42));
    EXPECT_NE(generate_random(10, 18, 42), generate_random(10, 18, 43));
    EXPECT_EQ(generate_random(10, 18, 42).edge_count(), 18u);
    auto a = generate_wall_plus_apex(5, {}, 10, 7);
    auto b = generate_wall_plus_apex(5, {}, 10, 7);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_THROW(generate_random(4, 7, 0), error);
}

TEST(Generators, Dispatch) {
    GenParams p;
    p.family = parse_family("kmn");
    p.a = 3;
    p.b = 3;
    EXPECT_FALSE(is_planar(generate_instance(p)));
    p.family = parse_family("petersen");
    EXPECT_EQ(generate_instance(p).edge_count(), 15u);
    p.family = parse_family("grid");
    p.a = 3;
    p.b = 4;
    EXPECT_EQ(generate_instance(p).vertex_count(), 12u);
    EXPECT_THROW(parse_family("hypercube"), error);
}
