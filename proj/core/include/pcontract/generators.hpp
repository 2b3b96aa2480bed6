#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcontract/graph.hpp"
#include "pcontract/walls.hpp"

namespace pcontract {

/// K_{3,r} with the three-vertex side A = {0,1,2} made a triangle;
/// B = 3..r+2.
Graph generate_g_r(int r);

/// K5 on 0..4 plus, for every K5 edge in lexicographic order, a path of p
/// new vertices joining its ends.
Graph generate_gstar(int p);

/// K5 with every edge subdivided by p vertices (G*_p minus the K5 edges).
Graph generate_k5_subdivision(int p);

struct WallInstance {
    Graph graph;
    /// The elementary wall, hosted by `graph`.
    Wall wall;
    std::vector<Vertex> apexes;
};

/// Elementary wall of height `height` (ids 0..n-1 row-major), then one apex
/// per entry of `attachments` adjacent to the listed wall positions, then
/// `noise` pendant vertices hung on uniformly random wall vertices.
WallInstance generate_wall_plus_apex(int height, const std::vector<std::vector<WallPos>>& attachments,
                                     int noise = 0, std::uint64_t seed = 0);

/// Uniform simple graph on 0..n-1 with exactly m edges.
Graph generate_random(int n, int m, std::uint64_t seed);

Graph generate_grid(int rows, int cols);
Graph generate_petersen();

enum class Family { g_r, gstar, k5_subdivision, wall_plus_apex, random, grid, complete, complete_bipartite, petersen };

struct GenParams {
    Family family = Family::random;
    int r = 3;
    int p = 1;
    int height = 2;
    int n = 0;
    int m = 0;
    int a = 0;
    int b = 0;
    int noise = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<WallPos>> attachments;
};

/// Dispatches on the family; out-of-range parameters throw
/// errc::invalid_parameter.
Graph generate_instance(const GenParams& params);

Family parse_family(const std::string& name);

}  // namespace pcontract
