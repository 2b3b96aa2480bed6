#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pcontract/graph.hpp"

namespace pcontract {

/// A partition of `host` into connected parts, one per vertex of `target`,
/// whose adjacency pattern is exactly that of `target`. Its existence
/// certifies that `target` is a contraction of `host`.
struct WitnessStructure {
    Graph host;
    Graph target;
    std::map<Vertex, std::vector<Vertex>> parts;
};

/// Checks partition, connectivity and adjacency. Malformed input yields false.
bool verify_witness_structure(const WitnessStructure& ws);

/// Graph obtained by contracting every part to its label. Pairs of parts
/// joined by at least one host edge become adjacent. Parts must be disjoint.
Graph quotient_graph(const Graph& host, const std::map<Vertex, std::vector<Vertex>>& parts);

/// Exhaustive isomorphism test for graphs of at most `max_vertices` vertices
/// (default 8); larger inputs throw errc::not_applicable.
bool isomorphic_small(const Graph& a, const Graph& b, std::size_t max_vertices = 8);

Graph complete_graph(std::size_t n, Vertex first = 0);
/// Sides are first..first+a-1 and first+a..first+a+b-1.
Graph complete_bipartite_graph(std::size_t a, std::size_t b, Vertex first = 0);

}  // namespace pcontract
