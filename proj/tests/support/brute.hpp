#pragma once

#include <optional>
#include <vector>

#include "pcontract/graph.hpp"

namespace pcontract::check {

/// Minor test by set partitions of vertex subsets into branch sets.
bool has_k5_minor(const Graph& g);
bool has_k33_minor(const Graph& g);
/// Wagner: planar iff neither minor is present. Meant for n <= 8.
bool brute_planar(const Graph& g);

/// Smallest vertex set of size <= k whose deletion leaves a planar graph.
std::optional<std::vector<Vertex>> brute_apex(const Graph& g, int k);

/// Least number of single-edge contractions, applied one after another,
/// reaching a planar graph; nullopt above `cap`. Planarity by brute_planar.
std::optional<int> brute_min_contractions(const Graph& g, int cap);

}  // namespace pcontract::check
