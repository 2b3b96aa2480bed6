#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcontract/certificate.hpp"
#include "pcontract/graph.hpp"

namespace pcontract {

struct OracleOptions {
    /// Largest number of edge subsets the search may visit.
    std::uint64_t cap = 10'000'000;
    /// Worker threads; the reported certificate does not depend on it.
    int jobs = 1;
    /// Skip subsets that provably leave a known Kuratowski subgraph intact.
    bool prune = true;
};

struct OracleStats {
    std::uint64_t subsets_visited = 0;
    std::uint64_t planarity_tests = 0;
    std::uint64_t pruned = 0;
};

/// Exact answer by enumerating original-edge subsets of size 0..k, smallest
/// first and lexicographic within a size, so a yes-certificate has minimum
/// size. Throws errc::capacity when the search space exceeds the cap.
SolveResult solve_exact(const Instance& inst, const OracleOptions& opts = {}, OracleStats* stats = nullptr);

/// Least k <= cap admitting a yes answer, or nullopt above the cap.
std::optional<int> min_contractions(const Graph& g, int cap, const OracleOptions& opts = {});

/// Independent check of a result against its instance. Never throws on
/// malformed certificates.
bool verify_certificate(const Instance& inst, const SolveResult& res);

/// Vertices to delete after contracting `edges`: every merged vertex except
/// the surviving representative of its class.
std::vector<Vertex> derive_apex_from_contraction(const Graph& g, const std::vector<Edge>& edges);

}  // namespace pcontract
