#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcontract/certificate.hpp"
#include "pcontract/graph.hpp"
#include "pcontract/oracle.hpp"
#include "pcontract/planarity.hpp"
#include "pcontract/walls.hpp"

namespace pcontract {

/// Smallest-first branching on Kuratowski subdivision vertices. Complete:
/// returns none only when no set of at most k vertices planarizes `g`.
std::optional<std::vector<Vertex>> find_apex_set(const Graph& g, int k);

struct SiClassification {
    /// sets[i]: apex vertices adjacent to a vertex inside P(W_i').
    std::vector<std::vector<Vertex>> sets;
    std::vector<bool> type1;

    std::size_t type1_count() const;
};

/// `emb` embeds g - s with the packing inside the perimeter of its wall.
/// Throws errc::consistency when the packing does not live in `emb`.
SiClassification classify_si(const Graph& g, std::span<const Vertex> s, const SubwallPacking& packing,
                              const Embedding& emb);

/// K5 witness structures for the type-1 subwalls when there are at least
/// k+1 of them. Throws errc::internal_invariant if a built structure fails
/// verification.
std::optional<Type1Certificate> claim1_refute(const Graph& g, std::span<const Vertex> s,
                                              const SubwallPacking& packing, const Embedding& emb,
                                              const SiClassification& cls, int k);

/// Structures are valid K5 witness structures of subgraphs of `g`, there are
/// more than cert.budget of them and their E_i are pairwise disjoint.
bool verify_type1_certificate(const Graph& g, const Type1Certificate& cert);

/// Same rotation system with the outer face outside the wall perimeter.
Embedding normalize_embedding(const Embedding& emb, const Wall& w);

struct IrrelevantEdge {
    enum class Kind { none, edge, refuted };

    Kind kind = Kind::none;
    Edge edge;
    std::optional<Type1Certificate> certificate;
    /// Height of the wall examined, 0 when none was found.
    int wall_height = 0;
};

/// One round of the reduction on g with apex set s: wall, packing, S_i
/// classification, then either a type-1 refutation or the central edge of
/// the triple layers of an untouched subwall.
IrrelevantEdge find_irrelevant_edge(const Graph& g, std::span<const Vertex> s, int k, const Wall* hint = nullptr);

struct StatRow {
    int iteration = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    int wall_height = 0;
    std::string event;
};

struct ReductionTrace {
    std::vector<Vertex> apex;
    /// Irrelevant edges in contraction order, as original edges.
    std::vector<Edge> contracted_edges;
    Instance final_instance;
    /// Result on final_instance, in its vertex ids.
    SolveResult base_result;
    std::vector<StatRow> stats;
};

struct PipelineOptions {
    OracleOptions oracle;
    /// Without fallback an instance the reduction cannot settle is undecided.
    bool fallback = true;
    /// Wall of the input graph tried before the wall search.
    const Wall* hint = nullptr;
};

struct SolveOutcome {
    SolveResult result;
    ReductionTrace trace;
};

SolveOutcome solve(const Instance& inst, const PipelineOptions& opts = {});

/// Applies irrelevant-edge contractions until none is found; no final solve.
/// A type-1 refutation or a missing apex set ends the loop early and is
/// reported in trace.base_result.
ReductionTrace reduce(const Instance& inst, const PipelineOptions& opts = {});

void write_stats_csv(std::ostream& out, const std::vector<StatRow>& rows);

}  // namespace pcontract
