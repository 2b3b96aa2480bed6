#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace pcontract {

using Vertex = std::uint32_t;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Throws errc::invalid_edge for a loop.
Edge make_edge(Vertex a, Vertex b);

/// Sorted, duplicate-free list of edges of some graph.
using EdgeSet = std::vector<Edge>;

/// Simple undirected graph over opaque, stable vertex ids.
///
/// Values are immutable once built: every operation in this library returns a
/// fresh graph, so a graph can be shared freely between search branches and
/// worker threads. Vertices are kept sorted; neighbour lists are sorted too.
class Graph {
   public:
    Graph() = default;

    /// Parallel edges collapse; a loop or an endpoint missing from `vertices`
    /// throws errc::invalid_edge.
    Graph(std::vector<Vertex> vertices, std::span<const Edge> edges);

    /// Vertex set is the set of endpoints.
    static Graph from_edges(std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return ids_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return ids_.empty(); }

    const std::vector<Vertex>& vertices() const noexcept { return ids_; }
    bool has_vertex(Vertex v) const noexcept { return index_of(v).has_value(); }
    bool has_edge(Vertex a, Vertex b) const noexcept;

    /// Throws errc::invalid_vertex for an unknown id.
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    /// Dense position of `v` in vertices(), if present.
    std::optional<std::size_t> index_of(Vertex v) const noexcept;
    std::size_t require_index(Vertex v) const;
    std::span<const Vertex> neighbors_at(std::size_t index) const noexcept { return adj_[index]; }

    /// All edges in lexicographic order.
    EdgeSet edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

   private:
    std::vector<Vertex> ids_;
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// A Planar Contraction instance: may `graph` be made planar with at most
/// `budget` edge contractions?
struct Instance {
    Graph graph;
    int budget = 0;
};

/// Merges the endpoints of `e`; the merged vertex keeps the smaller id.
Graph contract_edge(const Graph& g, Edge e);

struct ContractionResult {
    Graph graph;
    /// Number of elementary contractions performed.
    std::size_t count = 0;
    /// Old id -> surviving id, for every vertex touched by the edge set.
    std::map<Vertex, Vertex> representative;
};

/// Merges every component of the spanning subgraph (V, es) into its smallest
/// vertex.
ContractionResult contract_edge_set(const Graph& g, std::span<const Edge> es);

/// Components ordered by smallest vertex id.
std::vector<Graph> connected_components(const Graph& g);
std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g);
bool is_connected(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph delete_vertices(const Graph& g, std::span<const Vertex> remove);

/// Largest subgraph of minimum degree two (pendant trees stripped).
Graph two_core(const Graph& g);

/// Union of vertex and edge sets; ids are shared, not relabelled.
Graph graph_union(const Graph& a, const Graph& b);

/// Tracks which original vertices have been merged into which surviving id
/// across a sequence of contractions. Surviving ids are class minima, so a
/// journal built alongside contract_edge() stays in sync with it.
class RenameJournal {
   public:
    RenameJournal() = default;
    explicit RenameJournal(std::span<const Vertex> originals);

    /// Current id of an original vertex.
    Vertex current(Vertex original) const;
    /// Records the contraction of an edge between two current ids.
    void merge(Vertex a, Vertex b);
    /// Original vertices merged into the current id `v`.
    const std::vector<Vertex>& members(Vertex v) const;

   private:
    std::map<Vertex, Vertex> current_;
    std::map<Vertex, std::vector<Vertex>> members_;
};

}  // namespace pcontract
