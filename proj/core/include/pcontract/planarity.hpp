#pragma once

#include <cstddef>
#include <map>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "pcontract/graph.hpp"
#include "pcontract/witness.hpp"

namespace pcontract {

/// Combinatorial plane embedding: a rotation system plus the faces it induces.
///
/// Faces are closed walks v0 v1 ... v(L-1) standing for the darts v0->v1, ...,
/// v(L-1)->v0; an isolated vertex has the one-vertex walk [v]. Every
/// connected component is embedded on its own and carries its own outer face;
/// outer_face() is the one designated last (by default the outer face of the
/// component holding the smallest vertex).
class Embedding {
   public:
    /// `rotation[v]` lists the neighbours of v in cyclic order. Throws
    /// errc::consistency when a rotation is not a permutation of the
    /// neighbourhood or the induced faces violate Euler's formula.
    Embedding(Graph g, const std::map<Vertex, std::vector<Vertex>>& rotation);

    const Graph& graph() const noexcept { return graph_; }
    std::span<const Vertex> rotation(Vertex v) const;

    const std::vector<std::vector<Vertex>>& faces() const noexcept { return faces_; }
    std::size_t face_count() const noexcept { return faces_.size(); }
    /// Face that contains the dart from->to.
    std::size_t face_of(Vertex from, Vertex to) const;

    std::size_t component_count() const noexcept { return component_outer_.size(); }
    std::size_t component_of(Vertex v) const;
    std::size_t component_of_face(std::size_t face) const { return face_component_.at(face); }

    std::size_t outer_face() const noexcept { return outer_; }
    std::size_t outer_face_of_component(std::size_t component) const { return component_outer_.at(component); }

    /// Same rotation system with `face` as the outer face of its component.
    Embedding with_outer_face(std::size_t face) const;

   private:
    static std::uint64_t dart_key(Vertex a, Vertex b) { return (std::uint64_t{a} << 32) | b; }

    Graph graph_;
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<std::vector<Vertex>> faces_;
    std::unordered_map<std::uint64_t, std::uint32_t> dart_face_;
    std::vector<std::size_t> vertex_component_;
    std::vector<std::size_t> face_component_;
    std::vector<std::size_t> component_outer_;
    std::size_t outer_ = 0;
};

/// Face walks of an embedding, in their deterministic construction order.
const std::vector<std::vector<Vertex>>& faces(const Embedding& e);

/// One `v: w1 w2 ...` line per vertex in rotation order, then
/// `outer: <face walk>`.
void write_embedding(std::ostream& out, const Embedding& e);
std::string to_embedding_string(const Embedding& e);
/// Rebuilds the embedding of `g`; throws errc::parse on malformed text and
/// errc::consistency when the rotations do not embed `g`.
Embedding parse_embedding(std::istream& in, const Graph& g);
Embedding parse_embedding_string(const std::string& text, const Graph& g);

/// Subdivision of K5 or K3,3 inside a host graph.
struct KuratowskiSubdivision {
    enum class Kind { k5, k33 };

    Kind kind = Kind::k5;
    /// Five vertices for K5; six for K3,3 with the first three on one side.
    std::vector<Vertex> branch_vertices;
    /// One vertex path per pattern edge, running between two branch vertices.
    std::vector<std::vector<Vertex>> paths;

    EdgeSet edges() const;
    std::vector<Vertex> vertices() const;
};

using PlanarityCertificate = std::variant<Embedding, KuratowskiSubdivision>;

/// Certifying planarity test: an embedding or a Kuratowski subdivision.
PlanarityCertificate test_planarity(const Graph& g);
bool is_planar(const Graph& g);
std::optional<Embedding> embed(const Graph& g);

/// Throws errc::not_applicable when `g` is planar.
KuratowskiSubdivision find_kuratowski(const Graph& g);

/// Structural check of a subdivision against its host.
bool validate_kuratowski(const Graph& g, const KuratowskiSubdivision& ks);

/// Witness structure of the subdivision (as host) onto K5 or K3,3 labelled
/// 0..4 / 0..5; interior path vertices join the part of the path's first end.
WitnessStructure kuratowski_witness(const KuratowskiSubdivision& ks);

/// The two sides of a cycle in a fixed embedding. The three vertex sets
/// partition the cycle's connected component; other components count as
/// neither side's interior.
struct CycleRegion {
    std::vector<Vertex> cycle;
    std::vector<Vertex> interior;
    std::vector<Vertex> exterior;
};

/// Interior is the side not containing the outer face of the cycle's
/// component. Throws errc::invalid_cycle when `cycle` is not a simple cycle of
/// the embedded graph.
CycleRegion cycle_interior(const Embedding& e, std::span<const Vertex> cycle);

}  // namespace pcontract
