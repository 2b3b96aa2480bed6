#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcontract/graph.hpp"
#include "pcontract/planarity.hpp"

namespace pcontract {

/// Position in an elementary wall: rows 0..h, columns 0..2h+1.
struct WallPos {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const WallPos&, const WallPos&) = default;
};

using WallEdge = std::pair<WallPos, WallPos>;

/// Positions of the elementary wall of height h, row-major. The two
/// degree-one corners of the brick lattice are trimmed.
std::vector<WallPos> wall_positions(int height);
/// Elementary edges with first < second, sorted.
std::vector<WallEdge> wall_edges(int height);
/// Perimeter positions in cyclic order, starting at (0,0) and running along
/// row 0 first.
std::vector<WallPos> wall_perimeter_positions(int height);

/// A subdivision of the elementary wall of height `height` inside `host`.
///
/// `nodes` sends each elementary position to a host vertex; `paths` sends each
/// elementary edge (a,b), a < b, to a host path from nodes[a] to nodes[b]. An
/// unsubdivided edge is the two-vertex path.
struct Wall {
    int height = 0;
    std::shared_ptr<const Graph> host;
    std::map<WallPos, Vertex> nodes;
    std::map<WallEdge, std::vector<Vertex>> paths;
    /// Host cycle realising the elementary perimeter, no repeated first vertex.
    std::vector<Vertex> perimeter;

    Vertex at(WallPos p) const;
    /// Every host vertex used by the wall, sorted.
    std::vector<Vertex> vertices() const;
};

/// Perimeter implied by `nodes` and `paths`.
std::vector<Vertex> compute_perimeter(const Wall& w);

/// Elementary wall with vertex ids 0..n-1 assigned row-major.
Wall elementary_wall(int height);

bool validate_wall(const Wall& w);

/// Subwall of `w` of height `height` whose local position (r,c) sits at
/// (r0 + r, anchor + c), or (r0 + r, anchor - c) when `mirrored`. Throws
/// errc::invalid_parameter when the placement leaves the wall or breaks the
/// row/column parity.
Wall subwall(const Wall& w, int height, int r0, int anchor, bool mirrored = false);

struct SubwallPacking {
    Wall outer_wall;
    int k = 0;
    std::vector<Wall> subwalls;
    std::vector<Wall> inner_subwalls;
    /// Grid cell (row, column) of each subwall.
    std::vector<std::pair<int, int>> cells;
};

/// ceil(sqrt(2k+1)).
int packing_grid_side(int k);
/// Smallest wall height accepted by pack_subwalls for budget k.
int packing_threshold(int k);

/// 2k+1 subwalls of height 12k+8 in a ceil(sqrt(2k+1)) square grid, each
/// with an inner subwall of height 12k+6. Throws errc::threshold when the
/// wall is too low.
SubwallPacking pack_subwalls(const Wall& w, int k);

struct TripleLayer {
    std::vector<Vertex> outer;
    std::vector<Vertex> middle;
    std::vector<Vertex> inner;
};

struct TripleLayers {
    std::vector<TripleLayer> layers;
    /// between[i]: vertices on or between layers[i].outer and layers[i].inner.
    std::vector<std::vector<Vertex>> between;
    Edge central_edge;
};

/// Largest proper subwall of `w`, one brick ring in.
Wall shrink_wall(const Wall& w);

/// 2k+1 nested triple layers cut from an inner subwall of height 12k+6.
/// The embedding must contain the wall and have its outer face outside the
/// wall's perimeter. Throws errc::invalid_height on a height mismatch.
TripleLayers triple_layers(const Wall& inner_subwall, int k, const Embedding& emb);

/// Heuristic wall search in a planar graph. A valid `hint` of sufficient
/// height wins; otherwise unsubdivided walls are grown face by face over the
/// brick lattice. May return none even when a tall wall exists. Throws
/// errc::precondition when `g` is nonplanar.
std::optional<Wall> find_wall(const Graph& g, int min_height, const Wall* hint = nullptr);
std::optional<Wall> largest_wall(const Graph& g);

/// Copy of `w` re-targeted at another host graph (not validated).
Wall rebind_wall(const Wall& w, std::shared_ptr<const Graph> host);

/// `height h`, then `pos (r,c) -> v` per node and `pos (r,c)-(r2,c2) -> v1 ...`
/// for every subdivided edge.
void write_wall(std::ostream& out, const Wall& w);
std::string to_wall_string(const Wall& w);
/// Edges without a `pos` line default to a direct host edge.
Wall parse_wall(std::istream& in, std::shared_ptr<const Graph> host);
Wall parse_wall_string(const std::string& text, std::shared_ptr<const Graph> host);

}  // namespace pcontract
