#include "pcontract/walls.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pcontract/error.hpp"

namespace pcontract {

namespace {

bool trimmed(int h, int r, int c) {
    if (r == 0 && c == 2 * h + 1) return true;
    if (r == h) return h % 2 == 0 ? c == 0 : c == 2 * h + 1;
    return false;
}

bool present(int h, WallPos p) {
    return p.row >= 0 && p.row <= h && p.col >= 0 && p.col <= 2 * h + 1 && !trimmed(h, p.row, p.col);
}

void require_height(int h) {
    if (h < 2) throw error(errc::invalid_height, "wall height must be at least 2, got " + std::to_string(h));
}

std::string describe(WallPos p) { return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")"; }

WallEdge ordered(WallPos a, WallPos b) { return a < b ? WallEdge{a, b} : WallEdge{b, a}; }

/// Path of the wall edge a-b, oriented from a to b.
std::vector<Vertex> oriented_path(const Wall& w, WallPos a, WallPos b) {
    auto it = w.paths.find(ordered(a, b));
    if (it == w.paths.end()) throw error(errc::invalid_parameter, "no wall edge " + describe(a) + "-" + describe(b));
    std::vector<Vertex> p = it->second;
    if (!(a < b)) std::reverse(p.begin(), p.end());
    return p;
}

bool same_cycle(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(b.begin(), b.end(), a[0]);
    if (it == b.end()) return false;
    const std::size_t n = a.size();
    const std::size_t off = static_cast<std::size_t>(it - b.begin());
    bool forward = true, backward = true;
    for (std::size_t i = 0; i < n && (forward || backward); ++i) {
        if (a[i] != b[(off + i) % n]) forward = false;
        if (a[i] != b[(off + n - i) % n]) backward = false;
    }
    return forward || backward;
}

}  // namespace

std::vector<WallPos> wall_positions(int height) {
    require_height(height);
    std::vector<WallPos> out;
    for (int r = 0; r <= height; ++r) {
        for (int c = 0; c <= 2 * height + 1; ++c) {
            if (!trimmed(height, r, c)) out.push_back({r, c});
        }
    }
    return out;
}

std::vector<WallEdge> wall_edges(int height) {
    require_height(height);
    std::vector<WallEdge> out;
    for (WallPos p : wall_positions(height)) {
        WallPos right{p.row, p.col + 1};
        if (present(height, right)) out.push_back({p, right});
        WallPos down{p.row + 1, p.col};
        if (p.col % 2 == p.row % 2 && present(height, down)) out.push_back({p, down});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WallPos> wall_perimeter_positions(int height) {
    auto positions = wall_positions(height);
    std::map<WallPos, Vertex> id;
    for (std::size_t i = 0; i < positions.size(); ++i) id[positions[i]] = static_cast<Vertex>(i);
    std::vector<Edge> es;
    for (const auto& [a, b] : wall_edges(height)) es.push_back(make_edge(id[a], id[b]));
    std::vector<Vertex> vs(positions.size());
    for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<Vertex>(i);
    Graph g(vs, es);

    // Rows grow downward; list neighbours counterclockwise: east, north, west, south.
    std::map<Vertex, std::vector<Vertex>> rotation;
    for (WallPos p : positions) {
        auto& rot = rotation[id[p]];
        for (WallPos q : {WallPos{p.row, p.col + 1}, WallPos{p.row - 1, p.col}, WallPos{p.row, p.col - 1},
                          WallPos{p.row + 1, p.col}}) {
            auto it = id.find(q);
            if (it != id.end() && g.has_edge(id[p], it->second)) rot.push_back(it->second);
        }
    }
    Embedding emb(g, rotation);
    std::vector<Vertex> face = emb.faces()[emb.outer_face()];
    auto start = std::find(face.begin(), face.end(), Vertex{0});
    std::rotate(face.begin(), start, face.end());
    if (face.size() > 1 && face[1] != 1) std::reverse(face.begin() + 1, face.end());
    std::vector<WallPos> out;
    out.reserve(face.size());
    for (Vertex v : face) out.push_back(positions[v]);
    return out;
}

Vertex Wall::at(WallPos p) const {
    auto it = nodes.find(p);
    if (it == nodes.end()) throw error(errc::invalid_parameter, "no wall position " + describe(p));
    return it->second;
}

std::vector<Vertex> Wall::vertices() const {
    std::vector<Vertex> out;
    for (const auto& [pos, v] : nodes) out.push_back(v);
    for (const auto& [e, p] : paths) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vertex> compute_perimeter(const Wall& w) {
    auto ring = wall_perimeter_positions(w.height);
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        auto p = oriented_path(w, ring[i], ring[(i + 1) % ring.size()]);
        out.insert(out.end(), p.begin(), p.end() - 1);
    }
    return out;
}

Wall elementary_wall(int height) {
    auto positions = wall_positions(height);
    Wall w;
    w.height = height;
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        w.nodes[positions[i]] = static_cast<Vertex>(i);
        vs.push_back(static_cast<Vertex>(i));
    }
    std::vector<Edge> es;
    for (const auto& e : wall_edges(height)) {
        Vertex a = w.nodes[e.first];
        Vertex b = w.nodes[e.second];
        w.paths[e] = {a, b};
        es.push_back(make_edge(a, b));
    }
    w.host = std::make_shared<const Graph>(std::move(vs), es);
    w.perimeter = compute_perimeter(w);
    return w;
}

bool validate_wall(const Wall& w) {
    if (w.height < 2 || !w.host) return false;
    const Graph& g = *w.host;
    auto positions = wall_positions(w.height);
    if (w.nodes.size() != positions.size()) return false;
    std::set<Vertex> used;
    for (WallPos p : positions) {
        auto it = w.nodes.find(p);
        if (it == w.nodes.end() || !g.has_vertex(it->second)) return false;
        if (!used.insert(it->second).second) return false;
    }
    auto edges = wall_edges(w.height);
    if (w.paths.size() != edges.size()) return false;
    for (const auto& e : edges) {
        auto it = w.paths.find(e);
        if (it == w.paths.end()) return false;
        const auto& p = it->second;
        if (p.size() < 2 || p.front() != w.nodes.at(e.first) || p.back() != w.nodes.at(e.second)) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.has_edge(p[i], p[i + 1])) return false;
        }
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (!used.insert(p[i]).second) return false;
        }
    }
    return same_cycle(w.perimeter, compute_perimeter(w));
}

Wall subwall(const Wall& w, int height, int r0, int anchor, bool mirrored) {
    require_height(height);
    if (((anchor - r0) % 2 + 2) % 2 != 0) {
        throw error(errc::invalid_parameter, "subwall anchor column and first row must share parity");
    }
    auto place = [&](WallPos p) { return WallPos{r0 + p.row, mirrored ? anchor - p.col : anchor + p.col}; };
    Wall out;
    out.height = height;
    out.host = w.host;
    for (WallPos p : wall_positions(height)) {
        WallPos q = place(p);
        auto it = w.nodes.find(q);
        if (it == w.nodes.end()) throw error(errc::invalid_parameter, "subwall leaves the wall at " + describe(q));
        out.nodes[p] = it->second;
    }
    for (const auto& e : wall_edges(height)) out.paths[e] = oriented_path(w, place(e.first), place(e.second));
    out.perimeter = compute_perimeter(out);
    return out;
}

Wall shrink_wall(const Wall& w) { return subwall(w, w.height - 2, 1, 2 * w.height - 1, true); }

Wall rebind_wall(const Wall& w, std::shared_ptr<const Graph> host) {
    Wall out = w;
    out.host = std::move(host);
    return out;
}

int packing_grid_side(int k) {
    if (k < 0) throw error(errc::invalid_parameter, "budget must be nonnegative");
    int m = 1;
    while (m * m < 2 * k + 1) ++m;
    return m;
}

int packing_threshold(int k) { return packing_grid_side(k) * (12 * k + 10) + 1; }

SubwallPacking pack_subwalls(const Wall& w, int k) {
    const int m = packing_grid_side(k);
    if (w.height < packing_threshold(k)) {
        throw error(errc::threshold, "wall height " + std::to_string(w.height) + " does not exceed " +
                                         std::to_string(m * (12 * k + 10)));
    }
    const int hs = 12 * k + 8;
    SubwallPacking out;
    out.outer_wall = w;
    out.k = k;
    for (int idx = 0; idx < 2 * k + 1; ++idx) {
        const int a = idx / m;
        const int b = idx % m;
        const int r0 = 2 + a * (hs + 2);
        const int c0 = 2 + b * (2 * hs + 4);
        Wall sub = subwall(w, hs, r0, c0);
        out.inner_subwalls.push_back(shrink_wall(sub));
        out.subwalls.push_back(std::move(sub));
        out.cells.emplace_back(a, b);
    }
    return out;
}

TripleLayers triple_layers(const Wall& inner_subwall, int k, const Embedding& emb) {
    if (k < 0) throw error(errc::invalid_parameter, "budget must be nonnegative");
    if (inner_subwall.height != 12 * k + 6) {
        throw error(errc::invalid_height, "triple layers need height " + std::to_string(12 * k + 6) + ", got " +
                                              std::to_string(inner_subwall.height));
    }
    TripleLayers out;
    Wall cur = inner_subwall;
    for (int i = 0; i < 2 * k + 1; ++i) {
        Wall mid = shrink_wall(cur);
        Wall in = shrink_wall(mid);
        TripleLayer layer{cur.perimeter, mid.perimeter, in.perimeter};

        auto outer_region = cycle_interior(emb, layer.outer);
        auto inner_region = cycle_interior(emb, layer.inner);
        std::set<Vertex> y(layer.outer.begin(), layer.outer.end());
        y.insert(outer_region.interior.begin(), outer_region.interior.end());
        for (Vertex v : inner_region.interior) y.erase(v);
        out.between.emplace_back(y.begin(), y.end());
        out.layers.push_back(std::move(layer));

        if (i + 1 < 2 * k + 1) {
            cur = shrink_wall(in);
        } else {
            const auto& path = in.paths.at({WallPos{1, 2}, WallPos{1, 3}});
            out.central_edge = make_edge(path[0], path[1]);
        }
    }
    return out;
}

}  // namespace pcontract
