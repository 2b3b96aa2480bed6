#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "pcontract/error.hpp"
#include "pcontract/planarity.hpp"

namespace pcontract {

Embedding::Embedding(Graph g, const std::map<Vertex, std::vector<Vertex>>& rotation) : graph_(std::move(g)) {
    const std::size_t n = graph_.vertex_count();
    rotation_.resize(n);
    std::unordered_map<std::uint64_t, std::uint32_t> position;
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = graph_.vertices()[i];
        auto nbrs = graph_.neighbors_at(i);
        auto it = rotation.find(v);
        if (it == rotation.end()) {
            if (!nbrs.empty()) throw error(errc::consistency, "missing rotation at vertex " + std::to_string(v));
            continue;
        }
        std::vector<Vertex> sorted = it->second;
        std::sort(sorted.begin(), sorted.end());
        if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end())) {
            throw error(errc::consistency, "rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
        }
        rotation_[i] = it->second;
        for (std::uint32_t p = 0; p < rotation_[i].size(); ++p) position[dart_key(v, rotation_[i][p])] = p;
    }

    auto comps = component_vertex_sets(graph_);
    vertex_component_.assign(n, 0);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (Vertex v : comps[c]) vertex_component_[*graph_.index_of(v)] = c;
    }

    dart_face_.reserve(graph_.edge_count() * 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = graph_.vertices()[i];
        if (rotation_[i].empty()) {
            faces_.push_back({v});
            continue;
        }
        for (Vertex w : rotation_[i]) {
            if (dart_face_.count(dart_key(v, w))) continue;
            const auto face_id = static_cast<std::uint32_t>(faces_.size());
            std::vector<Vertex> walk;
            Vertex a = v, b = w;
            while (!dart_face_.count(dart_key(a, b))) {
                dart_face_.emplace(dart_key(a, b), face_id);
                walk.push_back(a);
                const auto& rot_b = rotation_[*graph_.index_of(b)];
                std::uint32_t p = position.at(dart_key(b, a));
                Vertex next = rot_b[(p + 1) % rot_b.size()];
                a = b;
                b = next;
            }
            if (a != v || b != w) throw error(errc::consistency, "face traversal did not close");
            faces_.push_back(std::move(walk));
        }
    }

    face_component_.resize(faces_.size());
    std::vector<std::size_t> per_component(comps.size(), 0);
    component_outer_.assign(comps.size(), faces_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        std::size_t c = vertex_component_[*graph_.index_of(faces_[f].front())];
        face_component_[f] = c;
        ++per_component[c];
        std::size_t& best = component_outer_[c];
        if (best == faces_.size() || faces_[f].size() > faces_[best].size()) best = f;
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::size_t edges = 0;
        for (Vertex v : comps[c]) edges += graph_.degree(v);
        edges /= 2;
        std::size_t expected = edges + 2 - comps[c].size();
        if (per_component[c] != expected) {
            throw error(errc::consistency, "rotation system is not planar: component " + std::to_string(c) + " has " +
                                               std::to_string(per_component[c]) + " faces, Euler requires " +
                                               std::to_string(expected));
        }
    }
    outer_ = component_outer_.empty() ? 0 : component_outer_[0];
}

std::span<const Vertex> Embedding::rotation(Vertex v) const { return rotation_[graph_.require_index(v)]; }

std::size_t Embedding::face_of(Vertex from, Vertex to) const {
    auto it = dart_face_.find(dart_key(from, to));
    if (it == dart_face_.end()) {
        throw error(errc::invalid_edge, std::to_string(from) + "->" + std::to_string(to) + " is not a dart");
    }
    return it->second;
}

std::size_t Embedding::component_of(Vertex v) const { return vertex_component_[graph_.require_index(v)]; }

Embedding Embedding::with_outer_face(std::size_t face) const {
    if (face >= faces_.size()) throw error(errc::invalid_parameter, "no face " + std::to_string(face));
    Embedding copy = *this;
    copy.component_outer_[face_component_[face]] = face;
    copy.outer_ = face;
    return copy;
}

const std::vector<std::vector<Vertex>>& faces(const Embedding& e) { return e.faces(); }

CycleRegion cycle_interior(const Embedding& e, std::span<const Vertex> cycle) {
    const Graph& g = e.graph();
    if (cycle.size() < 3) throw error(errc::invalid_cycle, "a cycle needs at least three vertices");
    std::unordered_set<Vertex> on_cycle;
    std::unordered_set<std::uint64_t> cycle_edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i];
        Vertex b = cycle[(i + 1) % cycle.size()];
        if (!g.has_vertex(a)) throw error(errc::invalid_cycle, "vertex " + std::to_string(a) + " not in graph");
        if (!on_cycle.insert(a).second) throw error(errc::invalid_cycle, "vertex " + std::to_string(a) + " repeated");
        if (!g.has_edge(a, b)) {
            throw error(errc::invalid_cycle, std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
        }
        Edge k = make_edge(a, b);
        cycle_edges.insert((std::uint64_t{k.u} << 32) | k.v);
    }
    auto is_cycle_edge = [&](Vertex a, Vertex b) {
        Edge k = make_edge(a, b);
        return cycle_edges.count((std::uint64_t{k.u} << 32) | k.v) > 0;
    };

    const std::size_t component = e.component_of(cycle[0]);
    std::vector<char> outside(e.face_count(), 0);
    std::deque<std::size_t> queue{e.outer_face_of_component(component)};
    outside[queue.front()] = 1;
    while (!queue.empty()) {
        std::size_t f = queue.front();
        queue.pop_front();
        const auto& walk = e.faces()[f];
        for (std::size_t i = 0; i < walk.size(); ++i) {
            Vertex a = walk[i];
            Vertex b = walk[(i + 1) % walk.size()];
            if (a == b || is_cycle_edge(a, b)) continue;
            std::size_t twin = e.face_of(b, a);
            if (!outside[twin]) {
                outside[twin] = 1;
                queue.push_back(twin);
            }
        }
    }

    std::unordered_set<Vertex> inside;
    for (std::size_t f = 0; f < e.face_count(); ++f) {
        if (outside[f] || e.component_of_face(f) != component) continue;
        for (Vertex v : e.faces()[f]) {
            if (!on_cycle.count(v)) inside.insert(v);
        }
    }

    CycleRegion region;
    region.cycle.assign(cycle.begin(), cycle.end());
    for (Vertex v : g.vertices()) {
        if (e.component_of(v) != component || on_cycle.count(v)) continue;
        (inside.count(v) ? region.interior : region.exterior).push_back(v);
    }
    return region;
}

void write_embedding(std::ostream& out, const Embedding& e) {
    for (Vertex v : e.graph().vertices()) {
        out << v << ':';
        for (Vertex w : e.rotation(v)) out << ' ' << w;
        out << '\n';
    }
    out << "outer:";
    if (e.face_count() > 0) {
        for (Vertex v : e.faces()[e.outer_face()]) out << ' ' << v;
    }
    out << '\n';
}

std::string to_embedding_string(const Embedding& e) {
    std::ostringstream out;
    write_embedding(out, e);
    return out.str();
}

namespace {

bool same_cyclic_walk(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
        bool all = true;
        for (std::size_t i = 0; i < a.size() && all; ++i) all = a[(i + shift) % a.size()] == b[i];
        if (all) return true;
    }
    return false;
}

}  // namespace

Embedding parse_embedding(std::istream& in, const Graph& g) {
    std::map<Vertex, std::vector<Vertex>> rotation;
    std::optional<std::vector<Vertex>> outer;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw error(errc::parse, "line " + std::to_string(lineno) + ": missing ':'");
        std::string head = line.substr(0, colon);
        std::istringstream rest(line.substr(colon + 1));
        std::vector<Vertex> ids;
        long long x = 0;
        while (rest >> x) {
            if (x < 0) throw error(errc::parse, "line " + std::to_string(lineno) + ": negative vertex id");
            ids.push_back(static_cast<Vertex>(x));
        }
        if (!rest.eof()) throw error(errc::parse, "line " + std::to_string(lineno) + ": bad vertex list");
        if (head == "outer") {
            outer = std::move(ids);
            continue;
        }
        std::istringstream hv(head);
        long long v = 0;
        if (!(hv >> v) || v < 0 || !(hv >> std::ws).eof()) {
            throw error(errc::parse, "line " + std::to_string(lineno) + ": bad vertex '" + head + "'");
        }
        if (!rotation.emplace(static_cast<Vertex>(v), std::move(ids)).second) {
            throw error(errc::parse, "line " + std::to_string(lineno) + ": vertex listed twice");
        }
    }
    for (const auto& [v, rot] : rotation) {
        if (!g.has_vertex(v)) throw error(errc::consistency, "vertex " + std::to_string(v) + " is not in the graph");
    }
    Embedding e(g, rotation);
    if (!outer) return e;
    for (std::size_t f = 0; f < e.face_count(); ++f) {
        if (same_cyclic_walk(e.faces()[f], *outer)) return e.with_outer_face(f);
    }
    throw error(errc::consistency, "outer walk is not a face of the embedding");
}

Embedding parse_embedding_string(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    return parse_embedding(in, g);
}

}  // namespace pcontract
