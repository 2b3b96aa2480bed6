#include "pcontract/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "pcontract/error.hpp"

namespace pcontract {

namespace {

std::string describe(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

struct MinUnionFind {
    std::map<Vertex, Vertex> parent;

    Vertex find(Vertex v) {
        auto it = parent.find(v);
        if (it == parent.end()) {
            parent.emplace(v, v);
            return v;
        }
        Vertex root = v;
        while (parent[root] != root) root = parent[root];
        while (parent[v] != root) {
            Vertex next = parent[v];
            parent[v] = root;
            v = next;
        }
        return root;
    }

    void unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw error(errc::invalid_edge, "loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::vector<Vertex> vertices, std::span<const Edge> edges) : ids_(std::move(vertices)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    adj_.assign(ids_.size(), {});
    for (const Edge& e : edges) {
        if (e.u == e.v) throw error(errc::invalid_edge, "loop at vertex " + std::to_string(e.u));
        auto iu = index_of(e.u);
        auto iv = index_of(e.v);
        if (!iu || !iv) throw error(errc::invalid_edge, "endpoint of " + describe(e) + " is not a vertex");
        adj_[*iu].push_back(e.v);
        adj_[*iv].push_back(e.u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        degree_sum += nbrs.size();
    }
    edge_count_ = degree_sum / 2;
}

Graph Graph::from_edges(std::span<const Edge> edges) {
    std::vector<Vertex> vs;
    vs.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    return Graph(std::move(vs), edges);
}

std::optional<std::size_t> Graph::index_of(Vertex v) const noexcept {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Graph::require_index(Vertex v) const {
    auto i = index_of(v);
    if (!i) throw error(errc::invalid_vertex, "unknown vertex " + std::to_string(v));
    return *i;
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
    auto i = index_of(a);
    if (!i) return false;
    const auto& nbrs = adj_[*i];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const { return adj_[require_index(v)]; }

EdgeSet Graph::edges() const {
    EdgeSet out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        for (Vertex w : adj_[i]) {
            if (ids_[i] < w) out.push_back({ids_[i], w});
        }
    }
    return out;
}

Graph contract_edge(const Graph& g, Edge e) {
    e = make_edge(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) throw error(errc::invalid_edge, describe(e) + " is not an edge");
    const Vertex keep = e.u;
    const Vertex gone = e.v;
    std::vector<Vertex> vs;
    vs.reserve(g.vertex_count() - 1);
    for (Vertex v : g.vertices()) {
        if (v != gone) vs.push_back(v);
    }
    std::vector<Edge> es;
    es.reserve(g.edge_count());
    for (const Edge& f : g.edges()) {
        Vertex a = f.u == gone ? keep : f.u;
        Vertex b = f.v == gone ? keep : f.v;
        if (a != b) es.push_back(make_edge(a, b));
    }
    return Graph(std::move(vs), es);
}

ContractionResult contract_edge_set(const Graph& g, std::span<const Edge> es) {
    MinUnionFind uf;
    for (const Edge& e : es) {
        if (!g.has_edge(e.u, e.v)) throw error(errc::invalid_edge, describe(e) + " is not an edge");
        uf.unite(e.u, e.v);
    }
    ContractionResult result;
    std::size_t touched = uf.parent.size();
    std::size_t classes = 0;
    for (auto& [v, p] : uf.parent) {
        Vertex root = uf.find(v);
        result.representative[v] = root;
        if (root == v) ++classes;
    }
    result.count = touched - classes;
    if (result.count == 0) {
        result.graph = g;
        return result;
    }

    auto rep = [&](Vertex v) {
        auto it = result.representative.find(v);
        return it == result.representative.end() ? v : it->second;
    };
    std::vector<Vertex> vs;
    vs.reserve(g.vertex_count());
    for (Vertex v : g.vertices()) {
        if (rep(v) == v) vs.push_back(v);
    }
    std::vector<Edge> out;
    out.reserve(g.edge_count());
    for (const Edge& f : g.edges()) {
        Vertex a = rep(f.u);
        Vertex b = rep(f.v);
        if (a != b) out.push_back(make_edge(a, b));
    }
    result.graph = Graph(std::move(vs), out);
    return result;
}

std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            std::size_t i = q.front();
            q.pop();
            comp.push_back(g.vertices()[i]);
            for (Vertex w : g.neighbors_at(i)) {
                std::size_t j = *g.index_of(w);
                if (!seen[j]) {
                    seen[j] = 1;
                    q.push(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    // Vertices are scanned in increasing id order, so components already come
    // out ordered by their smallest member.
    return out;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& comp : component_vertex_sets(g)) out.push_back(induced_subgraph(g, comp));
    return out;
}

bool is_connected(const Graph& g) { return component_vertex_sets(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> vs(keep.begin(), keep.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (Vertex v : vs) {
        if (!g.has_vertex(v)) throw error(errc::invalid_vertex, "unknown vertex " + std::to_string(v));
    }
    std::vector<Edge> es;
    for (Vertex v : vs) {
        for (Vertex w : g.neighbors(v)) {
            if (v < w && std::binary_search(vs.begin(), vs.end(), w)) es.push_back({v, w});
        }
    }
    return Graph(std::move(vs), es);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> remove) {
    std::vector<Vertex> gone(remove.begin(), remove.end());
    std::sort(gone.begin(), gone.end());
    for (Vertex v : gone) {
        if (!g.has_vertex(v)) throw error(errc::invalid_vertex, "unknown vertex " + std::to_string(v));
    }
    std::vector<Vertex> keep;
    keep.reserve(g.vertex_count());
    for (Vertex v : g.vertices()) {
        if (!std::binary_search(gone.begin(), gone.end(), v)) keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

Graph two_core(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < n; ++i) {
        deg[i] = g.neighbors_at(i).size();
        if (deg[i] < 2) stack.push_back(i);
    }
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        if (removed[i]) continue;
        removed[i] = 1;
        for (Vertex w : g.neighbors_at(i)) {
            std::size_t j = *g.index_of(w);
            if (!removed[j] && --deg[j] < 2) stack.push_back(j);
        }
    }
    std::vector<Vertex> keep;
    for (std::size_t i = 0; i < n; ++i) {
        if (!removed[i]) keep.push_back(g.vertices()[i]);
    }
    return induced_subgraph(g, keep);
}

Graph graph_union(const Graph& a, const Graph& b) {
    std::vector<Vertex> vs = a.vertices();
    vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
    std::vector<Edge> es = a.edges();
    auto more = b.edges();
    es.insert(es.end(), more.begin(), more.end());
    return Graph(std::move(vs), es);
}

RenameJournal::RenameJournal(std::span<const Vertex> originals) {
    for (Vertex v : originals) {
        current_[v] = v;
        members_[v] = {v};
    }
}

Vertex RenameJournal::current(Vertex original) const {
    auto it = current_.find(original);
    if (it == current_.end()) throw error(errc::invalid_vertex, "vertex " + std::to_string(original) + " not journalled");
    return it->second;
}

void RenameJournal::merge(Vertex a, Vertex b) {
    if (a == b) return;
    if (b < a) std::swap(a, b);
    auto ia = members_.find(a);
    auto ib = members_.find(b);
    if (ia == members_.end() || ib == members_.end()) {
        throw error(errc::invalid_vertex, "merge of unknown current ids");
    }
    for (Vertex m : ib->second) current_[m] = a;
    auto& into = ia->second;
    into.insert(into.end(), ib->second.begin(), ib->second.end());
    std::sort(into.begin(), into.end());
    members_.erase(ib);
}

const std::vector<Vertex>& RenameJournal::members(Vertex v) const {
    auto it = members_.find(v);
    if (it == members_.end()) throw error(errc::invalid_vertex, "vertex " + std::to_string(v) + " is not current");
    return it->second;
}

}  // namespace pcontract
