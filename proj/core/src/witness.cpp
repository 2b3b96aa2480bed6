#include "pcontract/witness.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pcontract/error.hpp"

namespace pcontract {

namespace {

bool induces_connected(const Graph& host, const std::vector<Vertex>& part) {
    if (part.empty()) return false;
    std::set<Vertex> members(part.begin(), part.end());
    std::set<Vertex> seen{part.front()};
    std::vector<Vertex> stack{part.front()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : host.neighbors(v)) {
            if (members.count(w) && seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen.size() == members.size();
}

}  // namespace

bool verify_witness_structure(const WitnessStructure& ws) {
    const auto& labels = ws.target.vertices();
    if (ws.parts.size() != labels.size()) return false;
    std::map<Vertex, Vertex> owner;
    for (const auto& [label, part] : ws.parts) {
        if (!ws.target.has_vertex(label) || part.empty()) return false;
        for (Vertex v : part) {
            if (!ws.host.has_vertex(v)) return false;
            if (!owner.emplace(v, label).second) return false;
        }
    }
    if (owner.size() != ws.host.vertex_count()) return false;
    for (const auto& [label, part] : ws.parts) {
        if (!induces_connected(ws.host, part)) return false;
    }
    std::set<Edge> seen;
    for (const Edge& e : ws.host.edges()) {
        Vertex a = owner[e.u];
        Vertex b = owner[e.v];
        if (a == b) continue;
        if (!ws.target.has_edge(a, b)) return false;
        seen.insert(make_edge(a, b));
    }
    return seen.size() == ws.target.edge_count();
}

Graph quotient_graph(const Graph& host, const std::map<Vertex, std::vector<Vertex>>& parts) {
    std::map<Vertex, Vertex> owner;
    std::vector<Vertex> labels;
    for (const auto& [label, part] : parts) {
        labels.push_back(label);
        for (Vertex v : part) {
            if (!owner.emplace(v, label).second) {
                throw error(errc::invalid_parameter, "parts overlap at vertex " + std::to_string(v));
            }
        }
    }
    std::vector<Edge> es;
    for (const Edge& e : host.edges()) {
        auto a = owner.find(e.u);
        auto b = owner.find(e.v);
        if (a == owner.end() || b == owner.end() || a->second == b->second) continue;
        es.push_back(make_edge(a->second, b->second));
    }
    return Graph(std::move(labels), es);
}

bool isomorphic_small(const Graph& a, const Graph& b, std::size_t max_vertices) {
    const std::size_t n = a.vertex_count();
    if (n > max_vertices || b.vertex_count() > max_vertices) {
        throw error(errc::not_applicable, "isomorphism check limited to small graphs");
    }
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<std::size_t> da, db;
    for (std::size_t i = 0; i < n; ++i) {
        da.push_back(a.neighbors_at(i).size());
        db.push_back(b.neighbors_at(i).size());
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (da[i] != db[perm[i]]) ok = false;
        }
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                if (a.has_edge(va[i], va[j]) != b.has_edge(vb[perm[i]], vb[perm[j]])) ok = false;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph complete_graph(std::size_t n, Vertex first) {
    std::vector<Vertex> vs(n);
    std::iota(vs.begin(), vs.end(), first);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) es.push_back({vs[i], vs[j]});
    }
    return Graph(std::move(vs), es);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b, Vertex first) {
    std::vector<Vertex> vs(a + b);
    std::iota(vs.begin(), vs.end(), first);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) es.push_back({vs[i], vs[a + j]});
    }
    return Graph(std::move(vs), es);
}

}  // namespace pcontract
