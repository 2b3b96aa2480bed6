#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "pcontract/error.hpp"
#include "pcontract/planarity.hpp"

namespace pcontract {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.vertex_count());
    int next = 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        for (Vertex w : g.neighbors_at(i)) {
            std::size_t j = *g.index_of(w);
            if (i < j) {
                auto [e, added] = boost::add_edge(i, j, bg);
                boost::put(boost::edge_index, bg, e, next++);
            }
        }
    }
    return bg;
}

Vertex vertex_of(const Graph& g, std::size_t index) { return g.vertices()[index]; }

/// Reads a subdivision off an edge set that is exactly a K5 or K3,3
/// subdivision (plus nothing else). Returns nullopt otherwise.
std::optional<KuratowskiSubdivision> classify(const Graph& sub) {
    std::vector<Vertex> branch;
    for (Vertex v : sub.vertices()) {
        std::size_t d = sub.degree(v);
        if (d == 0) continue;
        if (d == 1) return std::nullopt;
        if (d >= 3) branch.push_back(v);
    }
    KuratowskiSubdivision ks;
    if (branch.size() == 5) {
        ks.kind = KuratowskiSubdivision::Kind::k5;
    } else if (branch.size() == 6) {
        ks.kind = KuratowskiSubdivision::Kind::k33;
    } else {
        return std::nullopt;
    }
    const std::size_t want_degree = branch.size() == 5 ? 4 : 3;
    std::set<Vertex> is_branch(branch.begin(), branch.end());
    for (Vertex b : branch) {
        if (sub.degree(b) != want_degree) return std::nullopt;
    }

    std::map<Vertex, std::vector<Vertex>> ends_of;
    std::set<Vertex> used_internal;
    for (Vertex b : branch) {
        for (Vertex first : sub.neighbors(b)) {
            std::vector<Vertex> path{b};
            Vertex prev = b, cur = first;
            while (!is_branch.count(cur)) {
                path.push_back(cur);
                auto nb = sub.neighbors(cur);
                Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
                if (path.size() > sub.vertex_count()) return std::nullopt;
            }
            path.push_back(cur);
            if (cur == b) return std::nullopt;
            ends_of[b].push_back(cur);
            if (b < cur) {
                for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                    if (!used_internal.insert(path[i]).second) return std::nullopt;
                }
                ks.paths.push_back(std::move(path));
            }
        }
    }

    if (ks.kind == KuratowskiSubdivision::Kind::k5) {
        for (Vertex b : branch) {
            std::set<Vertex> ends(ends_of[b].begin(), ends_of[b].end());
            if (ends.size() != 4) return std::nullopt;
        }
        ks.branch_vertices = branch;
    } else {
        std::set<Vertex> side_b(ends_of[branch[0]].begin(), ends_of[branch[0]].end());
        if (side_b.size() != 3) return std::nullopt;
        std::vector<Vertex> side_a;
        for (Vertex v : branch) {
            if (!side_b.count(v)) side_a.push_back(v);
        }
        if (side_a.size() != 3) return std::nullopt;
        for (Vertex a : side_a) {
            std::set<Vertex> ends(ends_of[a].begin(), ends_of[a].end());
            if (ends != side_b) return std::nullopt;
        }
        ks.branch_vertices = side_a;
        ks.branch_vertices.insert(ks.branch_vertices.end(), side_b.begin(), side_b.end());
    }
    std::sort(ks.paths.begin(), ks.paths.end(), [](const auto& x, const auto& y) {
        return std::pair(x.front(), x.back()) < std::pair(y.front(), y.back());
    });
    return ks;
}

/// Repeatedly removes vertices of degree at most one.
Graph strip_pendants(const Graph& g) {
    std::map<Vertex, std::set<Vertex>> adj;
    for (Vertex v : g.vertices()) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<Vertex> stack;
    for (const auto& [v, nb] : adj) {
        if (nb.size() <= 1) stack.push_back(v);
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        auto it = adj.find(v);
        if (it == adj.end()) continue;
        for (Vertex w : it->second) {
            auto& nw = adj[w];
            nw.erase(v);
            if (nw.size() <= 1) stack.push_back(w);
        }
        adj.erase(it);
    }
    std::vector<Edge> es;
    for (const auto& [v, nb] : adj) {
        for (Vertex w : nb) {
            if (v < w) es.push_back({v, w});
        }
    }
    return Graph::from_edges(es);
}

/// Maximal paths whose inner vertices have degree two, plus bare cycles.
std::vector<std::vector<Edge>> chains(const Graph& g) {
    std::vector<std::vector<Edge>> out;
    std::set<Edge> seen;
    auto walk = [&](Vertex start, Vertex first) {
        std::vector<Edge> chain;
        Vertex prev = start, cur = first;
        chain.push_back(make_edge(prev, cur));
        while (g.degree(cur) == 2 && cur != start) {
            auto nb = g.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            chain.push_back(make_edge(prev, cur));
        }
        return chain;
    };
    for (Vertex v : g.vertices()) {
        if (g.degree(v) < 3) continue;
        for (Vertex w : g.neighbors(v)) {
            if (seen.count(make_edge(v, w))) continue;
            auto chain = walk(v, w);
            seen.insert(chain.begin(), chain.end());
            out.push_back(std::move(chain));
        }
    }
    for (const Edge& e : g.edges()) {
        if (seen.count(e)) continue;
        auto chain = walk(e.u, e.v);
        seen.insert(chain.begin(), chain.end());
        out.push_back(std::move(chain));
    }
    return out;
}

/// Deletes whole degree-two chains while the remainder stays nonplanar; what
/// is left is an edge-minimal nonplanar graph, i.e. a Kuratowski subdivision.
Graph minimize_nonplanar(const Graph& g) {
    Graph cur = strip_pendants(g);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& chain : chains(cur)) {
            if (!std::all_of(chain.begin(), chain.end(), [&](const Edge& e) { return cur.has_edge(e.u, e.v); })) {
                continue;
            }
            std::set<Edge> drop(chain.begin(), chain.end());
            std::vector<Edge> rest;
            for (const Edge& e : cur.edges()) {
                if (!drop.count(e)) rest.push_back(e);
            }
            Graph trial = strip_pendants(Graph::from_edges(rest));
            if (!is_planar(trial)) {
                cur = std::move(trial);
                changed = true;
            }
        }
    }
    return cur;
}

}  // namespace

EdgeSet KuratowskiSubdivision::edges() const {
    EdgeSet out;
    for (const auto& p : paths) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back(make_edge(p[i], p[i + 1]));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vertex> KuratowskiSubdivision::vertices() const {
    std::vector<Vertex> out = branch_vertices;
    for (const auto& p : paths) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_planar(const Graph& g) {
    if (g.edge_count() < 9 || g.vertex_count() < 5) return true;
    BoostGraph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

PlanarityCertificate test_planarity(const Graph& g) {
    BoostGraph bg = to_boost(g);
    std::vector<std::vector<BoostEdge>> rotation(g.vertex_count());
    std::vector<BoostEdge> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(rotation.begin(), boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    if (planar) {
        std::map<Vertex, std::vector<Vertex>> rot;
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            auto& out = rot[vertex_of(g, i)];
            for (const BoostEdge& e : rotation[i]) {
                std::size_t s = boost::source(e, bg);
                std::size_t t = boost::target(e, bg);
                out.push_back(vertex_of(g, s == i ? t : s));
            }
        }
        return Embedding(g, rot);
    }
    std::vector<Edge> es;
    for (const BoostEdge& e : kuratowski) {
        es.push_back(make_edge(vertex_of(g, boost::source(e, bg)), vertex_of(g, boost::target(e, bg))));
    }
    Graph sub = Graph::from_edges(es);
    if (auto ks = classify(sub)) return *ks;
    if (auto ks = classify(minimize_nonplanar(is_planar(sub) ? g : sub))) return *ks;
    throw error(errc::internal_invariant, "could not extract a Kuratowski subdivision");
}

std::optional<Embedding> embed(const Graph& g) {
    auto cert = test_planarity(g);
    if (auto* e = std::get_if<Embedding>(&cert)) return std::move(*e);
    return std::nullopt;
}

KuratowskiSubdivision find_kuratowski(const Graph& g) {
    auto cert = test_planarity(g);
    if (auto* ks = std::get_if<KuratowskiSubdivision>(&cert)) return std::move(*ks);
    throw error(errc::not_applicable, "graph is planar");
}

bool validate_kuratowski(const Graph& g, const KuratowskiSubdivision& ks) {
    const bool k5 = ks.kind == KuratowskiSubdivision::Kind::k5;
    const std::size_t nb = k5 ? 5 : 6;
    if (ks.branch_vertices.size() != nb || ks.paths.size() != (k5 ? 10u : 9u)) return false;
    std::map<Vertex, std::size_t> label;
    for (std::size_t i = 0; i < nb; ++i) {
        if (!g.has_vertex(ks.branch_vertices[i])) return false;
        if (!label.emplace(ks.branch_vertices[i], i).second) return false;
    }
    std::set<std::pair<std::size_t, std::size_t>> pattern;
    std::set<Vertex> internal;
    for (const auto& p : ks.paths) {
        if (p.size() < 2) return false;
        auto a = label.find(p.front());
        auto b = label.find(p.back());
        if (a == label.end() || b == label.end() || a->second == b->second) return false;
        std::size_t x = std::min(a->second, b->second);
        std::size_t y = std::max(a->second, b->second);
        if (!k5 && !(x < 3 && y >= 3)) return false;
        if (!pattern.emplace(x, y).second) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.has_edge(p[i], p[i + 1])) return false;
        }
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (label.count(p[i]) || !internal.insert(p[i]).second) return false;
        }
    }
    return true;
}

WitnessStructure kuratowski_witness(const KuratowskiSubdivision& ks) {
    WitnessStructure ws;
    const bool k5 = ks.kind == KuratowskiSubdivision::Kind::k5;
    ws.target = k5 ? complete_graph(5) : complete_bipartite_graph(3, 3);
    std::map<Vertex, Vertex> label;
    for (std::size_t i = 0; i < ks.branch_vertices.size(); ++i) {
        label[ks.branch_vertices[i]] = static_cast<Vertex>(i);
        ws.parts[static_cast<Vertex>(i)].push_back(ks.branch_vertices[i]);
    }
    for (const auto& p : ks.paths) {
        auto it = label.find(p.front());
        if (it == label.end()) continue;
        auto& part = ws.parts[it->second];
        part.insert(part.end(), p.begin() + 1, p.end() - 1);
    }
    auto es = ks.edges();
    std::vector<Vertex> vs = ks.vertices();
    ws.host = Graph(std::move(vs), es);
    return ws;
}

}  // namespace pcontract
