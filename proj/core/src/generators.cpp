#include "pcontract/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "pcontract/error.hpp"
#include "pcontract/witness.hpp"

namespace pcontract {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw error(errc::invalid_parameter, what);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<Vertex> iota_vertices(std::size_t n) {
    std::vector<Vertex> vs(n);
    for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<Vertex>(i);
    return vs;
}

Graph k5_with_paths(int p, bool keep_k5_edges) {
    std::vector<Edge> es;
    Vertex next = 5;
    for (Vertex u = 0; u < 5; ++u) {
        for (Vertex v = u + 1; v < 5; ++v) {
            if (keep_k5_edges) es.push_back({u, v});
            Vertex prev = u;
            for (int i = 0; i < p; ++i) {
                es.push_back(make_edge(prev, next));
                prev = next++;
            }
            es.push_back(make_edge(prev, v));
        }
    }
    return Graph(iota_vertices(next), es);
}

}  // namespace

Graph generate_g_r(int r) {
    require(r >= 3, "G_r needs r >= 3");
    std::vector<Edge> es{{0, 1}, {0, 2}, {1, 2}};
    for (Vertex a = 0; a < 3; ++a) {
        for (int j = 0; j < r; ++j) es.push_back({a, static_cast<Vertex>(3 + j)});
    }
    return Graph(iota_vertices(static_cast<std::size_t>(r) + 3), es);
}

Graph generate_gstar(int p) {
    require(p >= 1, "G*_p needs p >= 1");
    return k5_with_paths(p, true);
}

Graph generate_k5_subdivision(int p) {
    require(p >= 0, "subdivision count must be nonnegative");
    return k5_with_paths(p, false);
}

WallInstance generate_wall_plus_apex(int height, const std::vector<std::vector<WallPos>>& attachments, int noise,
                                     std::uint64_t seed) {
    require(height >= 2, "wall height must be at least 2");
    require(noise >= 0, "noise must be nonnegative");
    Wall base = elementary_wall(height);
    const Graph& wall_graph = *base.host;
    std::vector<Edge> es = wall_graph.edges();
    Vertex next = static_cast<Vertex>(wall_graph.vertex_count());
    WallInstance out;
    for (const auto& attach : attachments) {
        const Vertex apex = next++;
        out.apexes.push_back(apex);
        for (WallPos p : attach) {
            auto it = base.nodes.find(p);
            require(it != base.nodes.end(), "apex attachment outside the wall");
            es.push_back(make_edge(apex, it->second));
        }
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < noise; ++i) {
        es.push_back(make_edge(static_cast<Vertex>(draw(rng, wall_graph.vertex_count())), next));
        ++next;
    }
    out.graph = Graph(iota_vertices(next), es);
    out.wall = rebind_wall(base, std::make_shared<const Graph>(out.graph));
    return out;
}

Graph generate_random(int n, int m, std::uint64_t seed) {
    require(n >= 0, "n must be nonnegative");
    const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    require(m >= 0 && m <= max_m, "m out of range for n");
    std::vector<Edge> all;
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
        for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) all.push_back({u, v});
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[draw(rng, i)]);
    all.resize(static_cast<std::size_t>(m));
    return Graph(iota_vertices(static_cast<std::size_t>(n)), all);
}

Graph generate_grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
    std::vector<Edge> es;
    auto id = [cols](int r, int c) { return static_cast<Vertex>(r * cols + c); };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) es.push_back({id(r, c), id(r + 1, c)});
        }
    }
    return Graph(iota_vertices(static_cast<std::size_t>(rows * cols)), es);
}

Graph generate_petersen() {
    std::vector<Edge> es;
    for (Vertex i = 0; i < 5; ++i) {
        es.push_back(make_edge(i, (i + 1) % 5));
        es.push_back(make_edge(i, i + 5));
        es.push_back(make_edge(i + 5, (i + 2) % 5 + 5));
    }
    return Graph(iota_vertices(10), es);
}

Graph generate_instance(const GenParams& params) {
    switch (params.family) {
        case Family::g_r:
            return generate_g_r(params.r);
        case Family::gstar:
            return generate_gstar(params.p);
        case Family::k5_subdivision:
            return generate_k5_subdivision(params.p);
        case Family::wall_plus_apex:
            return generate_wall_plus_apex(params.height, params.attachments, params.noise, params.seed).graph;
        case Family::random:
            return generate_random(params.n, params.m, params.seed);
        case Family::grid:
            return generate_grid(params.a, params.b);
        case Family::complete:
            require(params.n >= 1, "complete graph needs n >= 1");
            return complete_graph(static_cast<std::size_t>(params.n));
        case Family::complete_bipartite:
            require(params.a >= 1 && params.b >= 1, "complete bipartite graph needs positive sides");
            return complete_bipartite_graph(static_cast<std::size_t>(params.a), static_cast<std::size_t>(params.b));
        case Family::petersen:
            return generate_petersen();
    }
    throw error(errc::invalid_parameter, "unknown family");
}

Family parse_family(const std::string& name) {
    static const std::map<std::string, Family> names{
        {"Gr", Family::g_r},         {"Gstar", Family::gstar},       {"k5sub", Family::k5_subdivision},
        {"wall", Family::wall_plus_apex}, {"random", Family::random}, {"grid", Family::grid},
        {"complete", Family::complete},   {"kmn", Family::complete_bipartite}, {"petersen", Family::petersen},
    };
    auto it = names.find(name);
    if (it == names.end()) throw error(errc::invalid_parameter, "unknown family '" + name + "'");
    return it->second;
}

}  // namespace pcontract
