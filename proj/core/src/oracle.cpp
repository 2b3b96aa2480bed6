#include "pcontract/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

#include "pcontract/error.hpp"
#include "pcontract/pipeline.hpp"
#include "pcontract/planarity.hpp"

namespace pcontract {

namespace {

/// A Kuratowski subdivision indexed for the survival test.
struct KuratowskiIndex {
    std::unordered_map<Vertex, int> branch;
    std::unordered_map<Vertex, int> internal_path;
    std::vector<std::pair<Vertex, Vertex>> path_ends;
};

KuratowskiIndex index_subdivision(const KuratowskiSubdivision& ks) {
    KuratowskiIndex idx;
    for (std::size_t i = 0; i < ks.branch_vertices.size(); ++i) idx.branch[ks.branch_vertices[i]] = static_cast<int>(i);
    for (std::size_t p = 0; p < ks.paths.size(); ++p) {
        const auto& path = ks.paths[p];
        idx.path_ends.emplace_back(path.front(), path.back());
        for (std::size_t j = 1; j + 1 < path.size(); ++j) idx.internal_path[path[j]] = static_cast<int>(p);
    }
    return idx;
}

/// Contracting each group to one vertex keeps the subdivision as a minor
/// when every group meets it in at most one branch vertex and otherwise only
/// in interiors of a single path, or of paths ending at that branch vertex.
bool survives(const KuratowskiIndex& k, const std::vector<std::vector<Vertex>>& groups) {
    for (const auto& group : groups) {
        int branch = -1;
        Vertex branch_vertex = 0;
        std::vector<int> paths;
        for (Vertex v : group) {
            if (auto b = k.branch.find(v); b != k.branch.end()) {
                if (branch >= 0) return false;
                branch = b->second;
                branch_vertex = v;
            } else if (auto p = k.internal_path.find(v); p != k.internal_path.end()) {
                paths.push_back(p->second);
            }
        }
        if (branch < 0) {
            for (int p : paths) {
                if (p != paths.front()) return false;
            }
        } else {
            for (int p : paths) {
                const auto& [a, b] = k.path_ends[static_cast<std::size_t>(p)];
                if (a != branch_vertex && b != branch_vertex) return false;
            }
        }
    }
    return true;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

/// Kuratowski subdivisions from several vertex orders of g.
std::vector<KuratowskiIndex> kuratowski_samples(const Graph& g, int runs) {
    std::vector<KuratowskiIndex> out;
    std::set<EdgeSet> seen;
    const auto& vs = g.vertices();
    for (int t = 0; t < runs; ++t) {
        std::vector<Vertex> perm = vs;
        if (t > 0) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(t));
            for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
        }
        std::unordered_map<Vertex, Vertex> to, back;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            to[vs[i]] = perm[i];
            back[perm[i]] = vs[i];
        }
        std::vector<Edge> es;
        for (const Edge& e : g.edges()) es.push_back(make_edge(to[e.u], to[e.v]));
        KuratowskiSubdivision ks = find_kuratowski(Graph(perm, es));
        for (Vertex& v : ks.branch_vertices) v = back[v];
        for (auto& path : ks.paths) {
            for (Vertex& v : path) v = back[v];
        }
        if (seen.insert(ks.edges()).second) out.push_back(index_subdivision(ks));
    }
    return out;
}

/// Vertex groups merged by contracting `es`, or nullopt when es has a cycle.
std::optional<std::vector<std::vector<Vertex>>> merge_groups(const std::vector<Edge>& es) {
    std::vector<Vertex> ids;
    for (const Edge& e : es) {
        ids.push_back(e.u);
        ids.push_back(e.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::size_t> parent(ids.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto pos = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()); };
    for (const Edge& e : es) {
        std::size_t a = find(pos(e.u));
        std::size_t b = find(pos(e.v));
        if (a == b) return std::nullopt;
        parent[b] = a;
    }
    std::map<std::size_t, std::vector<Vertex>> groups;
    for (std::size_t i = 0; i < ids.size(); ++i) groups[find(i)].push_back(ids[i]);
    std::vector<std::vector<Vertex>> out;
    for (auto& [root, group] : groups) out.push_back(std::move(group));
    return out;
}

struct Search {
    const Graph& g;
    const std::vector<Edge>& edges;
    const std::vector<KuratowskiIndex>& samples;
    std::atomic<std::uint64_t> visited{0};
    std::atomic<std::uint64_t> tests{0};
    std::atomic<std::uint64_t> pruned{0};

    /// True when contracting the subset planarizes g.
    bool test(const std::vector<std::size_t>& combo) {
        ++visited;
        std::vector<Edge> es;
        es.reserve(combo.size());
        for (std::size_t i : combo) es.push_back(edges[i]);
        auto groups = merge_groups(es);
        if (!groups) return false;
        for (const auto& k : samples) {
            if (survives(k, *groups)) {
                ++pruned;
                return false;
            }
        }
        ++tests;
        return is_planar(contract_edge_set(g, es).graph);
    }

    /// First hit, in lexicographic order, among subsets of the given size
    /// whose first index is first0, first0 + stride, ... Stops early once a
    /// smaller first index has a hit elsewhere.
    std::optional<std::vector<std::size_t>> scan(std::size_t size, std::size_t first0, std::size_t stride,
                                                 std::atomic<std::size_t>& best_first) {
        const std::size_t m = edges.size();
        for (std::size_t first = first0; first + size <= m; first += stride) {
            if (first > best_first.load()) return std::nullopt;
            std::vector<std::size_t> combo(size);
            for (std::size_t j = 0; j < size; ++j) combo[j] = first + j;
            while (true) {
                if (test(combo)) {
                    std::size_t cur = best_first.load();
                    while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
                    }
                    return combo;
                }
                // Advance the tail only; combo[0] stays at `first`.
                std::size_t j = size;
                while (j > 1 && combo[j - 1] == m - size + j - 1) --j;
                if (j <= 1) break;
                ++combo[j - 1];
                for (std::size_t t = j; t < size; ++t) combo[t] = combo[t - 1] + 1;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

SolveResult solve_exact(const Instance& inst, const OracleOptions& opts, OracleStats* stats) {
    if (inst.budget < 0) throw error(errc::invalid_parameter, "budget must be nonnegative");
    const Graph& g = inst.graph;
    const int k = inst.budget;
    SolveResult result;
    result.budget = k;
    if (is_planar(g)) {
        result.answer = Answer::yes;
        if (stats) stats->subsets_visited = 1;
        return result;
    }
    const std::vector<Edge> edges = g.edges();
    const std::size_t m = edges.size();
    std::vector<KuratowskiIndex> samples;
    if (opts.prune) samples = kuratowski_samples(g, 4);
    Search search{g, edges, samples};
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, opts.jobs));

    for (int size = 1; size <= k && static_cast<std::size_t>(size) <= m; ++size) {
        if (subsets_up_to(m, size) > opts.cap) {
            throw error(errc::capacity, "edge subsets of size <= " + std::to_string(size) + " over " +
                                            std::to_string(m) + " edges exceed the cap of " +
                                            std::to_string(opts.cap));
        }
        std::atomic<std::size_t> best_first{std::numeric_limits<std::size_t>::max()};
        std::vector<std::optional<std::vector<std::size_t>>> hits(jobs);
        const auto level = static_cast<std::size_t>(size);
        if (jobs == 1) {
            hits[0] = search.scan(level, 0, 1, best_first);
        } else {
            std::vector<std::thread> workers;
            std::mutex failure_lock;
            std::exception_ptr failure;
            for (std::size_t t = 0; t < jobs; ++t) {
                workers.emplace_back([&, t] {
                    try {
                        hits[t] = search.scan(level, t, jobs, best_first);
                    } catch (...) {
                        std::lock_guard lock(failure_lock);
                        if (!failure) failure = std::current_exception();
                    }
                });
            }
            for (auto& w : workers) w.join();
            if (failure) std::rethrow_exception(failure);
        }
        std::optional<std::vector<std::size_t>> best;
        for (auto& h : hits) {
            if (h && (!best || *h < *best)) best = std::move(h);
        }
        if (best) {
            result.answer = Answer::yes;
            for (std::size_t i : *best) result.contraction_edges.push_back(edges[i]);
            break;
        }
    }
    if (result.answer != Answer::yes) {
        result.answer = Answer::no;
        result.refutation = ExhaustionProof{m, k, subsets_up_to(m, k), {}};
    }
    if (stats) {
        stats->subsets_visited = search.visited + 1;
        stats->planarity_tests = search.tests + 1;
        stats->pruned = search.pruned;
    }
    return result;
}

std::optional<int> min_contractions(const Graph& g, int cap, const OracleOptions& opts) {
    if (cap < 0) throw error(errc::invalid_parameter, "cap must be nonnegative");
    SolveResult r = solve_exact({g, cap}, opts);
    if (r.answer != Answer::yes) return std::nullopt;
    return static_cast<int>(r.contraction_edges.size());
}

std::vector<Vertex> derive_apex_from_contraction(const Graph& g, const std::vector<Edge>& edges) {
    ContractionResult c = contract_edge_set(g, edges);
    std::vector<Vertex> out;
    for (const auto& [v, rep] : c.representative) {
        if (v != rep) out.push_back(v);
    }
    return out;
}

namespace {

bool verify_no(const Instance& inst, const SolveResult& res) {
    const Graph& g = inst.graph;
    const int k = inst.budget;
    if (const auto* p = std::get_if<ExhaustionProof>(&res.refutation)) {
        Graph searched = g;
        if (!p->reduced_by.empty()) searched = contract_edge_set(g, p->reduced_by).graph;
        return p->budget == k && p->edge_count == searched.edge_count() &&
               p->subsets_examined == subsets_up_to(p->edge_count, k);
    }
    if (const auto* t = std::get_if<Type1Certificate>(&res.refutation)) {
        Type1Certificate copy = *t;
        copy.budget = k;
        return verify_type1_certificate(g, copy);
    }
    if (std::holds_alternative<NoApexProof>(res.refutation)) return !find_apex_set(g, k).has_value();
    if (const auto* c = std::get_if<ComponentsProof>(&res.refutation)) {
        auto comps = component_vertex_sets(g);
        std::set<std::size_t> used;
        long long need = 0;
        for (const auto& part : c->parts) {
            if (!part.result || part.result->answer != Answer::no) return false;
            std::size_t which = comps.size();
            for (std::size_t i = 0; i < comps.size(); ++i) {
                if (std::binary_search(comps[i].begin(), comps[i].end(), part.representative)) which = i;
            }
            if (which == comps.size() || !used.insert(which).second) return false;
            if (part.result->budget < 0) return false;
            Instance sub{induced_subgraph(g, comps[which]), part.result->budget};
            if (!verify_certificate(sub, *part.result)) return false;
            need += part.result->budget + 1;
        }
        return need > k;
    }
    return false;
}

}  // namespace

bool verify_certificate(const Instance& inst, const SolveResult& res) {
    try {
        if (res.budget != inst.budget || inst.budget < 0) return false;
        if (res.answer == Answer::yes) {
            ContractionResult c = contract_edge_set(inst.graph, res.contraction_edges);
            return c.count <= static_cast<std::size_t>(inst.budget) && is_planar(c.graph);
        }
        if (res.answer == Answer::no) return verify_no(inst, res);
        return false;
    } catch (const error&) {
        return false;
    }
}

}  // namespace pcontract
