#include <algorithm>
#include <unordered_set>

#include "pcontract/error.hpp"
#include "pcontract/pipeline.hpp"

namespace pcontract {

namespace {

std::optional<std::vector<Vertex>> branch(const Graph& g, int k) {
    if (k == 0) return is_planar(g) ? std::optional<std::vector<Vertex>>(std::vector<Vertex>{}) : std::nullopt;
    auto cert = test_planarity(g);
    if (std::holds_alternative<Embedding>(cert)) return std::vector<Vertex>{};
    const auto& ks = std::get<KuratowskiSubdivision>(cert);
    std::vector<Vertex> candidates = ks.vertices();
    auto is_branch = [&](Vertex v) {
        return std::find(ks.branch_vertices.begin(), ks.branch_vertices.end(), v) != ks.branch_vertices.end();
    };
    std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
        bool ba = is_branch(a), bb = is_branch(b);
        if (ba != bb) return ba;
        std::size_t da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    if (k == 1) {
        std::unordered_set<Vertex> alive(candidates.begin(), candidates.end());
        for (Vertex v : candidates) {
            if (!alive.count(v)) continue;
            const Vertex gone[] = {v};
            Graph rest = delete_vertices(g, gone);
            auto sub = test_planarity(rest);
            if (std::holds_alternative<Embedding>(sub)) return std::vector<Vertex>{v};
            auto kept = std::get<KuratowskiSubdivision>(sub).vertices();
            std::unordered_set<Vertex> hit(kept.begin(), kept.end());
            std::erase_if(alive, [&](Vertex u) { return !hit.count(u); });
        }
        return std::nullopt;
    }
    for (Vertex v : candidates) {
        const Vertex gone[] = {v};
        if (auto rest = branch(delete_vertices(g, gone), k - 1)) {
            rest->push_back(v);
            return rest;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<Vertex>> find_apex_set(const Graph& g, int k) {
    if (k < 0) throw error(errc::invalid_parameter, "budget must be nonnegative");
    auto s = branch(g, k);
    if (s) std::sort(s->begin(), s->end());
    return s;
}

}  // namespace pcontract
