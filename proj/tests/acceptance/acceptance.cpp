#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "brute.hpp"
#include "pcontract/generators.hpp"
#include "pcontract/oracle.hpp"
#include "pcontract/pipeline.hpp"
#include "pcontract/planarity.hpp"
#include "pcontract/walls.hpp"
#include "pcontract/witness.hpp"

using namespace pcontract;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= limit_s) {
        out.ok = false;
        out.detail = "over the time limit";
    }
    if (!out.ok) ++failures;
    std::printf("criterion %d %s: %s (%.2f s, limit %.0f s)%s%s\n", id, name, out.ok ? "PASS" : "FAIL", secs, limit_s,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
}

std::string num(long long x) { return std::to_string(x); }

Outcome wall_perimeters() {
    Outcome o;
    const std::size_t pinned[] = {14, 22, 30};
    for (int h = 2; h <= 4; ++h) {
        o.require(elementary_wall(h).perimeter.size() == pinned[h - 2], "perimeter of h=" + num(h));
    }
    for (int h = 2; h <= 20; ++h) {
        Wall w = elementary_wall(h);
        o.require(w.perimeter.size() == static_cast<std::size_t>(8 * h - 2), "8h-2 at h=" + num(h));
        o.require(compute_perimeter(w) == w.perimeter, "recomputed perimeter at h=" + num(h));
    }
    return o;
}

Outcome oracle_pipeline_equivalence() {
    Outcome o;
    int nonplanar = 0, yes = 0, no = 0;
    for (int i = 0; i < 300; ++i) {
        int n = 6 + i % 5;
        int m = std::min(n * (n - 1) / 2, 18 - i % 4);
        int k = i % 3;
        Graph g = generate_random(n, m, 7000 + i);
        nonplanar += is_planar(g) ? 0 : 1;
        SolveOutcome mine = solve({g, k});
        SolveResult ref = solve_exact({g, k});
        o.require(mine.result.answer == ref.answer, "answers differ on graph " + num(i));
        o.require(verify_certificate({g, k}, mine.result), "pipeline certificate rejected on graph " + num(i));
        o.require(verify_certificate({g, k}, ref), "oracle certificate rejected on graph " + num(i));
        (ref.answer == Answer::yes ? yes : no) += 1;
    }
    o.require(nonplanar >= 100 && yes > 0 && no > 0, "sample too easy: " + num(nonplanar) + " nonplanar");
    return o;
}

Outcome gr_family() {
    Outcome o;
    for (int r = 3; r <= 8; ++r) {
        Graph g = generate_g_r(r);
        o.require(!is_planar(g), "G_" + num(r) + " planar");
        SolveOutcome out = solve({g, 0});
        o.require(out.result.answer == Answer::no, "G_" + num(r) + " not refuted at k=0");
        SolveOutcome one = solve({g, 1});
        o.require(one.result.answer == Answer::yes && one.result.contraction_edges.size() == 1,
                  "G_" + num(r) + " not yes at k=1");
        o.require(verify_certificate({g, 1}, one.result), "G_" + num(r) + " certificate rejected");
        if (one.result.contraction_edges.size() == 1) {
            Edge e = one.result.contraction_edges[0];
            o.require(e.u <= 2 && e.v <= 2, "G_" + num(r) + " contracted a non-A edge");
        }
        for (Edge e : {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}}) {
            o.require(is_planar(contract_edge(g, e)), "A-edge contraction leaves G_" + num(r) + " nonplanar");
        }
    }
    return o;
}

Outcome gstar_family() {
    Outcome o;
    o.require(min_contractions(generate_gstar(2), 3) == 1, "Gstar_2 minimum is not 1");
    o.require(!min_contractions(generate_k5_subdivision(2), 2), "K5 subdivision fits within cap 2");
    return o;
}

Outcome apex_gap() {
    Outcome o;
    Graph g = generate_k5_subdivision(3);
    auto s = find_apex_set(g, 1);
    o.require(s && s->size() == 1, "no one-vertex apex set");
    if (s) o.require(is_planar(delete_vertices(g, *s)), "apex set does not planarize");
    o.require(!min_contractions(g, 1), "one contraction suffices");
    return o;
}

Outcome contraction_to_deletion() {
    Outcome o;
    int found = 0;
    for (int seed = 0; found < 100 && seed < 5000; ++seed) {
        int n = 7 + seed % 4;
        int m = std::min(n * (n - 1) / 2, 15 + seed % 4);
        Graph g = generate_random(n, m, 11000 + seed);
        if (is_planar(g)) continue;
        SolveResult r = solve_exact({g, 3});
        if (r.answer != Answer::yes) continue;
        ++found;
        auto s = derive_apex_from_contraction(g, r.contraction_edges);
        auto count = contract_edge_set(g, r.contraction_edges).count;
        o.require(s.size() == count, "|S| differs from contraction count at seed " + num(seed));
        o.require(is_planar(delete_vertices(g, s)), "derived S does not planarize at seed " + num(seed));
    }
    o.require(found == 100, "only " + num(found) + " yes-instances");
    return o;
}

struct EdgeCase {
    std::string name;
    WallInstance wi;
    int k;
    bool hint;
};

Outcome irrelevant_edges() {
    Outcome o;
    std::vector<EdgeCase> cases;
    cases.push_back({"h45 face apex",
                     generate_wall_plus_apex(45, {{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}, {2, 1}}}), 1, true});
    cases.push_back(
        {"h45 spread apex", generate_wall_plus_apex(45, {{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 5}, {4, 6}}}, 3, 7), 1, true});
    cases.push_back({"h45 corner apex, found wall",
                     generate_wall_plus_apex(45, {{{40, 80}, {41, 81}, {42, 83}, {43, 84}, {38, 85}}}, 20, 5), 1, false});
    cases.push_back({"h11 wall", generate_wall_plus_apex(11, {}), 0, true});
    cases.push_back({"h11 wall with pendants, found wall", generate_wall_plus_apex(11, {}, 15, 2), 0, false});

    int emitted = 0;
    for (const auto& c : cases) {
        Graph g = c.wi.graph;
        auto s = find_apex_set(g, c.k);
        o.require(s.has_value(), c.name + ": no apex set");
        if (!s) continue;
        int here = 0;
        for (int round = 0; round < 3; ++round) {
            const Wall* hint = c.hint && round == 0 ? &c.wi.wall : nullptr;
            IrrelevantEdge ie = find_irrelevant_edge(g, *s, c.k, hint);
            if (ie.kind != IrrelevantEdge::Kind::edge) break;
            Graph next = contract_edge(g, ie.edge);
            Answer before = solve_exact({g, c.k}).answer;
            Answer after = solve_exact({next, c.k}).answer;
            o.require(before == after, c.name + ": contraction changed the answer");
            ++here;
            g = std::move(next);
        }
        o.require(here > 0, c.name + ": no edge emitted");
        emitted += here;
    }
    o.require(emitted >= 5, "only " + num(emitted) + " edges emitted");
    return o;
}

EdgeSet incident_to_parts_1_to_4(const Graph& g, const WitnessStructure& ws) {
    std::set<Edge> out;
    for (const auto& [label, part] : ws.parts) {
        if (label < 1 || label > 4) continue;
        for (Vertex v : part) {
            for (Vertex w : g.neighbors(v)) out.insert(make_edge(v, w));
        }
    }
    return {out.begin(), out.end()};
}

Outcome type1_certificates() {
    Outcome o;
    struct Case {
        std::string name;
        WallInstance wi;
        bool hint;
    };
    std::vector<Case> cases;
    cases.push_back({"three subwalls", generate_wall_plus_apex(45, {{{12, 22}, {12, 66}, {34, 22}}}), true});
    cases.push_back({"four touch points, found wall",
                     generate_wall_plus_apex(45, {{{12, 22}, {12, 66}, {34, 22}, {34, 66}}}, 20, 9), false});
    const int k = 1;
    for (const auto& c : cases) {
        const Graph& g = c.wi.graph;
        auto s = find_apex_set(g, k);
        o.require(s.has_value(), c.name + ": no apex set");
        if (!s) continue;
        Graph h = delete_vertices(g, *s);
        auto wall = find_wall(h, 2, c.hint ? &c.wi.wall : nullptr);
        o.require(wall && wall->height >= packing_threshold(k), c.name + ": wall too low");
        if (!wall || wall->height < packing_threshold(k)) continue;
        auto packing = pack_subwalls(*wall, k);
        auto emb = normalize_embedding(*embed(h), *wall);
        auto cls = classify_si(g, *s, packing, emb);
        auto cert = claim1_refute(g, *s, packing, emb, cls, k);
        o.require(cert.has_value(), c.name + ": no refutation");
        if (!cert) continue;
        o.require(cert->structures.size() >= static_cast<std::size_t>(k) + 1, c.name + ": too few structures");
        std::set<Edge> seen;
        for (const auto& ws : cert->structures) {
            o.require(verify_witness_structure(ws), c.name + ": structure rejected");
            o.require(isomorphic_small(ws.target, complete_graph(5)), c.name + ": target is not K5");
            for (const Edge& e : incident_to_parts_1_to_4(g, ws)) {
                o.require(seen.insert(e).second, c.name + ": E_i overlap");
            }
        }
        o.require(verify_type1_certificate(g, *cert), c.name + ": certificate rejected");
        SolveOutcome out = solve({g, k});
        o.require(out.result.answer == Answer::no && verify_certificate({g, k}, out.result),
                  c.name + ": pipeline did not refute");
    }
    WallInstance small = generate_wall_plus_apex(6, {{{2, 3}, {2, 10}, {5, 6}}});
    o.require(solve_exact({small.graph, 1}).answer == Answer::no, "reduced analogue is not a no-instance");
    return o;
}

Outcome planarity_module() {
    Outcome o;
    for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{
             {"K5", complete_graph(5)}, {"K3,3", complete_bipartite_graph(3, 3)}, {"Petersen", generate_petersen()}}) {
        auto cert = test_planarity(g);
        auto* ks = std::get_if<KuratowskiSubdivision>(&cert);
        o.require(ks != nullptr, name + " reported planar");
        if (!ks) continue;
        o.require(validate_kuratowski(g, *ks), name + " subdivision invalid");
        o.require(verify_witness_structure(kuratowski_witness(*ks)), name + " witness invalid");
    }
    auto euler = [&](const Graph& g, const std::string& name) {
        auto e = embed(g);
        o.require(e.has_value(), name + " not embedded");
        if (!e) return;
        long long lhs = static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count()) +
                        static_cast<long long>(e->face_count());
        o.require(lhs == 2 * static_cast<long long>(e->component_count()), name + " violates Euler");
    };
    euler(generate_grid(10, 10), "10x10 grid");
    for (int h = 2; h <= 12; ++h) euler(*elementary_wall(h).host, "wall h=" + num(h));

    int graphs = 0, nonplanar = 0;
    for (int seed = 0; seed < 1500; ++seed) {
        int n = 5 + seed % 3;
        int max_m = n * (n - 1) / 2;
        int m = std::min(max_m, n + static_cast<int>(seed * 7919 % 11));
        Graph g = generate_random(n, m, 20000 + seed);
        bool brute = check::brute_planar(g);
        o.require(is_planar(g) == brute, "disagreement with minor brute force at seed " + num(seed));
        ++graphs;
        nonplanar += brute ? 0 : 1;
    }
    o.require(graphs >= 1000 && nonplanar >= 100, "weak sample: " + num(nonplanar) + " nonplanar");
    return o;
}

}  // namespace

int main() {
    criterion(1, "wall perimeters", 1, wall_perimeters);
    criterion(2, "oracle-pipeline equivalence", 300, oracle_pipeline_equivalence);
    criterion(3, "G_r family", 10, gr_family);
    criterion(4, "G*_p family", 120, gstar_family);
    criterion(5, "subdivided K5 apex gap", 60, apex_gap);
    criterion(6, "contraction to deletion", 120, contraction_to_deletion);
    criterion(7, "irrelevant edges keep the answer", 900, irrelevant_edges);
    criterion(8, "type-1 certificates", 600, type1_certificates);
    criterion(9, "planarity module", 600, planarity_module);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
