#include "pcontract/pipeline.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <unordered_set>

#include "pcontract/error.hpp"

namespace pcontract {

namespace {

std::vector<Vertex> reach_within(const Graph& g, Vertex seed, const std::unordered_set<Vertex>& allowed) {
    std::vector<Vertex> out{seed};
    std::unordered_set<Vertex> seen{seed};
    std::deque<Vertex> queue{seed};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (allowed.count(w) && seen.insert(w).second) {
                out.push_back(w);
                queue.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Edges of g with an end in one of the parts labelled 1..4.
EdgeSet incident_edges(const Graph& g, const WitnessStructure& ws) {
    std::set<Edge> out;
    for (const auto& [label, part] : ws.parts) {
        if (label == 5) continue;
        for (Vertex v : part) {
            for (Vertex w : g.neighbors(v)) out.insert(make_edge(v, w));
        }
    }
    return {out.begin(), out.end()};
}

WitnessStructure k5_structure(const Graph& g, std::map<Vertex, std::vector<Vertex>> parts) {
    std::vector<Vertex> all;
    for (auto& [label, part] : parts) {
        std::sort(part.begin(), part.end());
        all.insert(all.end(), part.begin(), part.end());
    }
    WitnessStructure ws;
    ws.host = induced_subgraph(g, all);
    ws.target = complete_graph(5, 1);
    ws.parts = std::move(parts);
    return ws;
}

std::size_t lowest_empty(const SiClassification& cls) {
    for (std::size_t i = 0; i < cls.sets.size(); ++i) {
        if (cls.sets[i].empty()) return i;
    }
    return cls.sets.size();
}

}  // namespace

std::size_t SiClassification::type1_count() const {
    return static_cast<std::size_t>(std::count(type1.begin(), type1.end(), true));
}

SiClassification classify_si(const Graph& g, std::span<const Vertex> s, const SubwallPacking& packing,
                             const Embedding& emb) {
    SiClassification cls;
    const Graph& h = emb.graph();
    for (const Wall& inner : packing.inner_subwalls) {
        for (Vertex v : inner.perimeter) {
            if (!h.has_vertex(v)) throw error(errc::consistency, "packing is not part of the embedded graph");
        }
        auto region = cycle_interior(emb, inner.perimeter);
        std::unordered_set<Vertex> inside(region.interior.begin(), region.interior.end());
        std::vector<Vertex> si;
        for (Vertex y : s) {
            for (Vertex w : g.neighbors(y)) {
                if (inside.count(w)) {
                    si.push_back(y);
                    break;
                }
            }
        }
        std::sort(si.begin(), si.end());
        cls.sets.push_back(std::move(si));
    }
    for (std::size_t i = 0; i < cls.sets.size(); ++i) {
        bool shared = !cls.sets[i].empty();
        for (Vertex y : cls.sets[i]) {
            bool elsewhere = false;
            for (std::size_t j = 0; j < cls.sets.size() && !elsewhere; ++j) {
                elsewhere = j != i && std::binary_search(cls.sets[j].begin(), cls.sets[j].end(), y);
            }
            shared = shared && elsewhere;
        }
        cls.type1.push_back(shared);
    }
    return cls;
}

std::optional<Type1Certificate> claim1_refute(const Graph& g, std::span<const Vertex>,
                                              const SubwallPacking& packing, const Embedding& emb,
                                              const SiClassification& cls, int k) {
    if (cls.type1_count() < static_cast<std::size_t>(k) + 1) return std::nullopt;
    const Graph& h = emb.graph();
    Type1Certificate cert;
    cert.budget = k;
    std::set<Edge> taken;
    for (std::size_t i = 0; i < cls.type1.size(); ++i) {
        if (!cls.type1[i]) continue;
        const auto& ring = packing.subwalls[i].perimeter;
        const std::size_t len = ring.size();
        std::map<Vertex, std::vector<Vertex>> parts;
        parts[1].assign(ring.begin(), ring.begin() + static_cast<long>(len / 3));
        parts[2].assign(ring.begin() + static_cast<long>(len / 3), ring.begin() + static_cast<long>(2 * len / 3));
        parts[3].assign(ring.begin() + static_cast<long>(2 * len / 3), ring.end());

        auto region = cycle_interior(emb, ring);
        std::unordered_set<Vertex> inside(region.interior.begin(), region.interior.end());
        parts[4] = reach_within(h, packing.inner_subwalls[i].nodes.begin()->second, inside);

        std::unordered_set<Vertex> rest(g.vertices().begin(), g.vertices().end());
        for (Vertex v : ring) rest.erase(v);
        for (Vertex v : region.interior) rest.erase(v);
        parts[5] = reach_within(g, packing.outer_wall.perimeter.front(), rest);

        WitnessStructure ws = k5_structure(g, std::move(parts));
        if (!verify_witness_structure(ws)) {
            throw error(errc::internal_invariant, "type-1 witness structure for subwall " + std::to_string(i) +
                                                      " failed verification");
        }
        EdgeSet ei = incident_edges(g, ws);
        bool disjoint = std::none_of(ei.begin(), ei.end(), [&](const Edge& e) { return taken.count(e) > 0; });
        if (!disjoint) continue;
        taken.insert(ei.begin(), ei.end());
        cert.structures.push_back(std::move(ws));
        cert.edge_sets.push_back(std::move(ei));
    }
    if (cert.structures.size() < static_cast<std::size_t>(k) + 1) return std::nullopt;
    return cert;
}

bool verify_type1_certificate(const Graph& g, const Type1Certificate& cert) {
    if (cert.budget < 0 || cert.structures.size() < static_cast<std::size_t>(cert.budget) + 1) return false;
    if (!cert.edge_sets.empty() && cert.edge_sets.size() != cert.structures.size()) return false;
    std::set<Edge> taken;
    for (std::size_t i = 0; i < cert.structures.size(); ++i) {
        const auto& given = cert.structures[i];
        if (given.parts.size() != 5) return false;
        for (Vertex label = 1; label <= 5; ++label) {
            if (!given.parts.count(label)) return false;
        }
        for (const auto& [label, part] : given.parts) {
            for (Vertex v : part) {
                if (!g.has_vertex(v)) return false;
            }
        }
        WitnessStructure ws = k5_structure(g, given.parts);
        if (!verify_witness_structure(ws)) return false;
        EdgeSet ei = incident_edges(g, ws);
        if (!cert.edge_sets.empty() && cert.edge_sets[i] != ei) return false;
        for (const Edge& e : ei) {
            if (!taken.insert(e).second) return false;
        }
    }
    return true;
}

Embedding normalize_embedding(const Embedding& emb, const Wall& w) {
    const Vertex probe = w.at({1, 2});
    auto inside = [&](const Embedding& e) {
        auto region = cycle_interior(e, w.perimeter);
        return std::find(region.interior.begin(), region.interior.end(), probe) != region.interior.end();
    };
    if (inside(emb)) return emb;
    const Vertex a = w.perimeter[0];
    const Vertex b = w.perimeter[1];
    for (std::size_t f : {emb.face_of(a, b), emb.face_of(b, a)}) {
        Embedding e = emb.with_outer_face(f);
        if (inside(e)) return e;
    }
    throw error(errc::internal_invariant, "no face outside the wall perimeter");
}

IrrelevantEdge find_irrelevant_edge(const Graph& g, std::span<const Vertex> s, int k, const Wall* hint) {
    if (k < 0) throw error(errc::invalid_parameter, "budget must be nonnegative");
    IrrelevantEdge out;
    const int kp = std::max(k, static_cast<int>(s.size()));
    Graph h = delete_vertices(g, s);
    auto emb = embed(h);
    if (!emb) throw error(errc::precondition, "g - s is not planar");
    auto wall = find_wall(h, 2, hint);
    out.wall_height = wall ? wall->height : 0;
    if (!wall || wall->height < packing_threshold(kp)) return out;

    SubwallPacking packing = pack_subwalls(*wall, kp);
    Embedding fixed = normalize_embedding(*emb, *wall);
    SiClassification cls = classify_si(g, s, packing, fixed);
    if (auto cert = claim1_refute(g, s, packing, fixed, cls, k)) {
        out.kind = IrrelevantEdge::Kind::refuted;
        out.certificate = std::move(cert);
        return out;
    }
    const std::size_t idx = lowest_empty(cls);
    if (idx == cls.sets.size()) return out;
    TripleLayers layers = triple_layers(packing.inner_subwalls[idx], kp, fixed);
    out.kind = IrrelevantEdge::Kind::edge;
    out.edge = layers.central_edge;
    return out;
}

namespace {

/// Original edge joining the classes of two current vertices; smallest first.
Edge original_edge(const Graph& original, const RenameJournal& journal, Vertex a, Vertex b) {
    const auto& ma = journal.members(a);
    const auto& mb = journal.members(b);
    std::optional<Edge> best;
    for (Vertex x : ma) {
        for (Vertex y : original.neighbors(x)) {
            if (std::binary_search(mb.begin(), mb.end(), y)) {
                Edge e = make_edge(x, y);
                if (!best || e < *best) best = e;
            }
        }
    }
    if (!best) throw error(errc::internal_invariant, "contracted classes are not adjacent");
    return *best;
}

Type1Certificate lift_type1(const Graph& original, const RenameJournal& journal, const Type1Certificate& cert) {
    Type1Certificate out;
    out.budget = cert.budget;
    for (const auto& ws : cert.structures) {
        std::map<Vertex, std::vector<Vertex>> parts;
        for (const auto& [label, part] : ws.parts) {
            auto& lifted = parts[label];
            for (Vertex v : part) {
                const auto& m = journal.members(v);
                lifted.insert(lifted.end(), m.begin(), m.end());
            }
        }
        WitnessStructure lifted = k5_structure(original, std::move(parts));
        out.edge_sets.push_back(incident_edges(original, lifted));
        out.structures.push_back(std::move(lifted));
    }
    return out;
}

struct ComponentRun {
    SolveResult result;
    std::vector<Vertex> apex;
    std::vector<Edge> contracted;
    Graph final_graph;
    SolveResult base;
};

/// Reduction loop on one connected graph. Stops with `settled` set when a
/// type-1 refutation or a missing apex set decides the instance.
struct Reduction {
    std::vector<Vertex> apex;
    std::vector<Edge> contracted;
    Graph current;
    RenameJournal journal;
    std::optional<SolveResult> settled;
    /// Result on `current` behind `settled`.
    std::optional<SolveResult> settled_base;
};

Reduction run_reduction(const Graph& g, int k, const PipelineOptions& opts, std::vector<StatRow>& stats,
                        int& iteration, bool use_hint) {
    Reduction red{{}, {}, g, RenameJournal(g.vertices()), std::nullopt, std::nullopt};
    auto s = find_apex_set(g, k);
    if (!s) {
        SolveResult no;
        no.answer = Answer::no;
        no.budget = k;
        no.refutation = NoApexProof{k};
        red.settled = no;
        red.settled_base = no;
        stats.push_back({iteration++, g.vertex_count(), g.edge_count(), 0, "noapex"});
        return red;
    }
    red.apex = *s;
    bool first = true;
    while (true) {
        const Wall* hint = first && use_hint ? opts.hint : nullptr;
        first = false;
        IrrelevantEdge step = find_irrelevant_edge(red.current, red.apex, k, hint);
        if (step.kind == IrrelevantEdge::Kind::edge) {
            stats.push_back({iteration++, red.current.vertex_count(), red.current.edge_count(), step.wall_height, "edge"});
            red.contracted.push_back(original_edge(g, red.journal, step.edge.u, step.edge.v));
            red.journal.merge(step.edge.u, step.edge.v);
            red.current = contract_edge(red.current, step.edge);
            continue;
        }
        if (step.kind == IrrelevantEdge::Kind::refuted) {
            stats.push_back(
                {iteration++, red.current.vertex_count(), red.current.edge_count(), step.wall_height, "type1"});
            SolveResult base;
            base.answer = Answer::no;
            base.budget = k;
            base.refutation = *step.certificate;
            Type1Certificate lifted = lift_type1(g, red.journal, *step.certificate);
            if (!verify_type1_certificate(g, lifted)) {
                throw error(errc::internal_invariant, "lifted type-1 certificate failed verification");
            }
            SolveResult no;
            no.answer = Answer::no;
            no.budget = k;
            no.refutation = std::move(lifted);
            red.settled = std::move(no);
            red.settled_base = std::move(base);
            return red;
        }
        stats.push_back({iteration++, red.current.vertex_count(), red.current.edge_count(), step.wall_height, "none"});
        return red;
    }
}

ComponentRun solve_connected(const Graph& g, int k, const PipelineOptions& opts, std::vector<StatRow>& stats,
                             int& iteration, bool use_hint) {
    ComponentRun run;
    run.result.budget = k;
    if (is_planar(g)) {
        run.result.answer = Answer::yes;
        run.final_graph = g;
        run.base = run.result;
        stats.push_back({iteration++, g.vertex_count(), g.edge_count(), 0, "planar"});
        return run;
    }
    Reduction red = run_reduction(g, k, opts, stats, iteration, use_hint);
    run.apex = red.apex;
    run.contracted = red.contracted;
    run.final_graph = red.current;
    if (red.settled) {
        run.result = *red.settled;
        run.base = *red.settled_base;
        return run;
    }
    if (!opts.fallback) {
        run.result.answer = Answer::undecided;
        run.base = run.result;
        return run;
    }
    SolveResult base = solve_exact({red.current, k}, opts.oracle);
    stats.push_back({iteration++, red.current.vertex_count(), red.current.edge_count(), 0, "oracle"});
    run.base = base;
    if (base.answer == Answer::no) {
        run.result = base;
        if (auto* p = std::get_if<ExhaustionProof>(&run.result.refutation)) p->reduced_by = red.contracted;
        return run;
    }
    SolveResult yes;
    yes.answer = Answer::yes;
    yes.budget = k;
    for (const Edge& e : base.contraction_edges) yes.contraction_edges.push_back(original_edge(g, red.journal, e.u, e.v));
    std::sort(yes.contraction_edges.begin(), yes.contraction_edges.end());
    if (verify_certificate({g, k}, yes)) {
        run.result = std::move(yes);
    } else {
        run.result = solve_exact({g, k}, opts.oracle);
        stats.push_back({iteration++, g.vertex_count(), g.edge_count(), 0, "oracle-original"});
    }
    return run;
}

}  // namespace

SolveOutcome solve(const Instance& inst, const PipelineOptions& opts) {
    if (inst.budget < 0) throw error(errc::invalid_parameter, "budget must be nonnegative");
    SolveOutcome out;
    ReductionTrace& trace = out.trace;
    int iteration = 0;
    auto comps = component_vertex_sets(inst.graph);

    if (comps.size() <= 1) {
        ComponentRun run = solve_connected(inst.graph, inst.budget, opts, trace.stats, iteration, true);
        out.result = run.result;
        trace.apex = run.apex;
        trace.contracted_edges = run.contracted;
        trace.final_instance = {run.final_graph, inst.budget};
        trace.base_result = run.base;
        return out;
    }

    // Per-component minimum budgets, smallest first, until the total runs out.
    int remaining = inst.budget;
    std::vector<ComponentRefutation> refutations;
    std::vector<Edge> chosen;
    std::vector<Edge> base_edges;
    Graph final_graph = inst.graph;
    bool undecided = false;
    bool failed = false;
    for (const auto& comp : comps) {
        Graph cg = induced_subgraph(inst.graph, comp);
        if (is_planar(cg)) continue;
        std::optional<ComponentRun> last_no;
        std::optional<ComponentRun> yes;
        for (int b = 0; b <= remaining; ++b) {
            ComponentRun run = solve_connected(cg, b, opts, trace.stats, iteration, false);
            if (run.result.answer == Answer::yes) {
                yes = std::move(run);
                break;
            }
            if (run.result.answer == Answer::undecided) {
                undecided = true;
                break;
            }
            last_no = std::move(run);
        }
        if (last_no) {
            refutations.push_back(
                {comp.front(), std::make_shared<const SolveResult>(last_no->result)});
        }
        if (undecided) break;
        if (!yes) {
            failed = true;
            break;
        }
        remaining -= static_cast<int>(yes->result.contraction_edges.size());
        chosen.insert(chosen.end(), yes->result.contraction_edges.begin(), yes->result.contraction_edges.end());
        trace.apex.insert(trace.apex.end(), yes->apex.begin(), yes->apex.end());
        trace.contracted_edges.insert(trace.contracted_edges.end(), yes->contracted.begin(), yes->contracted.end());
        base_edges.insert(base_edges.end(), yes->base.contraction_edges.begin(), yes->base.contraction_edges.end());
    }
    if (!trace.contracted_edges.empty()) final_graph = contract_edge_set(inst.graph, trace.contracted_edges).graph;
    trace.final_instance = {final_graph, inst.budget};
    out.result.budget = inst.budget;
    if (undecided) {
        out.result.answer = Answer::undecided;
    } else if (failed) {
        out.result.answer = Answer::no;
        out.result.refutation = ComponentsProof{std::move(refutations)};
    } else {
        out.result.answer = Answer::yes;
        std::sort(chosen.begin(), chosen.end());
        out.result.contraction_edges = std::move(chosen);
    }
    trace.base_result = out.result;
    if (out.result.answer == Answer::yes) {
        std::sort(base_edges.begin(), base_edges.end());
        trace.base_result.contraction_edges = std::move(base_edges);
    }
    return out;
}

ReductionTrace reduce(const Instance& inst, const PipelineOptions& opts) {
    if (inst.budget < 0) throw error(errc::invalid_parameter, "budget must be nonnegative");
    ReductionTrace trace;
    int iteration = 0;
    trace.base_result.answer = Answer::undecided;
    trace.base_result.budget = inst.budget;
    if (!is_connected(inst.graph)) {
        trace.final_instance = inst;
        trace.stats.push_back({0, inst.graph.vertex_count(), inst.graph.edge_count(), 0, "disconnected"});
        return trace;
    }
    Reduction red = run_reduction(inst.graph, inst.budget, opts, trace.stats, iteration, true);
    trace.apex = red.apex;
    trace.contracted_edges = red.contracted;
    trace.final_instance = {red.current, inst.budget};
    if (red.settled_base) trace.base_result = *red.settled_base;
    return trace;
}

void write_stats_csv(std::ostream& out, const std::vector<StatRow>& rows) {
    out << "iteration,vertices,edges,wall_height,event\n";
    for (const auto& r : rows) {
        out << r.iteration << ',' << r.vertices << ',' << r.edges << ',' << r.wall_height << ',' << r.event << '\n';
    }
}

}  // namespace pcontract
