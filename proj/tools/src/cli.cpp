#include "pcontract/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "pcontract/certificate.hpp"
#include "pcontract/error.hpp"
#include "pcontract/generators.hpp"
#include "pcontract/graph_io.hpp"
#include "pcontract/oracle.hpp"
#include "pcontract/pipeline.hpp"
#include "pcontract/planarity.hpp"
#include "pcontract/walls.hpp"

namespace pcontract::cli {

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string cert;
    std::string hint;
    std::string stats;
    std::string trace;
    std::string wall_out;
    int k = 0;
    std::uint64_t seed = 0;
    std::uint64_t cap = OracleOptions{}.cap;
    int jobs = 1;
    bool no_fallback = false;
    bool no_prune = false;
    bool deterministic = false;
    bool verbose = false;
    std::optional<int> verify_k;

    std::string family = "random";
    int r = 3;
    int p = 1;
    int height = 2;
    int n = 0;
    int m = 0;
    int a = 0;
    int b = 0;
    int noise = 0;
    std::string attach;
};

class Io {
   public:
    Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    std::string read(const std::string& path) const {
        std::ostringstream buf;
        if (path.empty() || path == "-") {
            buf << in_.rdbuf();
        } else {
            std::ifstream f(path);
            if (!f) throw error(errc::io, "cannot open " + path);
            buf << f.rdbuf();
        }
        return buf.str();
    }

    void write(const std::string& path, const std::string& text) const {
        if (path.empty() || path == "-") {
            out_ << text;
            out_.flush();
            return;
        }
        std::ofstream f(path);
        if (!f) throw error(errc::io, "cannot write " + path);
        f << text;
        if (!f) throw error(errc::io, "write to " + path + " failed");
    }

   private:
    std::istream& in_;
    std::ostream& out_;
};

OracleOptions oracle_options(const Options& o) {
    OracleOptions opts;
    opts.cap = o.cap;
    opts.jobs = o.deterministic ? 1 : std::max(1, o.jobs);
    opts.prune = !o.no_prune;
    return opts;
}

int answer_code(Answer a) {
    switch (a) {
        case Answer::yes:
            return ok;
        case Answer::no:
            return negative;
        default:
            return failure;
    }
}

std::string stats_text(const std::vector<StatRow>& rows) {
    std::ostringstream s;
    write_stats_csv(s, rows);
    return s.str();
}

/// "r,c r,c;r,c" -> one position list per apex.
std::vector<std::vector<WallPos>> parse_attachments(const std::string& text) {
    std::vector<std::vector<WallPos>> out;
    if (text.empty()) return out;
    std::istringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<WallPos> apex;
        std::istringstream items(group);
        std::string item;
        while (items >> item) {
            WallPos pos;
            char comma = 0;
            std::istringstream one(item);
            if (!(one >> pos.row >> comma >> pos.col) || comma != ',' || !(one >> std::ws).eof()) {
                throw error(errc::parse, "bad attachment '" + item + "', expected r,c");
            }
            apex.push_back(pos);
        }
        out.push_back(std::move(apex));
    }
    return out;
}

int cmd_gen(const Options& o, const Io& io) {
    GenParams params;
    params.family = parse_family(o.family);
    params.r = o.r;
    params.p = o.p;
    params.height = o.height;
    params.n = o.n;
    params.m = o.m;
    params.a = o.a;
    params.b = o.b;
    params.noise = o.noise;
    params.seed = o.seed;
    params.attachments = parse_attachments(o.attach);
    if (params.family == Family::wall_plus_apex) {
        WallInstance wi = generate_wall_plus_apex(params.height, params.attachments, params.noise, params.seed);
        if (!o.wall_out.empty()) io.write(o.wall_out, to_wall_string(wi.wall));
        io.write(o.output, to_edge_list_string(wi.graph));
        return ok;
    }
    if (!o.wall_out.empty()) throw error(errc::invalid_parameter, "--wall-out needs --family wall");
    io.write(o.output, to_edge_list_string(generate_instance(params)));
    return ok;
}

int cmd_solve(const Options& o, const Io& io, std::ostream& err) {
    auto g = std::make_shared<const Graph>(parse_edge_list_string(io.read(o.input)));
    std::optional<Wall> hint;
    if (!o.hint.empty()) hint = parse_wall_string(io.read(o.hint), g);
    PipelineOptions opts;
    opts.oracle = oracle_options(o);
    opts.fallback = !o.no_fallback;
    opts.hint = hint ? &*hint : nullptr;
    SolveOutcome res = solve({*g, o.k}, opts);
    CertificateDocument doc;
    doc.apex = res.trace.apex;
    doc.trace = res.trace.contracted_edges;
    doc.result = res.result;
    io.write(o.output, to_document_string(doc));
    if (!o.stats.empty()) io.write(o.stats, stats_text(res.trace.stats));
    if (o.verbose) err << stats_text(res.trace.stats);
    return answer_code(res.result.answer);
}

int cmd_oracle(const Options& o, const Io& io, std::ostream& err) {
    Graph g = parse_edge_list_string(io.read(o.input));
    OracleStats stats;
    SolveResult res = solve_exact({g, o.k}, oracle_options(o), &stats);
    io.write(o.output, to_result_string(res));
    if (o.verbose) {
        err << "subsets " << stats.subsets_visited << ", planarity tests " << stats.planarity_tests << ", pruned "
            << stats.pruned << '\n';
    }
    return answer_code(res.answer);
}

int cmd_reduce(const Options& o, const Io& io, std::ostream& err) {
    auto g = std::make_shared<const Graph>(parse_edge_list_string(io.read(o.input)));
    std::optional<Wall> hint;
    if (!o.hint.empty()) hint = parse_wall_string(io.read(o.hint), g);
    PipelineOptions opts;
    opts.oracle = oracle_options(o);
    opts.hint = hint ? &*hint : nullptr;
    ReductionTrace trace = reduce({*g, o.k}, opts);
    io.write(o.output, to_edge_list_string(trace.final_instance.graph));
    if (!o.trace.empty()) {
        CertificateDocument doc;
        doc.apex = trace.apex;
        doc.trace = trace.contracted_edges;
        doc.result = trace.base_result;
        io.write(o.trace, to_document_string(doc));
    }
    if (!o.stats.empty()) io.write(o.stats, stats_text(trace.stats));
    if (o.verbose) err << stats_text(trace.stats);
    return ok;
}

enum class CertKind { wall, embedding, result };

CertKind sniff(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        if (line.compare(start, 6, "height") == 0) return CertKind::wall;
        if (std::isdigit(static_cast<unsigned char>(line[start])) || line.compare(start, 6, "outer:") == 0) {
            return CertKind::embedding;
        }
        return CertKind::result;
    }
    return CertKind::result;
}

int cmd_verify(const Options& o, const Io& io, std::ostream& err) {
    auto g = std::make_shared<const Graph>(parse_edge_list_string(io.read(o.input)));
    const std::string text = io.read(o.cert);
    switch (sniff(text)) {
        case CertKind::wall: {
            Wall w = parse_wall_string(text, g);
            bool valid = validate_wall(w);
            io.write(o.output, valid ? "valid wall\n" : "invalid wall\n");
            return valid ? ok : negative;
        }
        case CertKind::embedding: {
            try {
                parse_embedding_string(text, *g);
            } catch (const error& e) {
                if (e.code() != errc::consistency) throw;
                err << e.what() << '\n';
                io.write(o.output, "invalid embedding\n");
                return negative;
            }
            io.write(o.output, "valid embedding\n");
            return ok;
        }
        case CertKind::result:
            break;
    }
    CertificateDocument doc = parse_document_string(text);
    bool valid = verify_certificate({*g, doc.result.budget}, doc.result);
    if (valid && o.verify_k && *o.verify_k != doc.result.budget) {
        err << "certificate budget " << doc.result.budget << " differs from --k " << *o.verify_k << '\n';
        valid = false;
    }
    if (valid && doc.apex && !doc.apex->empty()) {
        for (Vertex v : *doc.apex) valid = valid && g->has_vertex(v);
        valid = valid && is_planar(delete_vertices(*g, *doc.apex));
        if (!valid) err << "apex set does not planarize the graph\n";
    }
    io.write(o.output, valid ? "valid " + std::string(to_string(doc.result.answer)) + "\n" : "invalid\n");
    return valid ? ok : negative;
}

int cmd_embed(const Options& o, const Io& io) {
    Graph g = parse_edge_list_string(io.read(o.input));
    auto cert = test_planarity(g);
    if (auto* e = std::get_if<Embedding>(&cert)) {
        io.write(o.output, to_embedding_string(*e));
        return ok;
    }
    const auto& ks = std::get<KuratowskiSubdivision>(cert);
    std::ostringstream s;
    s << "nonplanar " << (ks.kind == KuratowskiSubdivision::Kind::k5 ? "K5" : "K3,3") << "\nbranch:";
    for (Vertex v : ks.branch_vertices) s << ' ' << v;
    s << '\n';
    for (const auto& path : ks.paths) {
        s << "path:";
        for (Vertex v : path) s << ' ' << v;
        s << '\n';
    }
    io.write(o.output, s.str());
    return negative;
}

void add_io(CLI::App* cmd, Options& o) {
    cmd->add_option("-i,--input", o.input, "Edge-list file, - for stdin");
    cmd->add_option("-o,--output", o.output, "Output file, - for stdout");
}

void add_solver(CLI::App* cmd, Options& o) {
    cmd->add_option("-k,--k", o.k, "Contraction budget")->check(CLI::NonNegativeNumber);
    cmd->add_option("--cap", o.cap, "Largest number of edge subsets the oracle may visit");
    cmd->add_option("--jobs", o.jobs, "Oracle worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-prune", o.no_prune, "Disable Kuratowski pruning in the oracle");
    cmd->add_flag("--deterministic", o.deterministic, "Single-threaded oracle");
    cmd->add_flag("-v,--verbose", o.verbose, "Statistics on the error stream");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Planar contraction solver with certificates", "pcontract"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Generate an instance as an edge list");
    gen->add_option("-o,--output", o.output, "Output file, - for stdout");
    gen->add_option("--family", o.family, "Gr, Gstar, k5sub, wall, random, grid, complete, kmn, petersen");
    gen->add_option("--r", o.r, "r for Gr");
    gen->add_option("--p", o.p, "Subdivision length for Gstar and k5sub");
    gen->add_option("--height", o.height, "Wall height");
    gen->add_option("--n", o.n, "Vertices (random, complete)");
    gen->add_option("--m", o.m, "Edges (random)");
    gen->add_option("--a", o.a, "Rows or first side (grid, kmn)");
    gen->add_option("--b", o.b, "Columns or second side (grid, kmn)");
    gen->add_option("--noise", o.noise, "Pendant vertices on the wall");
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_option("--attach", o.attach, "Apex attachments, e.g. \"1,1 2,2;5,5 6,6\"");
    gen->add_option("--wall-out", o.wall_out, "Write the wall certificate here (wall family)");

    auto* solve_cmd = app.add_subcommand("solve", "Reduce with irrelevant edges, then decide");
    add_io(solve_cmd, o);
    add_solver(solve_cmd, o);
    solve_cmd->add_flag("--no-fallback", o.no_fallback, "Report undecided instead of running the oracle");
    solve_cmd->add_option("--stats", o.stats, "Per-iteration CSV statistics");
    solve_cmd->add_option("--hint", o.hint, "Wall certificate of the input graph");

    auto* oracle_cmd = app.add_subcommand("oracle", "Exact answer by subset enumeration");
    add_io(oracle_cmd, o);
    add_solver(oracle_cmd, o);

    auto* reduce_cmd = app.add_subcommand("reduce", "Contract irrelevant edges without solving");
    add_io(reduce_cmd, o);
    add_solver(reduce_cmd, o);
    reduce_cmd->add_option("--trace", o.trace, "Apex set, contracted edges and early result");
    reduce_cmd->add_option("--stats", o.stats, "Per-iteration CSV statistics");
    reduce_cmd->add_option("--hint", o.hint, "Wall certificate of the input graph");

    auto* verify_cmd = app.add_subcommand("verify", "Check a result, wall or embedding certificate");
    add_io(verify_cmd, o);
    verify_cmd->add_option("-c,--cert", o.cert, "Certificate file")->required();
    verify_cmd->add_option("-k,--k", o.verify_k, "Expected budget")->check(CLI::NonNegativeNumber);

    auto* embed_cmd = app.add_subcommand("embed", "Planar embedding or Kuratowski subdivision");
    add_io(embed_cmd, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }

    if (solve_cmd->parsed() && !o.stats.empty() && !o.output.empty() && o.output == o.stats) {
        err << "error: --stats and --output name the same file\n";
        return failure;
    }

    const Io io(in, out);
    try {
        if (gen->parsed()) return cmd_gen(o, io);
        if (solve_cmd->parsed()) return cmd_solve(o, io, err);
        if (oracle_cmd->parsed()) return cmd_oracle(o, io, err);
        if (reduce_cmd->parsed()) return cmd_reduce(o, io, err);
        if (verify_cmd->parsed()) return cmd_verify(o, io, err);
        if (embed_cmd->parsed()) return cmd_embed(o, io);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
    return failure;
}

}  // namespace pcontract::cli
