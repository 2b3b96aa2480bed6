#include "pcontract/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pcontract/error.hpp"

namespace pcontract {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::uint64_t parse_number(const std::string& tok, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw error(errc::parse, "line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" + tok + "'");
    }
    return value;
}

Vertex parse_vertex(const std::string& tok, std::size_t line_no) {
    auto v = parse_number(tok, line_no);
    if (v > 0xffffffffu) throw error(errc::parse, "line " + std::to_string(line_no) + ": vertex id out of range");
    return static_cast<Vertex>(v);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    bool seen_data = false;
    std::optional<std::uint64_t> declared_edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "p") {
            if (seen_data || toks.size() != 3) {
                throw error(errc::parse, "line " + std::to_string(line_no) + ": malformed or misplaced 'p' header");
            }
            auto n = parse_number(toks[1], line_no);
            declared_edges = parse_number(toks[2], line_no);
            for (std::uint64_t v = 0; v < n; ++v) vertices.push_back(static_cast<Vertex>(v));
            seen_data = true;
            continue;
        }
        seen_data = true;
        if (toks.size() == 1) {
            vertices.push_back(parse_vertex(toks[0], line_no));
        } else if (toks.size() == 2) {
            Vertex a = parse_vertex(toks[0], line_no);
            Vertex b = parse_vertex(toks[1], line_no);
            if (a == b) throw error(errc::parse, "line " + std::to_string(line_no) + ": loop edge");
            edges.push_back(make_edge(a, b));
            vertices.push_back(a);
            vertices.push_back(b);
        } else {
            throw error(errc::parse, "line " + std::to_string(line_no) + ": expected 'u v'");
        }
    }
    Graph g(std::move(vertices), edges);
    if (declared_edges && *declared_edges != g.edge_count()) {
        throw error(errc::parse, "header declares " + std::to_string(*declared_edges) + " edges, found " +
                                     std::to_string(g.edge_count()));
    }
    return g;
}

Graph parse_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::io, "cannot open " + path);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    const auto& vs = g.vertices();
    bool dense = vs.empty() || (vs.front() == 0 && vs.back() + 1 == vs.size());
    if (dense) out << "p " << vs.size() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    if (!dense) {
        for (Vertex v : vs) {
            if (g.degree(v) == 0) out << v << '\n';
        }
    }
}

std::string to_edge_list_string(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace pcontract
