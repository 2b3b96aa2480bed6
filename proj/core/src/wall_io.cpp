#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pcontract/error.hpp"
#include "pcontract/walls.hpp"

namespace pcontract {

namespace {

std::string format(WallPos p) { return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")"; }

std::vector<Vertex> parse_ids(const std::string& text, std::size_t line_no) {
    std::istringstream ss(text);
    std::vector<Vertex> out;
    long long v = 0;
    while (ss >> v) {
        if (v < 0 || v > 0xffffffffLL) throw error(errc::parse, "line " + std::to_string(line_no) + ": bad vertex id");
        out.push_back(static_cast<Vertex>(v));
    }
    if (!ss.eof()) throw error(errc::parse, "line " + std::to_string(line_no) + ": bad vertex list");
    return out;
}

}  // namespace

void write_wall(std::ostream& out, const Wall& w) {
    out << "height " << w.height << '\n';
    for (const auto& [p, v] : w.nodes) out << "pos " << format(p) << " -> " << v << '\n';
    for (const auto& [e, path] : w.paths) {
        if (path.size() <= 2) continue;
        out << "pos " << format(e.first) << '-' << format(e.second) << " ->";
        for (Vertex v : path) out << ' ' << v;
        out << '\n';
    }
}

std::string to_wall_string(const Wall& w) {
    std::ostringstream ss;
    write_wall(ss, w);
    return ss.str();
}

Wall parse_wall(std::istream& in, std::shared_ptr<const Graph> host) {
    Wall w;
    w.host = std::move(host);
    std::map<WallEdge, std::vector<Vertex>> explicit_paths;
    std::string line;
    std::size_t line_no = 0;
    bool have_height = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        int a = 0, b = 0, c = 0, d = 0, consumed = 0;
        if (std::sscanf(line.c_str(), " height %d %n", &a, &consumed) == 1 && consumed == static_cast<int>(line.size())) {
            w.height = a;
            have_height = true;
        } else if (std::sscanf(line.c_str(), " pos (%d,%d)-(%d,%d) -> %n", &a, &b, &c, &d, &consumed) == 4 &&
                   consumed > 0) {
            WallPos p{a, b}, q{c, d};
            auto ids = parse_ids(line.substr(static_cast<std::size_t>(consumed)), line_no);
            if (q < p) {
                std::swap(p, q);
                std::reverse(ids.begin(), ids.end());
            }
            explicit_paths[{p, q}] = std::move(ids);
        } else if (std::sscanf(line.c_str(), " pos (%d,%d) -> %n", &a, &b, &consumed) == 2 && consumed > 0) {
            auto ids = parse_ids(line.substr(static_cast<std::size_t>(consumed)), line_no);
            if (ids.size() != 1) throw error(errc::parse, "line " + std::to_string(line_no) + ": expected one vertex");
            w.nodes[WallPos{a, b}] = ids[0];
        } else {
            throw error(errc::parse, "line " + std::to_string(line_no) + ": unrecognised wall line");
        }
    }
    if (!have_height) throw error(errc::parse, "wall certificate lacks a height line");
    if (w.height < 2) throw error(errc::parse, "wall height must be at least 2");
    for (const auto& e : wall_edges(w.height)) {
        auto it = explicit_paths.find(e);
        if (it != explicit_paths.end()) {
            w.paths[e] = it->second;
            continue;
        }
        auto a_it = w.nodes.find(e.first);
        auto b_it = w.nodes.find(e.second);
        if (a_it == w.nodes.end() || b_it == w.nodes.end()) {
            throw error(errc::parse, "wall certificate misses position " + format(a_it == w.nodes.end() ? e.first : e.second));
        }
        w.paths[e] = {a_it->second, b_it->second};
    }
    w.perimeter = compute_perimeter(w);
    return w;
}

Wall parse_wall_string(const std::string& text, std::shared_ptr<const Graph> host) {
    std::istringstream ss(text);
    return parse_wall(ss, std::move(host));
}

}  // namespace pcontract
