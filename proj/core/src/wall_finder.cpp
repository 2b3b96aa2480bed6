#include <algorithm>
#include <array>
#include <climits>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "pcontract/error.hpp"
#include "pcontract/walls.hpp"

namespace pcontract {

namespace {

// Bricks of the infinite lattice are (row, left column) with left column
// congruent to row mod 2; brick (i, c) spans rows i, i+1 and columns c..c+2.
using Brick = std::pair<int, int>;

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
int parity(int x) { return ((x % 2) + 2) % 2; }

std::array<WallPos, 6> brick_cycle(Brick b) {
    auto [i, c] = b;
    return {WallPos{i, c}, WallPos{i, c + 1}, WallPos{i, c + 2}, WallPos{i + 1, c + 2}, WallPos{i + 1, c + 1},
            WallPos{i + 1, c}};
}

/// The two bricks sharing lattice edge p-q.
std::array<Brick, 2> bricks_of_edge(WallPos p, WallPos q) {
    if (q < p) std::swap(p, q);
    if (p.row == q.row) {
        const int x = p.col;
        const int r = p.row;
        int top = parity(x) == parity(r) ? x : x - 1;
        int bottom = parity(x) == parity(r - 1) ? x : x - 1;
        return {Brick{r, top}, Brick{r - 1, bottom}};
    }
    return {Brick{p.row, p.col}, Brick{p.row, p.col - 2}};
}

struct Assignment {
    std::unordered_map<Vertex, WallPos> pos;
    std::map<WallPos, Vertex> at;
    std::map<Brick, std::size_t> face_of_brick;
    std::vector<std::size_t> faces;
};

bool is_hex(const std::vector<Vertex>& face) {
    if (face.size() != 6) return false;
    std::array<Vertex, 6> s;
    std::copy(face.begin(), face.end(), s.begin());
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

/// Assigns face walk positions to brick cells: walk[(start + step*j) % 6]
/// goes to cell j. Fails without side effects on any clash.
bool place(Assignment& a, const std::vector<Vertex>& walk, std::size_t start, int step, Brick b, std::size_t face) {
    if (a.face_of_brick.count(b)) return false;
    auto cells = brick_cycle(b);
    for (int j = 0; j < 6; ++j) {
        Vertex v = walk[(start + static_cast<std::size_t>(6 + step * j)) % 6];
        auto pv = a.pos.find(v);
        if (pv != a.pos.end() && pv->second != cells[j]) return false;
        auto vp = a.at.find(cells[j]);
        if (vp != a.at.end() && vp->second != v) return false;
    }
    for (int j = 0; j < 6; ++j) {
        Vertex v = walk[(start + static_cast<std::size_t>(6 + step * j)) % 6];
        a.pos[v] = cells[j];
        a.at[cells[j]] = v;
    }
    a.face_of_brick[b] = face;
    a.faces.push_back(face);
    return true;
}

Assignment propagate(const Embedding& emb, const std::vector<char>& hex, std::size_t seed, std::size_t start,
                     int step) {
    Assignment a;
    const auto& faces = emb.faces();
    std::vector<char> done(faces.size(), 0);
    std::deque<std::pair<std::size_t, Brick>> queue;
    if (!place(a, faces[seed], start, step, Brick{0, 0}, seed)) return a;
    done[seed] = 1;
    queue.emplace_back(seed, Brick{0, 0});
    while (!queue.empty()) {
        auto [f, b] = queue.front();
        queue.pop_front();
        const auto& walk = faces[f];
        for (std::size_t i = 0; i < 6; ++i) {
            Vertex x = walk[i];
            Vertex y = walk[(i + 1) % 6];
            std::size_t t = emb.face_of(y, x);
            if (done[t] || !hex[t]) continue;
            WallPos px = a.pos.at(x);
            WallPos py = a.pos.at(y);
            auto both = bricks_of_edge(px, py);
            Brick nb = both[0] == b ? both[1] : both[0];
            auto cells = brick_cycle(nb);
            const auto& tw = faces[t];
            std::size_t jy = static_cast<std::size_t>(std::find(tw.begin(), tw.end(), y) - tw.begin());
            int ky = static_cast<int>(std::find(cells.begin(), cells.end(), py) - cells.begin());
            int kx = static_cast<int>(std::find(cells.begin(), cells.end(), px) - cells.begin());
            int dir = (ky + 1) % 6 == kx ? 1 : -1;
            std::size_t start_t = (jy + static_cast<std::size_t>(6 * 6 - dir * ky)) % 6;
            if (place(a, tw, start_t, dir, nb, t)) {
                done[t] = 1;
                queue.emplace_back(t, nb);
            }
        }
    }
    return a;
}

struct Window {
    int height = 0;
    int row = 0;
    int col = 0;
};

/// Largest h x h block of bricks forming an elementary wall, top-left first.
Window best_window(const Assignment& a) {
    Window best;
    for (int p = 0; p < 2; ++p) {
        // Column index along a brick row; for origin rows of parity p this
        // puts the bricks of one wall into a square block.
        auto xcoord = [p](int cl) { return p == 0 ? floor_div2(cl) : floor_div2(cl + 1); };
        std::map<int, std::map<int, int>> run;
        for (const auto& [b, f] : a.face_of_brick) run[b.first][xcoord(b.second)] = 0;
        for (auto& [row, xs] : run) {
            for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
                auto next = xs.find(it->first + 1);
                it->second = 1 + (next == xs.end() ? 0 : next->second);
            }
        }
        for (const auto& [row, xs] : run) {
            if (parity(row) != p) continue;
            for (const auto& [x, len] : xs) {
                int minrun = INT_MAX;
                for (int d = 0;; ++d) {
                    auto rit = run.find(row + d);
                    if (rit == run.end()) break;
                    auto xit = rit->second.find(x);
                    if (xit == rit->second.end()) break;
                    minrun = std::min(minrun, xit->second);
                    if (minrun < d + 1) break;
                    const int col = p == 0 ? 2 * x : 2 * x - 1;
                    const int h = d + 1;
                    bool better = h > best.height ||
                                  (h == best.height && std::pair(row, col) < std::pair(best.row, best.col));
                    if (better) best = {h, row, col};
                }
            }
        }
    }
    return best;
}

std::optional<Wall> wall_from_window(const Assignment& a, const Window& win, std::shared_ptr<const Graph> host) {
    if (win.height < 2) return std::nullopt;
    Wall w;
    w.height = win.height;
    w.host = host;
    for (WallPos p : wall_positions(win.height)) {
        auto it = a.at.find(WallPos{win.row + p.row, win.col + p.col});
        if (it == a.at.end()) return std::nullopt;
        w.nodes[p] = it->second;
    }
    for (const auto& e : wall_edges(win.height)) w.paths[e] = {w.nodes[e.first], w.nodes[e.second]};
    w.perimeter = compute_perimeter(w);
    if (!validate_wall(w)) return std::nullopt;
    return w;
}

std::optional<Wall> search(const Graph& g) {
    Graph core = two_core(g);
    if (core.edge_count() == 0) return std::nullopt;
    auto emb = embed(core);
    if (!emb) throw error(errc::precondition, "wall search needs a planar graph");
    const auto& faces = emb->faces();
    std::vector<char> hex(faces.size(), 0);
    for (std::size_t f = 0; f < faces.size(); ++f) hex[f] = is_hex(faces[f]);

    auto host = std::make_shared<const Graph>(g);
    std::vector<char> visited(faces.size(), 0);
    std::optional<Wall> best;
    for (std::size_t seed = 0; seed < faces.size(); ++seed) {
        if (!hex[seed] || visited[seed]) continue;
        // All twelve seedings of a honeycomb succeed; keep the best window.
        Assignment chosen;
        Window win;
        for (int step : {1, -1}) {
            for (std::size_t start = 0; start < 6; ++start) {
                Assignment a = propagate(*emb, hex, seed, start, step);
                Window aw = best_window(a);
                if (aw.height > win.height || (aw.height == win.height && a.faces.size() > chosen.faces.size())) {
                    chosen = std::move(a);
                    win = aw;
                }
            }
        }
        visited[seed] = 1;
        for (std::size_t f : chosen.faces) visited[f] = 1;
        if (win.height < 2 || (best && win.height <= best->height)) continue;
        if (auto w = wall_from_window(chosen, win, host)) best = std::move(w);
    }
    return best;
}

}  // namespace

std::optional<Wall> find_wall(const Graph& g, int min_height, const Wall* hint) {
    if (!is_planar(g)) throw error(errc::precondition, "wall search needs a planar graph");
    if (hint) {
        Wall w = rebind_wall(*hint, std::make_shared<const Graph>(g));
        if (w.height >= min_height && validate_wall(w)) return w;
    }
    auto w = search(g);
    if (w && w->height >= std::max(min_height, 2)) return w;
    return std::nullopt;
}

std::optional<Wall> largest_wall(const Graph& g) { return find_wall(g, 2); }

}  // namespace pcontract
