#include "gsx/lattice.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <queue>
#include <set>

#include <json.hpp>

#include "gsx/errors.hpp"

namespace gsx {

namespace {

constexpr std::array<Coord, 4> kDirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }

void require_spec(const GridSpec& spec) {
    if (spec.width < 2 || spec.height < 2) {
        throw DomainError("grid must be at least 2x2");
    }
}

bool is_measurement(CellRole r) {
    return r == CellRole::MeasX || r == CellRole::MeasY || r == CellRole::MeasZ;
}

}  // namespace

char role_char(CellRole r) {
    switch (r) {
        case CellRole::Free: return '.';
        case CellRole::Target: return 'T';
        case CellRole::MeasX: return 'X';
        case CellRole::MeasY: return 'Y';
        case CellRole::MeasZ: return 'Z';
        case CellRole::Junction: return 'J';
    }
    return '?';
}

CellRole role_from_char(char c) {
    switch (c) {
        case '.': return CellRole::Free;
        case 'T': return CellRole::Target;
        case 'X': return CellRole::MeasX;
        case 'Y': return CellRole::MeasY;
        case 'Z': return CellRole::MeasZ;
        case 'J': return CellRole::Junction;
    }
    throw DomainError(std::string("unknown cell role '") + c + "'");
}

GridPattern::GridPattern(GridSpec spec) : spec_(spec) {
    require_spec(spec_);
    roles_.assign(std::size_t(spec_.width) * std::size_t(spec_.height), CellRole::Free);
}

CellRole GridPattern::at(Coord c) const {
    if (!spec_.contains(c)) {
        throw DomainError("coordinate (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                          ") outside grid");
    }
    return roles_[std::size_t(spec_.vertex_id(c))];
}

void GridPattern::set(Coord c, CellRole role) {
    CellRole cur = at(c);
    if (cur == role) return;
    if (cur == CellRole::Target && is_measurement(role)) {
        throw DomainError("target cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                          ") cannot be measured");
    }
    roles_[std::size_t(spec_.vertex_id(c))] = role;
}

std::vector<std::pair<Coord, CellRole>> GridPattern::cells() const {
    std::vector<std::pair<Coord, CellRole>> out;
    for (int y = 0; y < spec_.height; ++y) {
        for (int x = 0; x < spec_.width; ++x) {
            CellRole r = roles_[std::size_t(spec_.vertex_id({x, y}))];
            if (r != CellRole::Free) out.push_back({{x, y}, r});
        }
    }
    return out;
}

std::string GridPattern::to_json() const {
    nlohmann::json j;
    j["width"] = spec_.width;
    j["height"] = spec_.height;
    auto cells_json = nlohmann::json::array();
    for (const auto& [c, r] : cells()) {
        cells_json.push_back(
            {{"x", c.x}, {"y", c.y}, {"role", std::string(1, role_char(r))}});
    }
    j["cells"] = cells_json;
    return j.dump();
}

GridPattern GridPattern::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    GridPattern p({j.at("width").get<int>(), j.at("height").get<int>()});
    for (const auto& cell : j.at("cells")) {
        std::string role = cell.at("role");
        if (role.size() != 1) throw DomainError("role must be a single character");
        p.set({cell.at("x").get<int>(), cell.at("y").get<int>()}, role_from_char(role[0]));
    }
    return p;
}

Graph cluster_graph(const GridSpec& spec) {
    require_spec(spec);
    Graph g;
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) g.add_vertex(spec.vertex_id({x, y}));
    }
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            if (x + 1 < spec.width) {
                g.add_edge(spec.vertex_id({x, y}), spec.vertex_id({x + 1, y}));
            }
            if (y + 1 < spec.height) {
                g.add_edge(spec.vertex_id({x, y}), spec.vertex_id({x, y + 1}));
            }
        }
    }
    return g;
}

int manhattan(Coord a, Coord b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

std::vector<Patch> find_free_patches(const GridPattern& p) {
    const GridSpec& spec = p.spec();
    std::vector<char> seen(std::size_t(spec.width) * std::size_t(spec.height), 0);
    std::vector<Patch> out;
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            Coord start{x, y};
            if (seen[std::size_t(spec.vertex_id(start))] || !p.is_free(start)) continue;
            Patch patch;
            std::deque<Coord> queue{start};
            seen[std::size_t(spec.vertex_id(start))] = 1;
            while (!queue.empty()) {
                Coord c = queue.front();
                queue.pop_front();
                patch.cells.push_back(c);
                for (Coord d : kDirs) {
                    Coord nb = c + d;
                    if (!spec.contains(nb) || seen[std::size_t(spec.vertex_id(nb))]) continue;
                    if (!p.is_free(nb)) continue;
                    seen[std::size_t(spec.vertex_id(nb))] = 1;
                    queue.push_back(nb);
                }
            }
            std::sort(patch.cells.begin(), patch.cells.end(),
                      [](Coord a, Coord b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
            out.push_back(std::move(patch));
        }
    }
    return out;
}

namespace {

bool junction_qualifies(const GridPattern& p, Coord c) {
    int free_nbrs = 0;
    for (Coord d : kDirs) {
        Coord nb = c + d;
        if (p.spec().contains(nb) && p.is_free(nb)) ++free_nbrs;
    }
    return free_nbrs >= 2;
}

/// BFS through FREE cells from `start`; `start` itself need not be FREE.
std::vector<int> free_bfs(const GridPattern& p, Coord start) {
    const GridSpec& spec = p.spec();
    std::vector<int> dist(std::size_t(spec.width) * std::size_t(spec.height), -1);
    std::deque<Coord> queue{start};
    dist[std::size_t(spec.vertex_id(start))] = 0;
    while (!queue.empty()) {
        Coord c = queue.front();
        queue.pop_front();
        int dc = dist[std::size_t(spec.vertex_id(c))];
        for (Coord d : kDirs) {
            Coord nb = c + d;
            if (!spec.contains(nb) || dist[std::size_t(spec.vertex_id(nb))] >= 0) continue;
            if (!p.is_free(nb)) continue;
            dist[std::size_t(spec.vertex_id(nb))] = dc + 1;
            queue.push_back(nb);
        }
    }
    return dist;
}

bool is_pattern_cell(CellRole r) {
    // Junction candidates: path and vertex cells, not destroyed (Y/Z) ones.
    return r == CellRole::MeasX || r == CellRole::Target || r == CellRole::Junction;
}

}  // namespace

NearestResult dijkstra_nearest(const GridPattern& p, const std::vector<Coord>& s) {
    if (s.empty()) throw DomainError("candidate set S is empty");
    const GridSpec& spec = p.spec();
    std::vector<Coord> pattern;
    for (const auto& [c, r] : p.cells()) {
        if (is_pattern_cell(r)) pattern.push_back(c);
    }
    if (pattern.empty()) throw DomainError("pattern has no marked cells");

    // Nearest candidate first: multi-source BFS from the pattern.
    std::vector<int> dist(std::size_t(spec.width) * std::size_t(spec.height), -1);
    std::deque<Coord> queue;
    for (Coord c : pattern) {
        dist[std::size_t(spec.vertex_id(c))] = 0;
        queue.push_back(c);
    }
    std::set<Coord> targets(s.begin(), s.end());
    while (!queue.empty()) {
        Coord c = queue.front();
        queue.pop_front();
        int dc = dist[std::size_t(spec.vertex_id(c))];
        for (Coord d : kDirs) {
            Coord nb = c + d;
            if (!spec.contains(nb) || dist[std::size_t(spec.vertex_id(nb))] >= 0) continue;
            if (!p.is_free(nb) && targets.count(nb) == 0) continue;
            dist[std::size_t(spec.vertex_id(nb))] = dc + 1;
            // Candidates are endpoints, not corridors.
            if (targets.count(nb) == 0) queue.push_back(nb);
        }
    }
    std::optional<Coord> best_n;
    for (Coord c : s) {
        if (!spec.contains(c)) throw DomainError("candidate outside grid");
        int dc = dist[std::size_t(spec.vertex_id(c))];
        if (dc < 0) continue;
        if (!best_n || dc < dist[std::size_t(spec.vertex_id(*best_n))] ||
            (dc == dist[std::size_t(spec.vertex_id(*best_n))] &&
             std::tie(c.y, c.x) < std::tie(best_n->y, best_n->x))) {
            best_n = c;
        }
    }
    if (!best_n) throw NoPathError("no candidate reachable from the pattern");
    Coord n = *best_n;

    // Junction: nearest qualifying pattern cell as seen from n.
    std::vector<int> from_n = free_bfs(p, n);
    auto cell_distance = [&](Coord c) {
        int best = -1;
        for (Coord d : kDirs) {
            Coord nb = c + d;
            if (!spec.contains(nb)) continue;
            int dn = nb == n ? 0 : (p.is_free(nb) ? from_n[std::size_t(spec.vertex_id(nb))] : -1);
            if (dn >= 0 && (best < 0 || dn + 1 < best)) best = dn + 1;
        }
        return best;
    };
    std::optional<Coord> best_j, best_any;
    int best_jd = -1, best_anyd = -1;
    for (Coord c : pattern) {
        int d = cell_distance(c);
        if (d < 0) continue;
        auto better = [&](std::optional<Coord>& cur, int& curd) {
            if (!cur || d < curd ||
                (d == curd && std::tie(c.y, c.x) < std::tie(cur->y, cur->x))) {
                cur = c;
                curd = d;
            }
        };
        better(best_any, best_anyd);
        if (junction_qualifies(p, c)) better(best_j, best_jd);
    }
    if (!best_any) throw NoPathError("no pattern cell can reach the chosen candidate");
    Coord j = best_j.value_or(*best_any);
    return {n, j, best_j ? best_jd : best_anyd};
}

namespace {

/// Rasterizes a diagonal segment (|dx| == |dy|) as an x-first staircase.
std::vector<Coord> raster_diagonal(Coord from, Coord to) {
    int steps = std::abs(to.x - from.x);
    int sx = to.x > from.x ? 1 : -1;
    int sy = to.y > from.y ? 1 : -1;
    std::vector<Coord> out{from};
    Coord c = from;
    for (int i = 0; i < steps; ++i) {
        c.x += sx;
        out.push_back(c);
        c.y += sy;
        out.push_back(c);
    }
    return out;
}

std::optional<std::vector<Coord>> try_branch(const GridPattern& p, Coord a, Coord b,
                                             Coord turn) {
    const GridSpec& spec = p.spec();
    if (!spec.contains(turn)) return std::nullopt;
    if (std::abs(turn.x - a.x) != std::abs(turn.y - a.y)) return std::nullopt;
    if (std::abs(turn.x - b.x) != std::abs(turn.y - b.y)) return std::nullopt;
    std::vector<Coord> path = raster_diagonal(a, turn);
    std::vector<Coord> second = raster_diagonal(turn, b);
    path.insert(path.end(), second.begin() + 1, second.end());
    std::set<Coord> seen;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!seen.insert(path[i]).second) return std::nullopt;  // not simple
        if (i == 0 || i + 1 == path.size()) continue;
        if (!p.is_free(path[i])) return std::nullopt;
    }
    return path;
}

}  // namespace

std::optional<std::vector<Coord>> one_turn_staircase(const GridPattern& p, Coord a, Coord b) {
    if (a == b) throw DomainError("staircase endpoints coincide");
    if ((a.x + a.y + b.x + b.y) % 2 != 0) return std::nullopt;  // no integer turn column
    // Ascending staircase through a (x - y const), descending through b.
    int xi1 = (a.x - a.y + b.x + b.y) / 2;
    if (auto path = try_branch(p, a, b, {xi1, xi1 - a.x + a.y})) return path;
    // Descending through a (x + y const), ascending through b.
    int xi2 = (a.x + a.y + b.x - b.y) / 2;
    return try_branch(p, a, b, {xi2, a.x + a.y - xi2});
}

GridPattern one_turn_zipper(Coord n, Coord j, const GridPattern& p) {
    auto path = one_turn_staircase(p, j, n);
    if (!path) throw NoPathError("no free one-turn staircase between junction and vertex");
    GridPattern out = p;
    for (std::size_t i = 1; i + 1 < path->size(); ++i) out.set((*path)[i], CellRole::MeasX);
    return out;
}

std::optional<std::vector<Coord>> route_on_graph(const GridPattern& p, const Graph& g,
                                                 Coord from, Coord to) {
    const GridSpec& spec = p.spec();
    int src = spec.vertex_id(from), dst = spec.vertex_id(to);
    if (!g.has_vertex(src) || !g.has_vertex(dst)) return std::nullopt;

    // Dijkstra over (vertex, incoming direction): continuing straight
    // costs 3 per step, turning costs 1.
    using State = std::pair<int, Coord>;  // vertex id, incoming delta
    std::map<State, int> best;
    std::map<State, State> parent;
    using QueueEntry = std::pair<int, State>;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    State start{src, {0, 0}};
    best[start] = 0;
    queue.push({0, start});
    std::optional<State> goal;
    while (!queue.empty()) {
        auto [cost, state] = queue.top();
        queue.pop();
        if (cost > best.at(state)) continue;
        if (state.first == dst) {
            goal = state;
            break;
        }
        Coord cur = spec.coord_of(state.first);
        for (int nb : g.neighbors(state.first)) {
            Coord nc = spec.coord_of(nb);
            if (nb != dst && !p.is_free(nc)) continue;
            Coord delta{nc.x - cur.x, nc.y - cur.y};
            int step = delta == state.second ? 3 : 1;
            State next{nb, delta};
            auto it = best.find(next);
            if (it != best.end() && it->second <= cost + step) continue;
            best[next] = cost + step;
            parent[next] = state;
            queue.push({cost + step, next});
        }
    }
    if (!goal) return std::nullopt;
    std::vector<Coord> path;
    State cur = *goal;
    while (true) {
        path.push_back(spec.coord_of(cur.first));
        auto it = parent.find(cur);
        if (it == parent.end()) break;
        cur = it->second;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace gsx
